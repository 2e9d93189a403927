#ifndef MOTREC_RUN_HPP
#define MOTREC_RUN_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "motrec/analysis.hpp"
#include "motrec/transform.hpp"

namespace motrec {

enum class Command { generate, transform, complexity, check_mr, verify, selftest };
enum class Format { csv, json };
enum class Theorem { sturmian, general, internal };
enum class SourceModel { empirical, sturmian, full };

/// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// Everything that determines one run; equal configs give byte-identical reports.
struct RunConfig {
    Command command = Command::generate;
    std::string source;  // generator descriptor; empty means standard input (transform only)
    std::optional<SubstitutionSpec> substitution;
    std::optional<std::size_t> length;
    std::size_t n_max = 10;
    std::size_t mod_max = 10;
    Engine engine = Engine::automatic;
    std::size_t prefix_cap = kDefaultPrefixCap;
    Format format = Format::csv;
    std::string output_path;  // empty means standard output
    Theorem theorem = Theorem::sturmian;
    SourceModel source_model = SourceModel::empirical;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
};

/// Executes a validated config. Usage errors (bad descriptors, inconsistent
/// flags, n_max beyond the cap) are reported on `err` and return kExitUsage.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (args[0] is the program name) and runs them.
/// MOTREC_PREFIX_CAP in the environment sets the default prefix cap.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace motrec

#endif // MOTREC_RUN_HPP
