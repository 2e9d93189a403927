#ifndef MOTREC_ANALYSIS_HPP
#define MOTREC_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motrec/word.hpp"

namespace motrec {

enum class Engine { naive, automaton, automatic };

Engine parse_engine(std::string_view name);
std::string_view to_string(Engine engine);

/// Empirical complexity of a finite prefix. Vectors are indexed by factor length.
struct ComplexityProfile {
    std::size_t n_max = 0;
    std::size_t prefix_len = 0;
    bool stable = false;
    std::vector<std::uint64_t> P;  // P[n], n = 0..n_max; P[0] = 1
    std::vector<std::int64_t> S;   // S[n] = P(n+1) - P(n), n = 0..n_max
    std::vector<std::uint64_t> Pf; // window complexity, n = 0..n_max; Pf[0] = 1
};

/// Distinct-factor counts for lengths 0..max_len. Requires max_len <= |u|.
std::vector<std::uint64_t> factor_counts(const FiniteWord& u, std::size_t max_len, Engine engine);

/// Profile of `u` up to n_max. Throws std::invalid_argument unless 1 <= n_max < |u|.
/// `stable` is left false; only stabilize() sets it.
ComplexityProfile count_factors(const FiniteWord& u, std::size_t n_max, Engine engine = Engine::automatic);

/// Pf[n] = number of distinct blocks u[jn .. jn+n-1], n = 0..n_max.
/// Throws std::invalid_argument when n_max > |u|.
std::vector<std::uint64_t> window_complexity(const FiniteWord& u, std::size_t n_max);

struct SpecialFactor {
    std::string factor;
    std::size_t right_degree = 0;
    std::size_t left_degree = 0;

    bool right_special() const { return right_degree >= 2; }
    bool left_special() const { return left_degree >= 2; }
    bool bispecial() const { return right_special() && left_special(); }
};

struct SpecialFactorReport {
    std::size_t length = 0;
    std::vector<SpecialFactor> factors;  // right- or left-special, sorted by glyph string
    std::int64_t right_excess = 0;       // sum over all length-n factors of (d+ - 1)
    std::int64_t left_excess = 0;        // sum over all length-n factors of (d- - 1)

    std::size_t right_special_count() const;
    std::size_t left_special_count() const;
    std::size_t bispecial_count() const;
};

/// Extensions are counted from occurrences that have a neighbour inside `u`.
/// Throws std::invalid_argument unless 1 <= n and n + 1 < |u|.
SpecialFactorReport special_factors(const FiniteWord& u, std::size_t n);

/// Right and left excess for every length 0..n_max, from one automaton build.
struct ExtensionIdentity {
    std::vector<std::int64_t> right;
    std::vector<std::int64_t> left;
};
ExtensionIdentity extension_excess(const FiniteWord& u, std::size_t n_max);

enum class Verdict { pass, fail, inconclusive };
std::string_view to_string(Verdict verdict);

struct ModuloCheck {
    std::string factor;
    std::size_t modulus = 0;
    Verdict verdict = Verdict::pass;
    std::optional<std::size_t> missing_residue;
    std::size_t occurrences = 0;
};

struct ModuloRecurrenceReport {
    std::size_t n_max = 0;
    std::size_t mod_max = 0;
    std::size_t prefix_len = 0;
    std::vector<ModuloCheck> checks;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t inconclusive = 0;

    bool all_pass() const { return failed == 0 && inconclusive == 0; }
};

/// For every factor of length 1..n_max and modulus 1..mod_max, checks that the
/// occurrence positions cover every residue. A factor seen fewer than mod_max
/// times that misses a residue is inconclusive, not failed. mod_max <= 64.
ModuloRecurrenceReport check_modulo_recurrence(const FiniteWord& u, std::size_t n_max, std::size_t mod_max);

inline constexpr std::size_t kInitialPrefix = 4096;
inline constexpr std::size_t kDefaultPrefixCap = std::size_t{1} << 24;

struct StabilizeOptions {
    std::size_t cap = kDefaultPrefixCap;
    Engine engine = Engine::automaton;
    std::function<void(std::size_t prefix_len)> on_step;
};

struct Stabilized {
    std::size_t prefix_len = 0;
    ComplexityProfile profile;
    FiniteWord word;  // the analysed prefix
};

/// Doubles the prefix length from 4096 until P(0..n_max+1) is identical at three
/// consecutive lengths L, 2L, 4L, and returns the profile at the last one. At the
/// cap the profile of the capped prefix is returned with stable = false.
/// Throws std::invalid_argument when n_max is 0 or n_max + 2 exceeds the cap.
Stabilized stabilize(const WordSource& source, std::size_t n_max, const StabilizeOptions& options = {});

} // namespace motrec

#endif // MOTREC_ANALYSIS_HPP
