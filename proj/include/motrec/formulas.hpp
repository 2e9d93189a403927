#ifndef MOTREC_FORMULAS_HPP
#define MOTREC_FORMULAS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motrec/analysis.hpp"
#include "motrec/word.hpp"

namespace motrec {

/// Piecewise branches of the closed forms for P_v.
///
/// The first seven belong to the general (modulo-recurrent source) formula:
/// short lengths n < k+l split on m0 = min(k,l) and M0 = max(k,l); long lengths
/// n = (k+l)q + alpha split on alpha. The last four are the Sturmian closed forms.
enum class Branch {
    short_up_to_m0,        // I.1    n <= m0
    short_mid_k_below_l,   // I.2    m0 < n <= M0, k < l
    short_mid_l_below_k,   // I.3    m0 < n <= M0, l < k
    short_above_M0,        // I.4    M0 < n < k+l
    long_aligned,          // II.a0  alpha = 0
    long_alpha_up_to_l,    // II.a<=l  0 < alpha <= l
    long_alpha_above_l,    // II.a>l   l < alpha < k+l
    sturmian_square,       // n^2 + 2n
    sturmian_linear_plus,  // (k+1)n + k
    sturmian_square_minus, // n^2 + 2n - 1
    sturmian_linear,       // (k+1)n + k - 1
};

std::string_view to_string(Branch branch);

struct BranchParams {
    std::size_t n = 0, k = 0, l = 0;
    std::size_t q = 0, alpha = 0, beta = 0;  // only meaningful when n >= k + l
    std::size_t m0 = 0, M0 = 0;
};

struct BranchedValue {
    std::int64_t value = 0;
    Branch branch = Branch::short_up_to_m0;
    BranchParams params;
};

/// Complexity function of a source word, with an optional validity bound.
class SourceComplexity {
public:
    using Function = std::function<std::int64_t(std::size_t)>;
    static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

    SourceComplexity(std::string description, Function P, Function S, std::size_t max_length = kUnbounded);

    /// P(m) = m + 1, S(m) = 1.
    static SourceComplexity sturmian();
    /// P(m) = a^m over an a-letter alphabet.
    static SourceComplexity full(std::size_t alphabet_size);
    /// Backed by a stable profile; queries beyond its n_max throw std::out_of_range.
    /// Throws std::invalid_argument for an unstable profile.
    static SourceComplexity empirical(const ComplexityProfile& profile, std::string label);

    std::int64_t P(std::size_t m) const;
    std::int64_t S(std::size_t m) const;

    const std::string& description() const { return description_; }
    std::size_t max_length() const { return max_length_; }

private:
    std::string description_;
    Function P_;
    Function S_;
    std::size_t max_length_;
};

BranchParams branch_params(std::size_t n, std::size_t k, std::size_t l);

/// P_v(n) for a modulo-recurrent source, transcribed piece by piece.
/// Throws std::invalid_argument when n, k or l is 0.
BranchedValue eval_general(std::size_t n, std::size_t k, std::size_t l, const SourceComplexity& source);

/// P_v(n) for a Sturmian source.
BranchedValue eval_sturmian(std::size_t n, std::size_t k, std::size_t l);

/// Largest argument eval_general passes to P or S for any n <= n_max.
std::size_t source_length_needed(std::size_t n_max, std::size_t k, std::size_t l);

/// Window complexity of v at length k+l against the source complexity at k+1,
/// and against P_v(k+l).
struct CorollaryReport {
    std::size_t k = 0, l = 0;
    std::uint64_t window_count = 0;        // Pf_v(k+l)
    std::uint64_t factor_count = 0;        // P_v(k+l)
    std::int64_t claimed_window_count = 0; // P_u(k+1)
    bool window_claim_holds = false;       // window_count == claimed_window_count
    bool complexities_differ = false;      // window_count != factor_count
    Verdict verdict = Verdict::inconclusive;
};

CorollaryReport corollary_check(std::size_t k, std::size_t l, const SourceComplexity& source,
                                const ComplexityProfile& v_profile);
/// Same, for a transform prefix the caller vouches is long enough.
CorollaryReport corollary_check(std::size_t k, std::size_t l, const SourceComplexity& source,
                                const FiniteWord& v_word);

/// Smallest n with P(m) = (k+1)m + k - 1 for every m in [n, n_max], if any.
std::optional<std::size_t> internal_stabilization(const ComplexityProfile& v_profile, std::size_t k);

struct ComparisonRow {
    std::size_t n = 0;
    Branch branch = Branch::short_up_to_m0;
    std::int64_t closed = 0;
    std::uint64_t empirical = 0;
    bool match = false;
};

struct BranchTally {
    std::size_t rows = 0;
    std::size_t matches = 0;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;
    std::map<Branch, BranchTally> by_branch;

    std::size_t mismatches() const;
    bool all_match() const { return mismatches() == 0; }
};

using ClosedForm = std::function<BranchedValue(std::size_t n)>;

/// Rows for n in [first, last]; an empty table when first > last.
/// Throws std::invalid_argument for an unstable profile and std::out_of_range
/// when `last` exceeds its n_max.
ComparisonTable compare(std::size_t first, std::size_t last, const ClosedForm& closed_form,
                        const ComplexityProfile& empirical);

} // namespace motrec

#endif // MOTREC_FORMULAS_HPP
