#include "motrec/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace motrec {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("complexity value overflows int64");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("complexity value overflows int64");
    return r;
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

// sum_{i=from}^{to} P(offset + i); empty when from > to.
std::int64_t sum_P(const SourceComplexity& src, std::size_t offset, std::int64_t from, std::int64_t to) {
    std::int64_t total = 0;
    for (std::int64_t i = from; i <= to; ++i) {
        total = checked_add(total, src.P(offset + static_cast<std::size_t>(i)));
    }
    return total;
}

} // namespace

std::string_view to_string(Branch branch) {
    switch (branch) {
    case Branch::short_up_to_m0: return "I.1";
    case Branch::short_mid_k_below_l: return "I.2";
    case Branch::short_mid_l_below_k: return "I.3";
    case Branch::short_above_M0: return "I.4";
    case Branch::long_aligned: return "II.a0";
    case Branch::long_alpha_up_to_l: return "II.a<=l";
    case Branch::long_alpha_above_l: return "II.a>l";
    case Branch::sturmian_square: return "n^2+2n";
    case Branch::sturmian_linear_plus: return "(k+1)n+k";
    case Branch::sturmian_square_minus: return "n^2+2n-1";
    case Branch::sturmian_linear: return "(k+1)n+k-1";
    }
    return "?";
}

SourceComplexity::SourceComplexity(std::string description, Function P, Function S, std::size_t max_length)
    : description_(std::move(description)), P_(std::move(P)), S_(std::move(S)), max_length_(max_length) {}

SourceComplexity SourceComplexity::sturmian() {
    return SourceComplexity(
        "sturmian", [](std::size_t m) { return as_int(m) + 1; }, [](std::size_t) { return std::int64_t{1}; });
}

SourceComplexity SourceComplexity::full(std::size_t alphabet_size) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be >= 1");
    auto power = [a = as_int(alphabet_size)](std::size_t m) {
        std::int64_t r = 1;
        for (std::size_t i = 0; i < m; ++i) r = checked_mul(r, a);
        return r;
    };
    return SourceComplexity(
        "full:" + std::to_string(alphabet_size), power,
        [power](std::size_t m) { return power(m + 1) - power(m); });
}

SourceComplexity SourceComplexity::empirical(const ComplexityProfile& profile, std::string label) {
    if (!profile.stable) throw std::invalid_argument("empirical source complexity needs a stable profile");
    return SourceComplexity(
        "empirical:" + std::move(label), [P = profile.P](std::size_t m) { return static_cast<std::int64_t>(P[m]); },
        [S = profile.S](std::size_t m) { return S[m]; }, profile.n_max);
}

std::int64_t SourceComplexity::P(std::size_t m) const {
    if (m > max_length_) {
        throw std::out_of_range("P(" + std::to_string(m) + ") outside the valid range of " + description_);
    }
    return P_(m);
}

std::int64_t SourceComplexity::S(std::size_t m) const {
    if (m > max_length_) {
        throw std::out_of_range("S(" + std::to_string(m) + ") outside the valid range of " + description_);
    }
    return S_(m);
}

BranchParams branch_params(std::size_t n, std::size_t k, std::size_t l) {
    BranchParams p;
    p.n = n;
    p.k = k;
    p.l = l;
    p.m0 = std::min(k, l);
    p.M0 = std::max(k, l);
    if (n >= k + l) {
        p.q = n / (k + l);
        p.alpha = n % (k + l);
        p.beta = std::min(p.alpha, k);
    }
    return p;
}

BranchedValue eval_general(std::size_t n, std::size_t k, std::size_t l, const SourceComplexity& src) {
    if (n < 1 || k < 1 || l < 1) throw std::invalid_argument("eval_general needs n, k, l >= 1");
    BranchedValue out;
    out.params = branch_params(n, k, l);
    const auto& p = out.params;
    const std::int64_t N = as_int(n), K = as_int(k), L = as_int(l);

    if (n < k + l) {
        if (n <= p.m0) {
            out.branch = Branch::short_up_to_m0;
            out.value = checked_add(checked_add(1, checked_mul(2, sum_P(src, 0, 1, N - 1))), src.P(n));
        } else if (n <= p.M0 && k < l) {
            out.branch = Branch::short_mid_k_below_l;
            out.value = checked_add(checked_add(1, checked_mul(2, sum_P(src, 0, 1, K - 1))),
                                    checked_mul(N - K + 1, src.P(k)));
        } else if (n <= p.M0 && l < k) {
            out.branch = Branch::short_mid_l_below_k;
            std::int64_t v = checked_mul(N - L + 1, src.P(n - l + 1));
            v = checked_add(v, checked_mul(-2, src.S(n - l)));
            v = checked_add(v, checked_mul(2, sum_P(src, 0, N - L + 1, N - 1)));
            out.value = checked_add(v, src.P(n));
        } else {
            out.branch = Branch::short_above_M0;
            std::int64_t v = checked_mul(N - L + 1, src.P(n - l + 1));
            v = checked_add(v, checked_mul(-2, src.S(n - l)));
            v = checked_add(v, checked_mul(2, sum_P(src, 0, N - L + 1, K - 1)));
            out.value = checked_add(v, checked_mul(N - K + 1, src.P(k)));
        }
        return out;
    }

    const std::size_t base = (k + 1) * p.q;  // (k+1)q
    const std::int64_t A = as_int(p.alpha), B = as_int(p.beta);
    const std::int64_t tail_weight = (K > A ? K - A : A - K) + 1;  // |k - alpha| + 1
    if (p.alpha == 0) {
        out.branch = Branch::long_aligned;
        out.value = checked_add(checked_mul(K - 1, src.P(base)), checked_mul(L + 1, src.P(base - 1)));
    } else if (p.alpha <= l) {
        out.branch = Branch::long_alpha_up_to_l;
        std::int64_t v = checked_mul(L - A + 1, src.P(base - 1));
        v = checked_add(v, checked_mul(2, sum_P(src, base, 1, B - 1)));
        out.value = checked_add(v, checked_mul(tail_weight, src.P(base + p.beta)));
    } else {
        out.branch = Branch::long_alpha_above_l;
        std::int64_t v = checked_mul(A - L + 1, src.P(base + p.alpha - l + 1));
        v = checked_add(v, checked_mul(-2, src.S(base + p.alpha - l)));
        v = checked_add(v, checked_mul(2, sum_P(src, base, A - L + 1, B - 1)));
        out.value = checked_add(v, checked_mul(tail_weight, src.P(base + p.beta)));
    }
    return out;
}

BranchedValue eval_sturmian(std::size_t n, std::size_t k, std::size_t l) {
    if (n < 1 || k < 1 || l < 1) throw std::invalid_argument("eval_sturmian needs n, k, l >= 1");
    BranchedValue out;
    out.params = branch_params(n, k, l);
    const auto& p = out.params;
    const std::int64_t N = as_int(n), K = as_int(k);
    if (n <= p.m0) {
        out.branch = Branch::sturmian_square;
        out.value = N * N + 2 * N;
    } else if (n <= p.M0 && k < l) {
        out.branch = Branch::sturmian_linear_plus;
        out.value = (K + 1) * N + K;
    } else if (n <= p.M0 && l < k) {
        out.branch = Branch::sturmian_square_minus;
        out.value = N * N + 2 * N - 1;
    } else {
        out.branch = Branch::sturmian_linear;
        out.value = (K + 1) * N + K - 1;
    }
    return out;
}

std::size_t source_length_needed(std::size_t n_max, std::size_t k, std::size_t l) {
    std::size_t needed = 0;
    auto probe = [&needed](std::size_t m) {
        needed = std::max(needed, m);
        return std::int64_t{1};
    };
    const SourceComplexity recorder("probe", probe, probe);
    for (std::size_t n = 1; n <= n_max; ++n) eval_general(n, k, l, recorder);
    return needed;
}

CorollaryReport corollary_check(std::size_t k, std::size_t l, const SourceComplexity& source,
                                const ComplexityProfile& v_profile) {
    if (k < 1 || l < 1) throw std::invalid_argument("corollary_check needs k, l >= 1");
    if (v_profile.n_max < k + l) throw std::out_of_range("profile does not reach length k + l");
    CorollaryReport report;
    report.k = k;
    report.l = l;
    report.window_count = v_profile.Pf[k + l];
    report.factor_count = v_profile.P[k + l];
    report.claimed_window_count = source.P(k + 1);
    report.window_claim_holds = static_cast<std::int64_t>(report.window_count) == report.claimed_window_count;
    report.complexities_differ = report.window_count != report.factor_count;
    if (!v_profile.stable) {
        report.verdict = Verdict::inconclusive;
    } else {
        report.verdict = report.window_claim_holds && report.complexities_differ ? Verdict::pass : Verdict::fail;
    }
    return report;
}

CorollaryReport corollary_check(std::size_t k, std::size_t l, const SourceComplexity& source,
                                const FiniteWord& v_word) {
    auto profile = count_factors(v_word, k + l);
    profile.stable = true;
    return corollary_check(k, l, source, profile);
}

std::optional<std::size_t> internal_stabilization(const ComplexityProfile& v_profile, std::size_t k) {
    std::optional<std::size_t> found;
    const auto K = static_cast<std::uint64_t>(k);
    for (std::size_t n = v_profile.n_max; n >= 1; --n) {
        if (v_profile.P[n] != (K + 1) * n + K - 1) break;
        found = n;
    }
    return found;
}

std::size_t ComparisonTable::mismatches() const {
    return static_cast<std::size_t>(std::ranges::count_if(rows, [](const ComparisonRow& r) { return !r.match; }));
}

ComparisonTable compare(std::size_t first, std::size_t last, const ClosedForm& closed_form,
                        const ComplexityProfile& empirical) {
    ComparisonTable table;
    if (first > last) return table;
    if (!empirical.stable) throw std::invalid_argument("comparison needs a stable empirical profile");
    if (last > empirical.n_max) throw std::out_of_range("comparison range exceeds the profile's n_max");
    for (std::size_t n = std::max<std::size_t>(first, 1); n <= last; ++n) {
        const auto closed = closed_form(n);
        ComparisonRow row{n, closed.branch, closed.value, empirical.P[n],
                          closed.value >= 0 && static_cast<std::uint64_t>(closed.value) == empirical.P[n]};
        auto& tally = table.by_branch[row.branch];
        ++tally.rows;
        if (row.match) ++tally.matches;
        table.rows.push_back(row);
    }
    return table;
}

} // namespace motrec
