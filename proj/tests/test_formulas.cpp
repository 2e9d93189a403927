#include <gtest/gtest.h>

#include <stdexcept>

#include "motrec/formulas.hpp"
#include "motrec/generators.hpp"
#include "motrec/transform.hpp"
#include "oracle.hpp"

using namespace motrec;

namespace {

ComplexityProfile stable_transform_profile(std::size_t k, std::size_t l, char letter, bool internal, std::size_t n_max) {
    auto s = stabilize(transformed(fibonacci_source(), {k, l, letter, internal}), n_max);
    EXPECT_TRUE(s.profile.stable);
    return s.profile;
}

// Which branch should fire, decided from the raw inequalities.
Branch expected_general_branch(std::size_t n, std::size_t k, std::size_t l) {
    const auto m0 = std::min(k, l), M0 = std::max(k, l);
    if (n < k + l) {
        if (n <= m0) return Branch::short_up_to_m0;
        if (n <= M0) return k < l ? Branch::short_mid_k_below_l : Branch::short_mid_l_below_k;
        return Branch::short_above_M0;
    }
    const auto alpha = n % (k + l);
    if (alpha == 0) return Branch::long_aligned;
    return alpha <= l ? Branch::long_alpha_up_to_l : Branch::long_alpha_above_l;
}

} // namespace

TEST(EvalGeneral, ExampleValues) {
    const auto sturmian = SourceComplexity::sturmian();
    auto v = eval_general(5, 2, 3, sturmian);
    EXPECT_EQ(v.value, 16);
    EXPECT_EQ(v.branch, Branch::long_aligned);
    EXPECT_EQ(v.params.q, 1u);

    v = eval_general(1, 2, 3, sturmian);
    EXPECT_EQ(v.value, 3);
    EXPECT_EQ(v.branch, Branch::short_up_to_m0);

    v = eval_general(9, 2, 3, sturmian);
    EXPECT_EQ(v.value, 28);
    EXPECT_EQ(v.branch, Branch::long_alpha_above_l);
    EXPECT_EQ(v.params.alpha, 4u);
    EXPECT_EQ(v.params.beta, 2u);
}

TEST(EvalGeneral, RejectsZeroArguments) {
    EXPECT_THROW(eval_general(0, 1, 1, SourceComplexity::sturmian()), std::invalid_argument);
    EXPECT_THROW(eval_general(1, 0, 1, SourceComplexity::sturmian()), std::invalid_argument);
}

TEST(EvalSturmian, ExampleValues) {
    EXPECT_EQ(eval_sturmian(3, 2, 3).value, 11);
    EXPECT_EQ(eval_sturmian(3, 2, 3).branch, Branch::sturmian_linear_plus);
    EXPECT_EQ(eval_sturmian(2, 2, 3).value, 8);
    EXPECT_EQ(eval_sturmian(3, 3, 2).value, 14);
    EXPECT_EQ(eval_sturmian(3, 3, 2).branch, Branch::sturmian_square_minus);
}

TEST(EvalSturmian, EqualStepAndPowerSkipsMiddleBranches) {
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto b = eval_sturmian(n, 3, 3).branch;
        EXPECT_TRUE(b == Branch::sturmian_square || b == Branch::sturmian_linear);
    }
}

TEST(Branches, TotalAndDisjoint) {
    const auto sturmian = SourceComplexity::sturmian();
    for (std::size_t k = 1; k <= 6; ++k) {
        for (std::size_t l = 1; l <= 6; ++l) {
            for (std::size_t n = 1; n <= 200; ++n) {
                ASSERT_EQ(eval_general(n, k, l, sturmian).branch, expected_general_branch(n, k, l));
            }
        }
    }
}

TEST(Branches, SturmianReductionAgrees) {
    const auto sturmian = SourceComplexity::sturmian();
    for (std::size_t k = 1; k <= 6; ++k) {
        for (std::size_t l = 1; l <= 6; ++l) {
            for (std::size_t n = 1; n <= 200; ++n) {
                ASSERT_EQ(eval_general(n, k, l, sturmian).value, eval_sturmian(n, k, l).value)
                    << "n=" << n << " k=" << k << " l=" << l;
            }
        }
    }
}

TEST(Branches, LinearRegimeStepsByKPlusOne) {
    for (std::size_t k = 1; k <= 6; ++k) {
        for (std::size_t l = 1; l <= 6; ++l) {
            for (std::size_t n = std::max(k, l) + 1; n < 200; ++n) {
                ASSERT_EQ(eval_sturmian(n + 1, k, l).value - eval_sturmian(n, k, l).value, static_cast<std::int64_t>(k + 1));
            }
        }
    }
}

TEST(EvalSturmian, MatchesBruteForceOnTransformedFibonacci) {
    const auto u = oracle::fibonacci(20000);
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t l = 1; l <= 3; ++l) {
            const auto v = oracle::substitute(u, k, l, 'c');
            for (std::size_t n = 1; n <= 16; ++n) {
                EXPECT_EQ(static_cast<std::uint64_t>(eval_sturmian(n, k, l).value), oracle::P(v, n))
                    << "n=" << n << " k=" << k << " l=" << l;
            }
        }
    }
}

TEST(SourceComplexity, Models) {
    const auto full = SourceComplexity::full(2);
    EXPECT_EQ(full.P(3), 8);
    EXPECT_EQ(full.S(3), 8);
    EXPECT_EQ(SourceComplexity::sturmian().S(40), 1);
    EXPECT_THROW(SourceComplexity::full(2).P(70), std::overflow_error);

    ComplexityProfile unstable = count_factors(fibonacci_source().prefix(100), 5);
    EXPECT_THROW(SourceComplexity::empirical(unstable, "fib"), std::invalid_argument);
    unstable.stable = true;
    const auto empirical = SourceComplexity::empirical(unstable, "fib");
    EXPECT_EQ(empirical.P(5), 6);
    EXPECT_THROW(empirical.P(6), std::out_of_range);
}

TEST(SourceComplexity, LengthNeededCoversEveryQuery) {
    for (std::size_t k = 1; k <= 4; ++k) {
        for (std::size_t l = 1; l <= 4; ++l) {
            const std::size_t needed = source_length_needed(30, k, l);
            const SourceComplexity bounded(
                "bounded", [](std::size_t m) { return std::int64_t(m) + 1; }, [](std::size_t) { return std::int64_t{1}; },
                needed);
            for (std::size_t n = 1; n <= 30; ++n) EXPECT_NO_THROW(eval_general(n, k, l, bounded));
            const SourceComplexity tighter(
                "tighter", [](std::size_t m) { return std::int64_t(m) + 1; }, [](std::size_t) { return std::int64_t{1}; },
                needed - 1);
            bool threw = false;
            for (std::size_t n = 1; n <= 30 && !threw; ++n) {
                try {
                    eval_general(n, k, l, tighter);
                } catch (const std::out_of_range&) {
                    threw = true;
                }
            }
            EXPECT_TRUE(threw);
        }
    }
}

TEST(Corollary, WindowCountsAgainstBruteForce) {
    struct Case {
        std::string source;
        std::size_t k, l;
    };
    for (const auto& c : {Case{"fibonacci", 2, 3}, Case{"fibonacci", 1, 1}, Case{"champernowne", 2, 2}}) {
        const auto base = parse_source(c.source);
        const auto u_profile = stabilize(base, c.k + 2).profile;
        const auto u_model = SourceComplexity::empirical(u_profile, c.source);
        const auto v = transformed(base, {c.k, c.l, 'c', false}).prefix(200000);
        const auto report = corollary_check(c.k, c.l, u_model, v);
        const auto text = v.str();
        EXPECT_EQ(report.window_count, oracle::Pf(text, c.k + c.l)) << c.source;
        EXPECT_EQ(report.factor_count, oracle::P(text, c.k + c.l)) << c.source;
        EXPECT_EQ(report.claimed_window_count, static_cast<std::int64_t>(u_profile.P[c.k + 1]));
        EXPECT_EQ(report.window_claim_holds, report.window_count == u_profile.P[c.k + 1]);
        EXPECT_TRUE(report.complexities_differ) << c.source;
    }
    const auto v = transformed(fibonacci_source(), {2, 3, 'c', false}).prefix(200000);
    EXPECT_EQ(corollary_check(2, 3, SourceComplexity::sturmian(), v).factor_count, 16u);
}

TEST(Corollary, UnstableProfileIsInconclusive) {
    const auto profile = count_factors(transformed(fibonacci_source(), {2, 3, 'c', false}).prefix(1000), 6);
    EXPECT_EQ(corollary_check(2, 3, SourceComplexity::sturmian(), profile).verdict, Verdict::inconclusive);
}

TEST(InternalStabilization, InternalTransformsReachLinearRegime) {
    const auto a2 = internal_stabilization(stable_transform_profile(1, 2, 'a', true, 60), 1);
    ASSERT_TRUE(a2.has_value());
    const auto profile = stable_transform_profile(1, 2, 'a', true, 60);
    for (std::size_t m = *a2; m <= 60; ++m) EXPECT_EQ(profile.P[m], 2 * m);
    EXPECT_TRUE(internal_stabilization(stable_transform_profile(2, 2, 'b', true, 60), 2).has_value());
}

TEST(InternalStabilization, ExternalTransformThreshold) {
    for (std::size_t k = 1; k <= 4; ++k) {
        for (std::size_t l = 1; l <= 4; ++l) {
            const auto n_k = internal_stabilization(stable_transform_profile(k, l, 'c', false, 30), k);
            ASSERT_TRUE(n_k.has_value());
            // Below M0 + 1 the square branch can coincide with the linear one at n = k.
            const std::size_t expected = l < k ? k : std::max(k, l) + 1;
            EXPECT_EQ(*n_k, expected) << "k=" << k << " l=" << l;
        }
    }
}

TEST(InternalStabilization, ConstantTransformHasNone) {
    auto s = stabilize(transformed(periodic_source(FiniteWord::parse("a")), {1, 2, 'a', true}), 20);
    EXPECT_FALSE(internal_stabilization(s.profile, 1).has_value());
}

TEST(Compare, SturmianClosedFormOnTransformedFibonacci) {
    const auto profile = stable_transform_profile(2, 3, 'c', false, 60);
    const auto table = compare(1, 60, [](std::size_t n) { return eval_sturmian(n, 2, 3); }, profile);
    EXPECT_EQ(table.rows.size(), 60u);
    EXPECT_TRUE(table.all_match());
    std::size_t tallied = 0;
    for (const auto& [branch, tally] : table.by_branch) tallied += tally.rows;
    EXPECT_EQ(tallied, 60u);
}

TEST(Compare, EmptyRangeAndErrors) {
    const auto profile = stable_transform_profile(2, 3, 'c', false, 10);
    const ClosedForm f = [](std::size_t n) { return eval_sturmian(n, 2, 3); };
    EXPECT_TRUE(compare(5, 4, f, profile).rows.empty());
    EXPECT_THROW(compare(1, 11, f, profile), std::out_of_range);
    auto unstable = profile;
    unstable.stable = false;
    EXPECT_THROW(compare(1, 10, f, unstable), std::invalid_argument);
}
