#include <gtest/gtest.h>

#include <random>

#include "motrec/suffix_automaton.hpp"
#include "motrec/word.hpp"
#include "oracle.hpp"

using namespace motrec;

namespace {

SuffixAutomaton build(const FiniteWord& w) { return SuffixAutomaton(w.symbols()); }

} // namespace

TEST(SuffixAutomaton, CountsMatchOracleOnAllLengths) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto text = oracle::random_word(rng, 1 + rng() % 120, 1 + rng() % 4);
        const auto w = FiniteWord::parse(text);
        const auto counts = build(w).factor_counts(text.size());
        ASSERT_EQ(counts[0], 1u);
        for (std::size_t n = 1; n <= text.size(); ++n) ASSERT_EQ(counts[n], oracle::P(text, n)) << text << " n=" << n;
    }
}

TEST(SuffixAutomaton, StateCountIsLinear) {
    const auto w = FiniteWord::parse(oracle::fibonacci(10000));
    EXPECT_LE(build(w).state_count(), 2 * w.size());
}

TEST(SuffixAutomaton, ExtensionDegreesMatchOracle) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto text = oracle::random_word(rng, 3 + rng() % 80, 2 + rng() % 3);
        const auto w = FiniteWord::parse(text);
        const auto automaton = build(w);
        for (std::size_t n = 1; n < text.size(); ++n) {
            const auto right = oracle::extensions(text, n, true);
            const auto left = oracle::extensions(text, n, false);
            const auto got = automaton.extensions(n);
            ASSERT_EQ(got.size(), right.size());
            for (const auto& e : got) {
                const auto factor = text.substr(e.end + 1 - n, n);
                ASSERT_EQ(e.right, right.at(factor).size()) << text << " " << factor;
                ASSERT_EQ(e.left, left.at(factor).size()) << text << " " << factor;
            }
        }
    }
}

TEST(SuffixAutomaton, ExcessIdentityHoldsOnFiniteWords) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const auto text = oracle::random_word(rng, 2 + rng() % 200, 2 + rng() % 3);
        const auto automaton = build(FiniteWord::parse(text));
        const auto counts = automaton.factor_counts(text.size());
        const auto excess = automaton.extension_excess(text.size() - 1);
        for (std::size_t n = 0; n < text.size(); ++n) {
            const auto S = static_cast<std::int64_t>(counts[n + 1]) - static_cast<std::int64_t>(counts[n]);
            ASSERT_EQ(excess.right[n], S) << text << " n=" << n;
            ASSERT_EQ(excess.left[n], S) << text << " n=" << n;
        }
    }
}
