#ifndef MOTREC_SUFFIX_AUTOMATON_HPP
#define MOTREC_SUFFIX_AUTOMATON_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "motrec/word.hpp"

namespace motrec {

/// Suffix automaton of a finite word, built online in O(|text| * sigma).
///
/// Every state stands for the factors whose lengths lie in
/// (len(link), len(state)] and that share one set of end positions. All
/// per-length quantities below are read off those intervals with difference
/// arrays, so each query is linear in the number of states.
class SuffixAutomaton {
public:
    explicit SuffixAutomaton(std::span<const Symbol> text);

    std::size_t state_count() const { return states_.size(); }
    std::size_t text_size() const { return text_size_; }

    /// counts[n] = number of distinct factors of length n, for n = 0..max_len.
    std::vector<std::uint64_t> factor_counts(std::size_t max_len) const;

    /// Sums of (d+(w) - 1) and (d-(w) - 1) over the factors w of each length
    /// n = 0..max_len, where d+/d- count distinct right/left extensions inside the text.
    struct ExtensionExcess {
        std::vector<std::int64_t> right;
        std::vector<std::int64_t> left;
    };
    ExtensionExcess extension_excess(std::size_t max_len) const;

    struct FactorExtensions {
        std::size_t end = 0;  // last position of the first occurrence
        std::size_t right = 0;
        std::size_t left = 0;
    };
    /// One entry per distinct factor of length n (n >= 1).
    std::vector<FactorExtensions> extensions(std::size_t n) const;

private:
    struct State {
        std::int32_t len = 0;
        std::int32_t link = -1;
        std::int32_t first_edge = -1;
        std::int32_t first_end = -1;
    };
    struct Edge {
        std::int32_t target;
        std::int32_t next;
        Symbol symbol;
    };

    std::int32_t find(std::int32_t state, Symbol s) const;
    void add_edge(std::int32_t from, Symbol s, std::int32_t to);
    void set_edge(std::int32_t from, Symbol s, std::int32_t to);
    std::size_t out_degree(std::int32_t state) const;
    std::vector<std::size_t> link_children() const;

    std::vector<State> states_;
    std::vector<Edge> edges_;
    std::size_t text_size_ = 0;
};

} // namespace motrec

#endif // MOTREC_SUFFIX_AUTOMATON_HPP
