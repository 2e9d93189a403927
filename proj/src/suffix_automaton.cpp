#include "motrec/suffix_automaton.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace motrec {

SuffixAutomaton::SuffixAutomaton(std::span<const Symbol> text) : text_size_(text.size()) {
    if (text.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max() / 2)) {
        throw std::length_error("text too long for the suffix automaton");
    }
    states_.reserve(2 * text.size() + 1);
    edges_.reserve(3 * text.size() + 1);
    states_.push_back(State{});
    std::int32_t last = 0;

    for (std::size_t i = 0; i < text.size(); ++i) {
        const Symbol c = text[i];
        const auto cur = static_cast<std::int32_t>(states_.size());
        states_.push_back(State{states_[last].len + 1, -1, -1, static_cast<std::int32_t>(i)});

        std::int32_t p = last;
        while (p != -1 && find(p, c) == -1) {
            add_edge(p, c, cur);
            p = states_[p].link;
        }
        if (p == -1) {
            states_[cur].link = 0;
        } else {
            const std::int32_t q = find(p, c);
            if (states_[p].len + 1 == states_[q].len) {
                states_[cur].link = q;
            } else {
                const auto clone = static_cast<std::int32_t>(states_.size());
                states_.push_back(State{states_[p].len + 1, states_[q].link, -1, states_[q].first_end});
                for (std::int32_t e = states_[q].first_edge; e != -1; e = edges_[e].next) {
                    add_edge(clone, edges_[e].symbol, edges_[e].target);
                }
                while (p != -1 && find(p, c) == q) {
                    set_edge(p, c, clone);
                    p = states_[p].link;
                }
                states_[q].link = clone;
                states_[cur].link = clone;
            }
        }
        last = cur;
    }
}

std::int32_t SuffixAutomaton::find(std::int32_t state, Symbol s) const {
    for (std::int32_t e = states_[state].first_edge; e != -1; e = edges_[e].next) {
        if (edges_[e].symbol == s) return edges_[e].target;
    }
    return -1;
}

void SuffixAutomaton::add_edge(std::int32_t from, Symbol s, std::int32_t to) {
    edges_.push_back(Edge{to, states_[from].first_edge, s});
    states_[from].first_edge = static_cast<std::int32_t>(edges_.size() - 1);
}

void SuffixAutomaton::set_edge(std::int32_t from, Symbol s, std::int32_t to) {
    for (std::int32_t e = states_[from].first_edge; e != -1; e = edges_[e].next) {
        if (edges_[e].symbol == s) {
            edges_[e].target = to;
            return;
        }
    }
}

std::size_t SuffixAutomaton::out_degree(std::int32_t state) const {
    std::size_t d = 0;
    for (std::int32_t e = states_[state].first_edge; e != -1; e = edges_[e].next) ++d;
    return d;
}

std::vector<std::size_t> SuffixAutomaton::link_children() const {
    std::vector<std::size_t> children(states_.size(), 0);
    for (std::size_t s = 1; s < states_.size(); ++s) ++children[static_cast<std::size_t>(states_[s].link)];
    return children;
}

std::vector<std::uint64_t> SuffixAutomaton::factor_counts(std::size_t max_len) const {
    std::vector<std::int64_t> diff(max_len + 2, 0);
    for (std::size_t s = 1; s < states_.size(); ++s) {
        const auto lo = static_cast<std::size_t>(states_[states_[s].link].len) + 1;
        const auto hi = std::min(static_cast<std::size_t>(states_[s].len), max_len);
        if (lo > hi) continue;
        diff[lo] += 1;
        diff[hi + 1] -= 1;
    }
    std::vector<std::uint64_t> counts(max_len + 1, 0);
    counts[0] = 1;
    std::int64_t running = 0;
    for (std::size_t n = 1; n <= max_len; ++n) {
        running += diff[n];
        counts[n] = static_cast<std::uint64_t>(running);
    }
    return counts;
}

SuffixAutomaton::ExtensionExcess SuffixAutomaton::extension_excess(std::size_t max_len) const {
    const auto children = link_children();
    std::vector<std::int64_t> diff(max_len + 2, 0);
    ExtensionExcess out{std::vector<std::int64_t>(max_len + 1, 0), std::vector<std::int64_t>(max_len + 1, 0)};

    out.right[0] = static_cast<std::int64_t>(out_degree(0)) - 1;
    out.left[0] = static_cast<std::int64_t>(children[0]) - 1;
    for (std::size_t s = 1; s < states_.size(); ++s) {
        const auto lo = static_cast<std::size_t>(states_[states_[s].link].len) + 1;
        const auto len = static_cast<std::size_t>(states_[s].len);
        const auto hi = std::min(len, max_len);
        if (lo > hi) continue;
        // Same end positions means the same right extensions for the whole interval.
        const auto r = static_cast<std::int64_t>(out_degree(static_cast<std::int32_t>(s))) - 1;
        diff[lo] += r;
        diff[hi + 1] -= r;
        // Shorter members of the state always extend left by one letter; only the
        // longest member branches, once per suffix-link child.
        if (len <= max_len) out.left[len] += static_cast<std::int64_t>(children[s]) - 1;
    }
    std::int64_t running = 0;
    for (std::size_t n = 1; n <= max_len; ++n) {
        running += diff[n];
        out.right[n] = running;
    }
    return out;
}

std::vector<SuffixAutomaton::FactorExtensions> SuffixAutomaton::extensions(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("extensions are listed for factor lengths >= 1");
    const auto children = link_children();
    std::vector<FactorExtensions> out;
    for (std::size_t s = 1; s < states_.size(); ++s) {
        const auto lo = static_cast<std::size_t>(states_[states_[s].link].len) + 1;
        const auto len = static_cast<std::size_t>(states_[s].len);
        if (n < lo || n > len) continue;
        out.push_back(FactorExtensions{static_cast<std::size_t>(states_[s].first_end),
                                       out_degree(static_cast<std::int32_t>(s)),
                                       n == len ? children[s] : 1});
    }
    return out;
}

} // namespace motrec
