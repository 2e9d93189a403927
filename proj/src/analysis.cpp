#include "motrec/analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "motrec/suffix_automaton.hpp"

namespace motrec {

Engine parse_engine(std::string_view name) {
    if (name == "naive") return Engine::naive;
    if (name == "automaton") return Engine::automaton;
    if (name == "auto") return Engine::automatic;
    throw std::invalid_argument("unknown engine: '" + std::string(name) + "'");
}

std::string_view to_string(Engine engine) {
    switch (engine) {
    case Engine::naive: return "naive";
    case Engine::automaton: return "automaton";
    case Engine::automatic: return "auto";
    }
    return "?";
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::vector<std::uint64_t> naive_counts(const FiniteWord& u, std::size_t max_len) {
    const std::string_view text = u.bytes();
    std::vector<std::uint64_t> counts(max_len + 1, 0);
    counts[0] = 1;
    std::unordered_set<std::string_view> blocks;
    for (std::size_t n = 1; n <= max_len; ++n) {
        blocks.clear();
        blocks.reserve(text.size() - n + 1);
        for (std::size_t p = 0; p + n <= text.size(); ++p) blocks.insert(text.substr(p, n));
        counts[n] = blocks.size();
    }
    return counts;
}

Engine resolve(Engine engine, const FiniteWord& u, std::size_t max_len) {
    if (engine != Engine::automatic) return engine;
    return u.size() * max_len > (std::size_t{1} << 20) ? Engine::automaton : Engine::naive;
}

ComplexityProfile profile_from_counts(const FiniteWord& u, std::vector<std::uint64_t> counts, std::size_t n_max) {
    ComplexityProfile profile;
    profile.n_max = n_max;
    profile.prefix_len = u.size();
    profile.S.resize(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        profile.S[n] = static_cast<std::int64_t>(counts[n + 1]) - static_cast<std::int64_t>(counts[n]);
    }
    counts.resize(n_max + 1);
    profile.P = std::move(counts);
    profile.Pf = window_complexity(u, n_max);
    return profile;
}

} // namespace

std::vector<std::uint64_t> factor_counts(const FiniteWord& u, std::size_t max_len, Engine engine) {
    if (max_len > u.size()) throw std::invalid_argument("factor length exceeds word length");
    if (resolve(engine, u, max_len) == Engine::naive) return naive_counts(u, max_len);
    return SuffixAutomaton(u.symbols()).factor_counts(max_len);
}

ComplexityProfile count_factors(const FiniteWord& u, std::size_t n_max, Engine engine) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (n_max >= u.size()) {
        throw std::invalid_argument("n_max must be smaller than the word length (" + std::to_string(u.size()) + ")");
    }
    return profile_from_counts(u, factor_counts(u, n_max + 1, engine), n_max);
}

std::vector<std::uint64_t> window_complexity(const FiniteWord& u, std::size_t n_max) {
    if (n_max > u.size()) throw std::invalid_argument("window length exceeds word length");
    const std::string_view text = u.bytes();
    std::vector<std::uint64_t> out(n_max + 1, 0);
    out[0] = 1;
    std::unordered_set<std::string_view> windows;
    for (std::size_t n = 1; n <= n_max; ++n) {
        windows.clear();
        for (std::size_t p = 0; p + n <= text.size(); p += n) windows.insert(text.substr(p, n));
        out[n] = windows.size();
    }
    return out;
}

std::size_t SpecialFactorReport::right_special_count() const {
    return static_cast<std::size_t>(std::ranges::count_if(factors, &SpecialFactor::right_special));
}

std::size_t SpecialFactorReport::left_special_count() const {
    return static_cast<std::size_t>(std::ranges::count_if(factors, &SpecialFactor::left_special));
}

std::size_t SpecialFactorReport::bispecial_count() const {
    return static_cast<std::size_t>(std::ranges::count_if(factors, &SpecialFactor::bispecial));
}

SpecialFactorReport special_factors(const FiniteWord& u, std::size_t n) {
    if (n < 1 || n + 1 >= u.size()) throw std::invalid_argument("special_factors needs 1 <= n and n + 1 < |u|");
    SuffixAutomaton automaton(u.symbols());
    SpecialFactorReport report;
    report.length = n;
    const std::string text = u.str();
    for (const auto& ext : automaton.extensions(n)) {
        report.right_excess += static_cast<std::int64_t>(ext.right) - 1;
        report.left_excess += static_cast<std::int64_t>(ext.left) - 1;
        if (ext.right >= 2 || ext.left >= 2) {
            report.factors.push_back(SpecialFactor{text.substr(ext.end + 1 - n, n), ext.right, ext.left});
        }
    }
    std::ranges::sort(report.factors, {}, &SpecialFactor::factor);
    return report;
}

ExtensionIdentity extension_excess(const FiniteWord& u, std::size_t n_max) {
    if (n_max > u.size()) throw std::invalid_argument("factor length exceeds word length");
    auto excess = SuffixAutomaton(u.symbols()).extension_excess(n_max);
    return ExtensionIdentity{std::move(excess.right), std::move(excess.left)};
}

ModuloRecurrenceReport check_modulo_recurrence(const FiniteWord& u, std::size_t n_max, std::size_t mod_max) {
    if (n_max < 1 || mod_max < 1) throw std::invalid_argument("n_max and mod_max must be >= 1");
    if (mod_max > 64) throw std::invalid_argument("mod_max must be <= 64");
    if (n_max > u.size()) throw std::invalid_argument("factor length exceeds word length");

    struct Seen {
        std::size_t count = 0;
        std::size_t first = 0;
        std::vector<std::uint64_t> residues;  // residues[i-1]: bitmask of residues mod i
    };

    ModuloRecurrenceReport report;
    report.n_max = n_max;
    report.mod_max = mod_max;
    report.prefix_len = u.size();
    const std::string_view text = u.bytes();
    const std::string glyphs = u.str();

    for (std::size_t n = 1; n <= n_max; ++n) {
        std::unordered_map<std::string_view, Seen> seen;
        for (std::size_t p = 0; p + n <= text.size(); ++p) {
            auto [it, inserted] = seen.try_emplace(text.substr(p, n));
            auto& entry = it->second;
            if (inserted) {
                entry.first = p;
                entry.residues.assign(mod_max, 0);
            }
            ++entry.count;
            for (std::size_t i = 1; i <= mod_max; ++i) entry.residues[i - 1] |= std::uint64_t{1} << (p % i);
        }
        std::vector<const Seen*> ordered;
        ordered.reserve(seen.size());
        for (const auto& [_, entry] : seen) ordered.push_back(&entry);
        std::ranges::sort(ordered, {}, [&](const Seen* e) { return std::string_view(glyphs).substr(e->first, n); });

        for (const Seen* entry : ordered) {
            for (std::size_t i = 1; i <= mod_max; ++i) {
                ModuloCheck check;
                check.factor = glyphs.substr(entry->first, n);
                check.modulus = i;
                check.occurrences = entry->count;
                const std::uint64_t full = i == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1;
                const std::uint64_t mask = entry->residues[i - 1];
                if (mask == full) {
                    check.verdict = Verdict::pass;
                    ++report.passed;
                } else {
                    check.missing_residue = static_cast<std::size_t>(std::countr_one(mask));
                    if (entry->count < mod_max) {
                        check.verdict = Verdict::inconclusive;
                        ++report.inconclusive;
                    } else {
                        check.verdict = Verdict::fail;
                        ++report.failed;
                    }
                }
                report.checks.push_back(std::move(check));
            }
        }
    }
    return report;
}

Stabilized stabilize(const WordSource& source, std::size_t n_max, const StabilizeOptions& options) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (n_max + 2 > options.cap) {
        throw std::invalid_argument("n_max " + std::to_string(n_max) + " too large for prefix cap " +
                                    std::to_string(options.cap));
    }
    std::size_t len = kInitialPrefix;
    while (len < n_max + 2) len *= 2;
    len = std::min(len, options.cap);

    std::vector<std::vector<std::uint64_t>> history;
    for (;;) {
        if (options.on_step) options.on_step(len);
        auto word = source.prefix(len);
        history.push_back(factor_counts(word, n_max + 1, options.engine));
        const auto k = history.size();
        const bool agreed = k >= 3 && history[k - 1] == history[k - 2] && history[k - 2] == history[k - 3];
        if (agreed || len >= options.cap) {
            auto profile = profile_from_counts(word, history.back(), n_max);
            profile.stable = agreed;
            return Stabilized{len, std::move(profile), std::move(word)};
        }
        len = std::min(len * 2, options.cap);
    }
}

} // namespace motrec
