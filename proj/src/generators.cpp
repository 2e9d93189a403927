#include "motrec/generators.hpp"

#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>

namespace motrec {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

MorphismSpec MorphismSpec::parse(std::string_view text) {
    std::string keys;
    std::vector<std::string> bodies;
    std::optional<char> seed;
    for (auto part : split(text, ';')) {
        part = trim(part);
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("morphism rule without '=': " + std::string(part));
        }
        auto lhs = trim(part.substr(0, eq));
        auto rhs = trim(part.substr(eq + 1));
        if (lhs == "seed") {
            if (rhs.size() != 1) throw std::invalid_argument("seed must be a single glyph");
            seed = rhs.front();
            continue;
        }
        if (lhs.size() != 1) {
            throw std::invalid_argument("morphism rule must map a single glyph: " + std::string(part));
        }
        if (keys.find(lhs.front()) != std::string::npos) {
            throw std::invalid_argument(std::string("duplicate rule for '") + lhs.front() + "'");
        }
        keys.push_back(lhs.front());
        bodies.emplace_back(rhs);
    }
    if (keys.empty()) throw std::invalid_argument("morphism has no rules");

    Alphabet alphabet(keys);
    MorphismSpec spec{alphabet, {}, 0};
    for (const auto& body : bodies) {
        auto image = FiniteWord::parse(body, alphabet);
        spec.images.emplace_back(image.symbols().begin(), image.symbols().end());
    }
    if (seed) {
        auto s = alphabet.index_of(*seed);
        if (!s) throw std::invalid_argument(std::string("seed '") + *seed + "' has no rule");
        spec.seed = *s;
    }
    spec.validate();
    return spec;
}

void MorphismSpec::validate() const {
    if (images.size() != alphabet.size()) {
        throw std::invalid_argument("morphism needs exactly one image per symbol");
    }
    for (const auto& image : images) {
        if (image.empty()) throw std::invalid_argument("morphism images must be nonempty");
        for (Symbol s : image) {
            if (s >= alphabet.size()) throw std::invalid_argument("image symbol outside alphabet");
        }
    }
    if (seed >= alphabet.size()) throw std::invalid_argument("seed outside alphabet");
    const auto& first = images[seed];
    if (first.size() < 2 || first.front() != seed) {
        throw std::invalid_argument("morphism is not prolongable on its seed");
    }
}

MorphismSpec fibonacci_morphism() {
    return MorphismSpec{Alphabet("ab"), {{0, 1}, {0}}, 0};
}

FiniteWord morphic_prefix(const MorphismSpec& spec, std::size_t n) {
    spec.validate();
    // The fixed point w satisfies w = image(w[0]) image(w[1]) ..., and since
    // |image(seed)| >= 2 the symbol to expand next is always already known.
    std::vector<Symbol> out(spec.images[spec.seed]);
    for (std::size_t next = 1; out.size() < n; ++next) {
        const auto& image = spec.images[out[next]];
        out.insert(out.end(), image.begin(), image.end());
    }
    out.resize(n);
    return FiniteWord(spec.alphabet, std::move(out));
}

SturmianSpec SturmianSpec::parse(std::string_view text) {
    SturmianSpec spec;
    for (auto part : split(text, ',')) {
        part = trim(part);
        std::uint32_t value = 0;
        auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || end != part.data() + part.size()) {
            throw std::invalid_argument("bad directive entry: '" + std::string(part) + "'");
        }
        spec.directive.push_back(value);
    }
    spec.validate();
    return spec;
}

void SturmianSpec::validate() const {
    if (directive.empty()) throw std::invalid_argument("directive sequence is empty");
    for (auto d : directive) {
        if (d < 1) throw std::invalid_argument("directive entries must be >= 1");
    }
}

FiniteWord sturmian_prefix(const SturmianSpec& spec, std::size_t n) {
    spec.validate();
    const Alphabet ab("ab");
    std::vector<Symbol> older{1};  // s(-1) = b
    std::vector<Symbol> current{0}; // s(0) = a
    for (std::size_t j = 0; current.size() < n; ++j) {
        std::vector<Symbol> next;
        const std::uint32_t reps = spec.at(j);
        next.reserve(current.size() * reps + older.size());
        for (std::uint32_t r = 0; r < reps && next.size() < n; ++r) {
            next.insert(next.end(), current.begin(), current.end());
        }
        next.insert(next.end(), older.begin(), older.end());
        older = std::move(current);
        current = std::move(next);
    }
    current.resize(n);
    return FiniteWord(ab, std::move(current));
}

FiniteWord champernowne_prefix(std::size_t n) {
    std::vector<Symbol> out;
    out.reserve(n + 64);
    out.push_back(0);
    for (std::uint64_t value = 1; out.size() < n; ++value) {
        int width = 64 - __builtin_clzll(value);
        for (int bit = width - 1; bit >= 0; --bit) {
            out.push_back(static_cast<Symbol>((value >> bit) & 1U));
        }
    }
    out.resize(n);
    return FiniteWord(Alphabet("01"), std::move(out));
}

FiniteWord periodic_prefix(const FiniteWord& pattern, std::size_t n) {
    if (pattern.empty()) throw std::invalid_argument("periodic pattern must be nonempty");
    std::vector<Symbol> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = pattern[i % pattern.size()];
    return FiniteWord(pattern.alphabet(), std::move(out));
}

WordSource fibonacci_source() {
    auto spec = fibonacci_morphism();
    return WordSource("fibonacci", spec.alphabet, [spec](std::size_t n) {
        auto w = morphic_prefix(spec, n);
        return std::vector<Symbol>(w.symbols().begin(), w.symbols().end());
    });
}

WordSource morphic_source(MorphismSpec spec) {
    spec.validate();
    std::string descriptor = "morphic:";
    for (std::size_t s = 0; s < spec.alphabet.size(); ++s) {
        descriptor += spec.alphabet.glyph(static_cast<Symbol>(s));
        descriptor += '=';
        descriptor += FiniteWord(spec.alphabet, spec.images[s]).str();
        descriptor += ';';
    }
    descriptor += "seed=";
    descriptor += spec.alphabet.glyph(spec.seed);
    auto alphabet = spec.alphabet;
    return WordSource(std::move(descriptor), std::move(alphabet), [spec = std::move(spec)](std::size_t n) {
        auto w = morphic_prefix(spec, n);
        return std::vector<Symbol>(w.symbols().begin(), w.symbols().end());
    });
}

WordSource sturmian_source(SturmianSpec spec) {
    spec.validate();
    std::string descriptor = "sturmian:";
    for (std::size_t i = 0; i < spec.directive.size(); ++i) {
        if (i) descriptor += ',';
        descriptor += std::to_string(spec.directive[i]);
    }
    return WordSource(std::move(descriptor), Alphabet("ab"), [spec = std::move(spec)](std::size_t n) {
        auto w = sturmian_prefix(spec, n);
        return std::vector<Symbol>(w.symbols().begin(), w.symbols().end());
    });
}

WordSource champernowne_source() {
    return WordSource("champernowne", Alphabet("01"), [](std::size_t n) {
        auto w = champernowne_prefix(n);
        return std::vector<Symbol>(w.symbols().begin(), w.symbols().end());
    });
}

WordSource periodic_source(FiniteWord pattern) {
    if (pattern.empty()) throw std::invalid_argument("periodic pattern must be nonempty");
    auto alphabet = pattern.alphabet();
    return WordSource("periodic:" + pattern.str(), std::move(alphabet), [pattern = std::move(pattern)](std::size_t n) {
        auto w = periodic_prefix(pattern, n);
        return std::vector<Symbol>(w.symbols().begin(), w.symbols().end());
    });
}

WordSource parse_source(std::string_view descriptor) {
    descriptor = trim(descriptor);
    auto colon = descriptor.find(':');
    auto kind = descriptor.substr(0, colon);
    auto args = colon == std::string_view::npos ? std::string_view{} : descriptor.substr(colon + 1);
    const bool has_args = colon != std::string_view::npos;

    if (kind == "fibonacci" && !has_args) return fibonacci_source();
    if (kind == "champernowne" && !has_args) return champernowne_source();
    if (kind == "sturmian" && has_args) return sturmian_source(SturmianSpec::parse(args));
    if (kind == "periodic" && has_args) return periodic_source(FiniteWord::parse(args));
    if (kind == "morphic" && has_args) return morphic_source(MorphismSpec::parse(args));
    throw std::invalid_argument("unknown generator: '" + std::string(descriptor) + "'");
}

} // namespace motrec
