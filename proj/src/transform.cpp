#include "motrec/transform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace motrec {

void SubstitutionSpec::validate(const Alphabet& source) const {
    if (step < 1) throw std::invalid_argument("substitution step k must be >= 1");
    if (power < 1) throw std::invalid_argument("letter power l must be >= 1");
    const bool member = source.contains(letter);
    if (internal && !member) {
        throw std::invalid_argument(std::string("internal letter '") + letter + "' is not in the source alphabet");
    }
    if (!internal && member) {
        throw std::invalid_argument(std::string("external letter '") + letter + "' belongs to the source alphabet");
    }
}

std::size_t transformed_length(std::size_t source_len, const SubstitutionSpec& spec) {
    const std::size_t substituted = (source_len + spec.step) / spec.period();
    return source_len + (spec.power - 1) * substituted;
}

std::size_t image_start(std::size_t p, const SubstitutionSpec& spec) {
    const std::size_t b = p / spec.period();
    const std::size_t r = p % spec.period();
    return b * spec.block() + (r == 0 ? 0 : spec.power + r - 1);
}

std::size_t source_position(std::size_t t, const SubstitutionSpec& spec) {
    const std::size_t b = t / spec.block();
    const std::size_t s = t % spec.block();
    return b * spec.period() + (s < spec.power ? 0 : 1 + s - spec.power);
}

SourceSpan source_span(std::size_t begin, std::size_t len, const SubstitutionSpec& spec) {
    if (len == 0) {
        const std::size_t p = source_position(begin, spec);
        return {p, p};
    }
    return {source_position(begin, spec), source_position(begin + len - 1, spec) + 1};
}

FiniteWord substitute(const FiniteWord& u, const SubstitutionSpec& spec) {
    spec.validate(u.alphabet());
    if (u.empty()) throw std::invalid_argument("cannot substitute in the empty word");
    Alphabet out_alphabet = u.alphabet().with(spec.letter);
    const Symbol letter = *out_alphabet.index_of(spec.letter);

    std::vector<Symbol> out;
    out.reserve(transformed_length(u.size(), spec));
    for (std::size_t p = 0; p < u.size(); ++p) {
        if (p % spec.period() == 0) {
            out.insert(out.end(), spec.power, letter);
        } else {
            out.push_back(u[p]);
        }
    }
    return FiniteWord(std::move(out_alphabet), std::move(out));
}

WordSource transformed(const WordSource& source, const SubstitutionSpec& spec) {
    spec.validate(source.alphabet());
    std::string descriptor = source.descriptor() + "|S_" + std::to_string(spec.step) + "^" + spec.letter + "^" +
                             std::to_string(spec.power) + (spec.internal ? ":internal" : "");
    Alphabet out_alphabet = source.alphabet().with(spec.letter);
    return WordSource(std::move(descriptor), std::move(out_alphabet), [source, spec](std::size_t n) {
        if (n == 0) return std::vector<Symbol>{};
        // Each source symbol has an image of length >= 1, so n source symbols always suffice;
        // take just enough whole blocks to cover n.
        const std::size_t blocks = n / spec.block() + 1;
        const std::size_t needed = std::min(n, blocks * spec.period());
        auto v = substitute(source.prefix(needed), spec);
        return std::vector<Symbol>(v.symbols().begin(), v.symbols().end());
    });
}

OriginLengths origin_lengths(std::size_t n_v, std::size_t k, std::size_t l) {
    if (n_v < 1 || k < 1 || l < 1) throw std::invalid_argument("origin_lengths needs n_v, k, l >= 1");
    OriginLengths out;
    if (n_v < k + l) {
        // A pure run c^n comes from the empty source factor while n <= l.
        out.lo = n_v <= l ? 0 : n_v - l + 1;
        out.hi = std::min(n_v, k);
        return out;
    }
    const std::size_t q = n_v / (k + l);
    const std::size_t alpha = n_v % (k + l);
    const std::size_t base = (k + 1) * q;
    if (alpha == 0) {
        out.lo = out.hi = base;
        out.boundary = {base - 1, base + 1};
        return out;
    }
    const std::size_t beta = std::min(alpha, k);
    out.lo = alpha <= l ? base : base + alpha - l + 1;
    out.hi = base + beta;
    return out;
}

} // namespace motrec
