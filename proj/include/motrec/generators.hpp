#ifndef MOTREC_GENERATORS_HPP
#define MOTREC_GENERATORS_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "motrec/word.hpp"

namespace motrec {

/// A morphism given by one image per symbol, with a seed it is prolongable on.
struct MorphismSpec {
    Alphabet alphabet;
    std::vector<std::vector<Symbol>> images;
    Symbol seed = 0;

    /// Parses "a=ab;b=a;seed=a". The seed defaults to the first listed symbol.
    static MorphismSpec parse(std::string_view text);

    /// Throws std::invalid_argument unless every image is nonempty and
    /// image(seed) starts with seed and has length >= 2.
    void validate() const;
};

MorphismSpec fibonacci_morphism();

FiniteWord morphic_prefix(const MorphismSpec& spec, std::size_t n);

/// Directive sequence of a characteristic Sturmian word. The last entry repeats forever.
struct SturmianSpec {
    std::vector<std::uint32_t> directive;

    static SturmianSpec parse(std::string_view text);
    void validate() const;
    std::uint32_t at(std::size_t i) const {
        return i < directive.size() ? directive[i] : directive.back();
    }
};

/// Prefix of the characteristic word built from standard words
/// s(-1) = b, s(0) = a, s(j) = s(j-1)^d(j) s(j-2).
FiniteWord sturmian_prefix(const SturmianSpec& spec, std::size_t n);

/// Binary Champernowne word 0 1 10 11 100 ...
FiniteWord champernowne_prefix(std::size_t n);

FiniteWord periodic_prefix(const FiniteWord& pattern, std::size_t n);

WordSource fibonacci_source();
WordSource morphic_source(MorphismSpec spec);
WordSource sturmian_source(SturmianSpec spec);
WordSource champernowne_source();
WordSource periodic_source(FiniteWord pattern);

/// Builds a source from a descriptor: `fibonacci`, `sturmian:<d1,d2,...>`,
/// `champernowne`, `periodic:<pattern>` or `morphic:<a=ab;b=a;seed=a>`.
/// Throws std::invalid_argument for unknown or malformed descriptors.
WordSource parse_source(std::string_view descriptor);

} // namespace motrec

#endif // MOTREC_GENERATORS_HPP
