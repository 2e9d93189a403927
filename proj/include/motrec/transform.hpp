#ifndef MOTREC_TRANSFORM_HPP
#define MOTREC_TRANSFORM_HPP

#include <cstddef>
#include <vector>

#include "motrec/word.hpp"

namespace motrec {

/// k-to-k substitution of a letter power: the source letter at every position
/// p with p mod (step + 1) == 0 is replaced by `letter` repeated `power` times.
struct SubstitutionSpec {
    std::size_t step = 1;   // k
    std::size_t power = 1;  // l
    char letter = 'c';
    bool internal = false;  // letter belongs to the source alphabet

    std::size_t period() const { return step + 1; }
    std::size_t block() const { return step + power; }

    /// Throws std::invalid_argument on k or l < 1, or when `internal`
    /// disagrees with membership of `letter` in `source`.
    void validate(const Alphabet& source) const;
};

/// Length of the image of a length-`source_len` prefix.
std::size_t transformed_length(std::size_t source_len, const SubstitutionSpec& spec);

/// Where the image of source position `p` starts in the transformed word.
std::size_t image_start(std::size_t p, const SubstitutionSpec& spec);

/// Source position whose image covers transformed position `t`.
std::size_t source_position(std::size_t t, const SubstitutionSpec& spec);

/// Half-open range of source positions whose images intersect
/// the transformed range [begin, begin + len).
struct SourceSpan {
    std::size_t first = 0;
    std::size_t last = 0;
    std::size_t length() const { return last - first; }
};
SourceSpan source_span(std::size_t begin, std::size_t len, const SubstitutionSpec& spec);

/// Applies the substitution to a whole finite word. The output alphabet is
/// the source alphabet with the letter appended when external.
FiniteWord substitute(const FiniteWord& u, const SubstitutionSpec& spec);

/// The transformed infinite word as a source; its prefixes are exact.
WordSource transformed(const WordSource& source, const SubstitutionSpec& spec);

/// Source-factor lengths that can generate a transformed factor of a given length.
///
/// `lo..hi` is the interval from the case analysis of the construction. For
/// lengths that are multiples of k + l the interval collapses to (k+1)q and the
/// lengths (k+1)q - 1 and (k+1)q + 1, reachable only through factors that start
/// and end inside a run of the letter, are listed in `boundary`.
struct OriginLengths {
    std::size_t lo = 0;
    std::size_t hi = 0;
    std::vector<std::size_t> boundary;

    bool contains(std::size_t len) const { return lo <= len && len <= hi; }
};
OriginLengths origin_lengths(std::size_t n_v, std::size_t k, std::size_t l);

} // namespace motrec

#endif // MOTREC_TRANSFORM_HPP
