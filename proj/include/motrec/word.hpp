#ifndef MOTREC_WORD_HPP
#define MOTREC_WORD_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace motrec {

using Symbol = std::uint8_t;

/// Ordered set of distinct single-character glyphs. Symbols are indices into it.
class Alphabet {
public:
    static constexpr std::size_t kMaxSize = 64;

    explicit Alphabet(std::string glyphs);

    /// Sorted distinct glyphs of `text`.
    static Alphabet of(std::string_view text);

    std::size_t size() const { return glyphs_.size(); }
    const std::string& glyphs() const { return glyphs_; }
    char glyph(Symbol s) const { return glyphs_[s]; }

    std::optional<Symbol> index_of(char g) const;
    bool contains(char g) const { return index_of(g).has_value(); }

    /// This alphabet, with `g` appended when absent.
    Alphabet with(char g) const;

    bool operator==(const Alphabet& other) const { return glyphs_ == other.glyphs_; }

private:
    std::string glyphs_;
    std::array<std::int16_t, 256> index_{};
};

/// A finite word over an alphabet; the empty word is allowed.
class FiniteWord {
public:
    explicit FiniteWord(Alphabet alphabet, std::vector<Symbol> data = {});

    /// Parses a glyph string, inferring the alphabet as its sorted distinct glyphs.
    /// Throws std::invalid_argument on an empty string (no alphabet to infer).
    static FiniteWord parse(std::string_view glyphs);
    static FiniteWord parse(std::string_view glyphs, const Alphabet& alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    std::span<const Symbol> symbols() const { return data_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    Symbol operator[](std::size_t i) const { return data_[i]; }

    /// Raw symbol indices viewed as bytes; used as hash keys.
    std::string_view bytes() const {
        return {reinterpret_cast<const char*>(data_.data()), data_.size()};
    }

    std::string str() const;

    FiniteWord slice(std::size_t pos, std::size_t len) const;
    FiniteWord prefix(std::size_t n) const { return slice(0, n); }

    bool operator==(const FiniteWord& other) const {
        return alphabet_ == other.alphabet_ && data_ == other.data_;
    }

private:
    Alphabet alphabet_;
    std::vector<Symbol> data_;
};

/// Start positions of `w` in `u`, overlaps included, compared glyph by glyph.
/// Throws std::invalid_argument when `w` is empty.
std::vector<std::size_t> occurrences(const FiniteWord& w, const FiniteWord& u);

/// Deterministic producer of prefixes of one infinite word.
///
/// The producer must return exactly `n` symbols and be a pure function of `n`,
/// so that prefix(m) is a prefix of prefix(n) whenever m <= n.
class WordSource {
public:
    using Producer = std::function<std::vector<Symbol>(std::size_t)>;

    WordSource(std::string descriptor, Alphabet alphabet, Producer producer);

    const std::string& descriptor() const { return descriptor_; }
    const Alphabet& alphabet() const { return alphabet_; }

    FiniteWord prefix(std::size_t n) const;

private:
    std::string descriptor_;
    Alphabet alphabet_;
    Producer producer_;
};

inline FiniteWord prefix(const WordSource& source, std::size_t n) { return source.prefix(n); }

} // namespace motrec

#endif // MOTREC_WORD_HPP
