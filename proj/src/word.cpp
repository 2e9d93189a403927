#include "motrec/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace motrec {

Alphabet::Alphabet(std::string glyphs) : glyphs_(std::move(glyphs)) {
    if (glyphs_.empty()) {
        throw std::invalid_argument("alphabet must not be empty");
    }
    if (glyphs_.size() > kMaxSize) {
        throw std::invalid_argument("alphabet larger than 64 symbols");
    }
    index_.fill(-1);
    for (std::size_t i = 0; i < glyphs_.size(); ++i) {
        const auto c = static_cast<unsigned char>(glyphs_[i]);
        if (c < 0x21 || c > 0x7e) {
            throw std::invalid_argument("alphabet glyphs must be printable ASCII");
        }
        if (index_[c] != -1) {
            throw std::invalid_argument(std::string("duplicate glyph '") + glyphs_[i] + "'");
        }
        index_[c] = static_cast<std::int16_t>(i);
    }
}

Alphabet Alphabet::of(std::string_view text) {
    std::string glyphs(text);
    std::sort(glyphs.begin(), glyphs.end());
    glyphs.erase(std::unique(glyphs.begin(), glyphs.end()), glyphs.end());
    return Alphabet(std::move(glyphs));
}

std::optional<Symbol> Alphabet::index_of(char g) const {
    const auto i = index_[static_cast<unsigned char>(g)];
    if (i < 0) return std::nullopt;
    return static_cast<Symbol>(i);
}

Alphabet Alphabet::with(char g) const {
    if (contains(g)) return *this;
    return Alphabet(glyphs_ + g);
}

FiniteWord::FiniteWord(Alphabet alphabet, std::vector<Symbol> data)
    : alphabet_(std::move(alphabet)), data_(std::move(data)) {
    for (Symbol s : data_) {
        if (s >= alphabet_.size()) {
            throw std::invalid_argument("symbol index outside alphabet");
        }
    }
}

FiniteWord FiniteWord::parse(std::string_view glyphs) {
    if (glyphs.empty()) {
        throw std::invalid_argument("cannot infer an alphabet from the empty word");
    }
    return parse(glyphs, Alphabet::of(glyphs));
}

FiniteWord FiniteWord::parse(std::string_view glyphs, const Alphabet& alphabet) {
    std::vector<Symbol> data;
    data.reserve(glyphs.size());
    for (char g : glyphs) {
        auto s = alphabet.index_of(g);
        if (!s) {
            throw std::invalid_argument(std::string("glyph '") + g + "' not in alphabet \"" +
                                        alphabet.glyphs() + "\"");
        }
        data.push_back(*s);
    }
    return FiniteWord(alphabet, std::move(data));
}

std::string FiniteWord::str() const {
    std::string out;
    out.reserve(data_.size());
    for (Symbol s : data_) out.push_back(alphabet_.glyph(s));
    return out;
}

FiniteWord FiniteWord::slice(std::size_t pos, std::size_t len) const {
    if (pos > data_.size()) throw std::out_of_range("slice start past end of word");
    len = std::min(len, data_.size() - pos);
    return FiniteWord(alphabet_, std::vector<Symbol>(data_.begin() + static_cast<std::ptrdiff_t>(pos),
                                                     data_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::vector<std::size_t> occurrences(const FiniteWord& w, const FiniteWord& u) {
    if (w.empty()) throw std::invalid_argument("occurrences of the empty word");
    const std::string needle = w.str();
    const std::string hay = u.str();
    std::vector<std::size_t> out;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) {
        out.push_back(p);
    }
    return out;
}

WordSource::WordSource(std::string descriptor, Alphabet alphabet, Producer producer)
    : descriptor_(std::move(descriptor)), alphabet_(std::move(alphabet)), producer_(std::move(producer)) {}

FiniteWord WordSource::prefix(std::size_t n) const {
    auto data = producer_(n);
    if (data.size() < n) throw std::logic_error("word source produced a short prefix");
    data.resize(n);
    return FiniteWord(alphabet_, std::move(data));
}

} // namespace motrec
