#ifndef CGFLZ_ALPHABET_HPP
#define CGFLZ_ALPHABET_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgflz {

using Symbol = std::uint32_t;

/// Finite ordered alphabet; symbol identity is the dense index into the token list.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> labels);

    /// Canonical alphabet of a given size: single characters 0-9a-z when size
    /// allows, decimal strings beyond that.
    static Alphabet indexed(std::size_t size);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(Symbol s) const { return labels_.at(s); }
    std::optional<Symbol> index_of(std::string_view token) const;

    /// True when every label is one character, so token text can omit separators.
    bool single_char_labels() const { return single_char_; }

    bool operator==(const Alphabet& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::map<std::string, Symbol, std::less<>> index_;
    bool single_char_ = false;
};

/// Parses an alphabet declaration: one token per line, order defines indices.
Alphabet load_alphabet(std::string_view text);

}  // namespace cgflz

#endif
