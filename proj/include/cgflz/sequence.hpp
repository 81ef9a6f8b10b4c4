#ifndef CGFLZ_SEQUENCE_HPP
#define CGFLZ_SEQUENCE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cgflz/alphabet.hpp"

namespace cgflz {

enum class SequenceFormat { RawBytes, TokenText };

/// Immutable individual sequence over a declared alphabet. Empty is legal.
struct SymbolSequence {
    Alphabet alphabet;
    std::vector<Symbol> symbols;

    std::size_t size() const { return symbols.size(); }
    std::size_t alpha() const { return alphabet.size(); }
};

/// RawBytes: each byte is a symbol index. TokenText: whitespace-separated
/// tokens when the payload contains interior whitespace, otherwise one token
/// per character. Unknown tokens raise UnknownSymbolError.
SymbolSequence load_sequence(std::string_view raw, const Alphabet& alphabet,
                             SequenceFormat format);

/// Token-text rendering (single-char alphabets concatenate, others space-separate).
std::string format_tokens(const SymbolSequence& x);

/// Convenience for tests: builds a sequence over Alphabet::indexed(alpha) from
/// digit characters, e.g. make_sequence("010001", 2).
SymbolSequence make_sequence(std::string_view digits, std::size_t alpha);

}  // namespace cgflz

#endif
