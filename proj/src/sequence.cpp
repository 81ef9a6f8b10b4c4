#include "cgflz/sequence.hpp"

#include <cctype>

#include "cgflz/errors.hpp"

namespace cgflz {
namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

SymbolSequence from_tokens(std::string_view payload, const Alphabet& alphabet) {
    std::vector<Symbol> symbols;
    // Interior whitespace => whitespace-separated tokens; otherwise one token per
    // character (the compact form for single-char alphabets).
    bool interior_ws = false;
    for (char c : payload)
        if (is_space(c)) { interior_ws = true; break; }
    if (interior_ws) {
        std::size_t i = 0, pos = 0;
        while (i < payload.size()) {
            while (i < payload.size() && is_space(payload[i])) ++i;
            std::size_t start = i;
            while (i < payload.size() && !is_space(payload[i])) ++i;
            if (i > start) {
                auto token = payload.substr(start, i - start);
                auto idx = alphabet.index_of(token);
                if (!idx) throw UnknownSymbolError(std::string(token), pos);
                symbols.push_back(*idx);
                ++pos;
            }
        }
    } else {
        for (std::size_t i = 0; i < payload.size(); ++i) {
            auto token = payload.substr(i, 1);
            auto idx = alphabet.index_of(token);
            if (!idx) throw UnknownSymbolError(std::string(token), i);
            symbols.push_back(*idx);
        }
    }
    return SymbolSequence{alphabet, std::move(symbols)};
}

}  // namespace

SymbolSequence load_sequence(std::string_view raw, const Alphabet& alphabet,
                             SequenceFormat format) {
    if (format == SequenceFormat::RawBytes) {
        std::vector<Symbol> symbols;
        symbols.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            auto b = static_cast<unsigned char>(raw[i]);
            if (b >= alphabet.size())
                throw UnknownSymbolError("byte " + std::to_string(b), i);
            symbols.push_back(b);
        }
        return SymbolSequence{alphabet, std::move(symbols)};
    }
    // Leading/trailing whitespace (e.g. the final newline) is not content.
    std::string_view payload = raw;
    while (!payload.empty() && is_space(payload.front())) payload.remove_prefix(1);
    while (!payload.empty() && is_space(payload.back())) payload.remove_suffix(1);
    return from_tokens(payload, alphabet);
}

std::string format_tokens(const SymbolSequence& x) {
    std::string out;
    for (std::size_t i = 0; i < x.symbols.size(); ++i) {
        if (i && !x.alphabet.single_char_labels()) out += ' ';
        out += x.alphabet.label(x.symbols[i]);
    }
    return out;
}

SymbolSequence make_sequence(std::string_view digits, std::size_t alpha) {
    return load_sequence(digits, Alphabet::indexed(alpha), SequenceFormat::TokenText);
}

}  // namespace cgflz
