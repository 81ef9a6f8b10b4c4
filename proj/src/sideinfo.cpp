#include "cgflz/sideinfo.hpp"

#include <map>
#include <stdexcept>

#include "cgflz/bitstream.hpp"
#include "cgflz/errors.hpp"
#include "cgflz/lz78.hpp"

namespace cgflz {
namespace {

Symbol pack_pair(Symbol a, Symbol b, std::size_t u_alpha) {
    return static_cast<Symbol>(a * u_alpha + b);
}

}  // namespace

JointParsing joint_incremental_parse(const SymbolSequence& x, const SymbolSequence& u) {
    if (x.size() != u.size())
        throw std::invalid_argument("sequence and side information differ in length");
    if (x.size() == 0) throw std::invalid_argument("cannot parse an empty sequence");
    const std::size_t u_alpha = u.alpha();
    if (static_cast<std::uint64_t>(x.alpha()) * u_alpha > 0xffffffffull)
        throw std::invalid_argument("pair alphabet too large");

    JointParsing jp;
    PhraseDictionary dict;  // over packed (x, u) pairs
    std::map<std::vector<Symbol>, std::size_t> context_index;
    std::size_t node = 0, start = 0;
    const std::size_t n = x.size();
    auto close_phrase = [&](std::size_t end, std::size_t prefix, Symbol last_x) {
        jp.parsing.boundaries.push_back(end);
        jp.prefix_index.push_back(prefix);
        jp.last_x_symbol.push_back(last_x);
        std::vector<Symbol> up(u.symbols.begin() + static_cast<std::ptrdiff_t>(start),
                               u.symbols.begin() + static_cast<std::ptrdiff_t>(end));
        auto [it, fresh] = context_index.emplace(std::move(up), jp.u_phrases.size());
        if (fresh) {
            jp.u_phrases.push_back(it->first);
            jp.context_counts.push_back(0);
        }
        jp.context_of_phrase.push_back(it->second);
        jp.index_in_context.push_back(
            static_cast<std::size_t>(++jp.context_counts[it->second]));
        start = end;
    };

    for (std::size_t t = 0; t < n; ++t) {
        Symbol pair = pack_pair(x.symbols[t], u.symbols[t], u_alpha);
        if (auto child = dict.child(node, pair)) {
            node = *child;
            continue;
        }
        dict.insert(node, pair);
        close_phrase(t + 1, node, x.symbols[t]);
        node = 0;
    }
    if (node != 0) {
        // Incomplete tail: repeats an existing joint phrase.
        jp.parsing.last_incomplete = true;
        Symbol pair = dict.last_symbol(node);
        close_phrase(n, dict.parent(node), static_cast<Symbol>(pair / u_alpha));
    }
    return jp;
}

LengthProfile conditional_lz_lengths(const JointParsing& jp, std::size_t alpha) {
    if (alpha < 2) throw std::invalid_argument("alphabet size must be at least 2");
    LengthProfile p;
    p.granularity = Granularity::PerPhrase;
    p.source = "conditional-lz";
    p.lengths.reserve(jp.c());
    for (std::size_t i = 0; i < jp.c(); ++i)
        p.lengths.push_back(ceil_log2(alpha * jp.index_in_context[i]));
    return p;
}

ConditionalEncoded conditional_lz_encode(const SymbolSequence& x,
                                         const SymbolSequence& u) {
    ConditionalEncoded enc;
    enc.joint = joint_incremental_parse(x, u);
    enc.profile = conditional_lz_lengths(enc.joint, x.alpha());

    BitWriter payload;
    for (std::size_t i = 0; i < enc.joint.c(); ++i)
        payload.write_bits(enc.joint.last_x_symbol[i],
                           static_cast<std::size_t>(enc.profile.lengths[i]));
    enc.payload_bits = payload.bit_count();
    enc.payload = payload.take();

    const std::size_t c = enc.joint.c();
    if (c > 0xffffffffull || x.size() > 0xffffffffull)
        throw std::invalid_argument("side-channel format limits exceeded");
    BitWriter side;
    side.write_bits(c, 32);
    for (auto b : enc.joint.parsing.boundaries) side.write_bits(b, 32);
    for (auto p : enc.joint.prefix_index) side.write_bits(p, 32);
    enc.side_channel_bits = side.bit_count();
    enc.side_channel = side.take();
    return enc;
}

SymbolSequence conditional_lz_decode(std::span<const std::uint8_t> payload,
                                     std::span<const std::uint8_t> side_channel,
                                     const SymbolSequence& u, const Alphabet& x_alphabet) {
    const std::size_t alpha = x_alphabet.size();
    BitReader side(side_channel);
    std::uint64_t c = 0;
    try {
        c = side.read_bits(32);
    } catch (const DecodeError&) {
        throw DecodeError(DecodeError::Kind::BadHeader, "side channel shorter than header");
    }
    if (c == 0) throw DecodeError(DecodeError::Kind::BadHeader, "empty parsing");
    std::vector<std::size_t> boundaries(c), prefixes(c);
    for (auto& b : boundaries) b = static_cast<std::size_t>(side.read_bits(32));
    for (auto& p : prefixes) p = static_cast<std::size_t>(side.read_bits(32));
    if (!side.remainder_is_zero_padding())
        throw DecodeError(DecodeError::Kind::Corrupt, "nonzero side-channel padding");
    for (std::size_t i = 0; i < c; ++i) {
        std::size_t prev = i == 0 ? 0 : boundaries[i - 1];
        if (boundaries[i] <= prev)
            throw DecodeError(DecodeError::Kind::Corrupt, "non-increasing boundary");
        if (prefixes[i] > i)
            throw DecodeError(DecodeError::Kind::IndexOutOfRange,
                              "prefix index " + std::to_string(prefixes[i]) +
                                  " not yet defined at phrase " + std::to_string(i + 1));
    }
    if (boundaries.back() != u.size())
        throw DecodeError(DecodeError::Kind::Corrupt,
                          "parsing does not tile the side-information length");

    // Recover each context's phrase count incrementally to know payload widths.
    std::map<std::vector<Symbol>, std::size_t> context_seen;
    BitReader r(payload);
    std::vector<std::vector<Symbol>> x_phrases(c + 1);  // [0] = empty root
    SymbolSequence x{x_alphabet, {}};
    x.symbols.reserve(u.size());
    for (std::size_t i = 0; i < c; ++i) {
        std::size_t begin = i == 0 ? 0 : boundaries[i - 1];
        std::vector<Symbol> up(u.symbols.begin() + static_cast<std::ptrdiff_t>(begin),
                               u.symbols.begin() +
                                   static_cast<std::ptrdiff_t>(boundaries[i]));
        std::size_t j = ++context_seen[std::move(up)];
        std::size_t width = ceil_log2(alpha * j);
        std::uint64_t sym = r.read_bits(width);
        if (sym >= alpha)
            throw DecodeError(DecodeError::Kind::Corrupt, "symbol outside alphabet");
        auto& phrase = x_phrases[i + 1];
        phrase = x_phrases[prefixes[i]];
        phrase.push_back(static_cast<Symbol>(sym));
        if (phrase.size() != boundaries[i] - begin)
            throw DecodeError(DecodeError::Kind::Corrupt,
                              "phrase length disagrees with boundaries");
        x.symbols.insert(x.symbols.end(), phrase.begin(), phrase.end());
    }
    if (!r.remainder_is_zero_padding())
        throw DecodeError(DecodeError::Kind::Corrupt, "nonzero trailing padding");
    return x;
}

bool conditional_lz_roundtrip(const SymbolSequence& x, const SymbolSequence& u) {
    auto enc = conditional_lz_encode(x, u);
    auto back = conditional_lz_decode(enc.payload, enc.side_channel, u, x.alphabet);
    return back.symbols == x.symbols;
}

}  // namespace cgflz
