#include "cgflz/lz78.hpp"

#include <bit>
#include <set>
#include <stdexcept>

#include "cgflz/bitstream.hpp"

namespace cgflz {

IncrementalParse incremental_parse(const SymbolSequence& x) {
    IncrementalParse r;
    const auto n = x.size();
    std::size_t node = 0;  // current match in the trie
    for (std::size_t i = 0; i < n; ++i) {
        Symbol a = x.symbols[i];
        auto next = r.dictionary.child(node, a);
        if (next) {
            node = *next;
            continue;
        }
        r.dictionary.insert(node, a);
        r.prefix_index.push_back(node);
        r.last_symbol.push_back(a);
        r.parsing.boundaries.push_back(i + 1);
        node = 0;
    }
    if (node != 0) {
        // Input ended mid-match: the tail equals dictionary phrase `node`.
        r.prefix_index.push_back(r.dictionary.parent(node));
        r.last_symbol.push_back(r.dictionary.last_symbol(node));
        r.parsing.boundaries.push_back(n);
        r.parsing.last_incomplete = true;
    }
    return r;
}

unsigned ceil_log2(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("ceil_log2(0)");
    return static_cast<unsigned>(std::bit_width(m - 1));
}

std::vector<std::uint64_t> lz_phrase_lengths(std::size_t phrase_count, std::size_t alpha) {
    std::vector<std::uint64_t> lengths;
    lengths.reserve(phrase_count);
    for (std::size_t i = 1; i <= phrase_count; ++i)
        lengths.push_back(ceil_log2(static_cast<std::uint64_t>(alpha) * i));
    return lengths;
}

LzEncoded lz_encode(const SymbolSequence& x) {
    if (x.size() == 0) throw std::invalid_argument("cannot encode an empty sequence");
    if (x.alpha() > 0xffff) throw std::invalid_argument("stream format caps alpha at 65535");
    auto parse = incremental_parse(x);
    const auto alpha = x.alpha();

    LzEncoded enc;
    enc.parsing = parse.parsing;
    enc.phrase_lengths = lz_phrase_lengths(parse.c(), alpha);

    BitWriter header;
    header.write_bits(alpha, 16);
    header.write_bits(x.size(), 64);
    enc.stream = header.take();

    BitWriter payload;
    for (std::size_t i = 0; i < parse.c(); ++i) {
        std::uint64_t value = parse.prefix_index[i] * alpha + parse.last_symbol[i];
        payload.write_bits(value, static_cast<unsigned>(enc.phrase_lengths[i]));
    }
    enc.payload_bits = payload.bit_count();
    auto body = payload.take();
    enc.stream.insert(enc.stream.end(), body.begin(), body.end());
    return enc;
}

SymbolSequence lz_decode(std::span<const std::uint8_t> stream) {
    BitReader reader(stream);
    std::uint64_t alpha = 0, n = 0;
    try {
        alpha = reader.read_bits(16);
        n = reader.read_bits(64);
    } catch (const DecodeError&) {
        throw DecodeError(DecodeError::Kind::BadHeader, "stream shorter than header");
    }
    if (alpha < 2)
        throw DecodeError(DecodeError::Kind::BadHeader,
                          "alphabet size " + std::to_string(alpha) + " in header");

    SymbolSequence x{Alphabet::indexed(alpha), {}};
    x.symbols.reserve(n);
    PhraseDictionary dict;
    std::vector<std::size_t> node_of_phrase{0};  // 1-based phrase id -> trie node
    for (std::uint64_t i = 1; x.symbols.size() < n; ++i) {
        auto width = ceil_log2(alpha * i);
        std::uint64_t value = reader.read_bits(width);
        std::uint64_t prefix = value / alpha;
        Symbol last = static_cast<Symbol>(value % alpha);
        if (prefix >= i)
            throw DecodeError(DecodeError::Kind::IndexOutOfRange,
                              "phrase " + std::to_string(i) + " references prefix " +
                                  std::to_string(prefix));
        auto phrase = dict.phrase(node_of_phrase[prefix]);
        phrase.push_back(last);
        if (x.symbols.size() + phrase.size() > n)
            throw DecodeError(DecodeError::Kind::Corrupt,
                              "phrase " + std::to_string(i) + " overruns declared length");
        x.symbols.insert(x.symbols.end(), phrase.begin(), phrase.end());
        // Dictionary updates mirror the encoder: a final incomplete phrase is a
        // duplicate, but nothing references it afterwards.
        auto existing = dict.child(node_of_phrase[prefix], last);
        node_of_phrase.push_back(existing ? *existing
                                          : dict.insert(node_of_phrase[prefix], last));
    }
    if (!reader.remainder_is_zero_padding())
        throw DecodeError(DecodeError::Kind::Corrupt, "nonzero trailing padding");
    return x;
}

BlockPhraseCounts block_restarted_counts(const SymbolSequence& x, std::size_t ell,
                                         PhraseCountMethod method) {
    if (ell == 0) throw std::invalid_argument("block length must be positive");
    if (x.size() % ell != 0) throw DivisibilityError(x.size(), ell);
    BlockPhraseCounts out;
    out.ell = ell;
    out.method = method;
    for (std::size_t start = 0; start < x.size(); start += ell) {
        SymbolSequence block{x.alphabet,
                             {x.symbols.begin() + static_cast<std::ptrdiff_t>(start),
                              x.symbols.begin() + static_cast<std::ptrdiff_t>(start + ell)}};
        if (method == PhraseCountMethod::Incremental) {
            auto parse = incremental_parse(block);
            out.counts.push_back(parse.c());
            out.distinct_counts.push_back(parse.parsing.distinct_phrase_count());
        } else {
            auto best = max_distinct_parse(block);
            out.counts.push_back(best.count);
            out.distinct_counts.push_back(best.distinct_count);
        }
    }
    return out;
}

namespace {

/// DFS over boundary sets keeping phrases distinct (final phrase exempt). Two
/// maxima are tracked: the phrase count (a repeated tail counts) and the
/// distinct-string count (it does not). Pruning stops only when the subtree
/// can improve neither, since even one-symbol phrases cannot lift a count past
/// current + remaining.
struct MaxDistinctSearch {
    const std::vector<Symbol>& x;
    std::set<std::vector<Symbol>> used;
    std::vector<std::size_t> stack, best_bounds;
    std::uint64_t best = 0, best_distinct = 0;

    explicit MaxDistinctSearch(const std::vector<Symbol>& xs) : x(xs) {}

    void dfs(std::size_t pos) {
        const auto n = x.size();
        if (pos == n) {
            if (stack.size() > best) {
                best = stack.size();
                best_bounds = stack;
            }
            if (used.size() > best_distinct) best_distinct = used.size();
            return;
        }
        const auto rem = n - pos;
        if (stack.size() + rem <= best && used.size() + rem <= best_distinct) return;
        for (std::size_t end = pos + 1; end <= n; ++end) {
            std::vector<Symbol> phrase(x.begin() + static_cast<std::ptrdiff_t>(pos),
                                       x.begin() + static_cast<std::ptrdiff_t>(end));
            bool fresh = !used.contains(phrase);
            if (!fresh && end != n) continue;  // only the last phrase may repeat
            if (fresh) used.insert(phrase);
            stack.push_back(end);
            dfs(end);
            stack.pop_back();
            if (fresh) used.erase(phrase);
        }
    }
};

}  // namespace

MaxDistinctResult max_distinct_parse(const SymbolSequence& x, MaxDistinctMode mode) {
    constexpr std::size_t kBruteForceLimit = 20;
    if (mode == MaxDistinctMode::Auto)
        mode = x.size() <= kBruteForceLimit ? MaxDistinctMode::BruteForce
                                            : MaxDistinctMode::Greedy;
    if (mode == MaxDistinctMode::Greedy) {
        auto parse = incremental_parse(x);
        return {parse.parsing, parse.c(), parse.parsing.distinct_phrase_count(), false};
    }
    if (x.size() > kBruteForceLimit)
        throw std::invalid_argument("brute-force max-distinct capped at n = " +
                                    std::to_string(kBruteForceLimit));
    if (x.size() == 0) return {Parsing{}, 0, 0, true};

    MaxDistinctSearch search(x.symbols);
    search.dfs(0);
    Parsing p;
    p.boundaries = search.best_bounds;
    auto phrases = split_phrases(x, p);
    for (std::size_t k = 0; k + 1 < phrases.size(); ++k)
        if (phrases[k] == phrases.back()) { p.last_incomplete = true; break; }
    return {p, search.best, search.best_distinct, true};
}

}  // namespace cgflz
