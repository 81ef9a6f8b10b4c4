#ifndef CGFLZ_LZ78_HPP
#define CGFLZ_LZ78_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cgflz/parsing.hpp"
#include "cgflz/sequence.hpp"

namespace cgflz {

/// Incremental parsing: each phrase is the shortest string not yet in the
/// dictionary; the final phrase may be an incomplete repeat. prefix_index[i]
/// and last_symbol[i] describe phrase i+1 as (dictionary phrase, one symbol),
/// which is exactly what the codewords carry.
struct IncrementalParse {
    Parsing parsing;
    PhraseDictionary dictionary;
    std::vector<std::size_t> prefix_index;
    std::vector<Symbol> last_symbol;

    std::size_t c() const { return parsing.phrase_count(); }
};

IncrementalParse incremental_parse(const SymbolSequence& x);

/// ceil(log2(m)) for m >= 1.
unsigned ceil_log2(std::uint64_t m);

/// Code length of the i-th phrase (1-based): ceil(log2(alpha * i)) bits.
std::vector<std::uint64_t> lz_phrase_lengths(std::size_t phrase_count, std::size_t alpha);

/// Serialized stream: alpha as 16-bit big-endian, n as 64-bit big-endian, then
/// phrase codewords value = prefix_index * alpha + last_symbol, MSB first,
/// fixed width ceil(log2(alpha * i)); trailing pad bits zero.
struct LzEncoded {
    std::vector<std::uint8_t> stream;
    std::vector<std::uint64_t> phrase_lengths;
    Parsing parsing;
    std::uint64_t payload_bits = 0;
};

LzEncoded lz_encode(const SymbolSequence& x);

/// Inverse of lz_encode; the decoded sequence uses Alphabet::indexed(alpha).
/// Raises DecodeError on truncation, prefix index >= phrase index, phrase
/// overshoot past n, or nonzero trailing padding.
SymbolSequence lz_decode(std::span<const std::uint8_t> stream);

enum class PhraseCountMethod { Incremental, MaxDistinct };

/// Phrase counts of each ell-block parsed in isolation (restart at every block
/// boundary). Requires ell | n. `counts` tallies every phrase the per-block
/// code emits; `distinct_counts` drops a repeated final phrase, which is the
/// quantity converse floors may rely on.
struct BlockPhraseCounts {
    std::size_t ell = 0;
    PhraseCountMethod method = PhraseCountMethod::Incremental;
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> distinct_counts;
};

BlockPhraseCounts block_restarted_counts(const SymbolSequence& x, std::size_t ell,
                                         PhraseCountMethod method);

enum class MaxDistinctMode { Auto, BruteForce, Greedy };

/// Largest number of phrases over all parsings into distinct phrases (last
/// phrase exempt). BruteForce enumerates boundary sets (n <= 20); Greedy is the
/// shortest-unseen incremental parse, a lower bound that exhaustive sweeps show
/// is not always maximal. Auto picks BruteForce when n <= 20. `distinct_count`
/// is the largest number of pairwise-distinct phrase strings over all parsings
/// (= count when the maximal parsing needs no repeated tail); converse floors
/// use it.
struct MaxDistinctResult {
    Parsing parsing;
    std::uint64_t count = 0;
    std::uint64_t distinct_count = 0;
    bool exact = false;
};

MaxDistinctResult max_distinct_parse(const SymbolSequence& x,
                                     MaxDistinctMode mode = MaxDistinctMode::Auto);

}  // namespace cgflz

#endif
