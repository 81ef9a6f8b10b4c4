#ifndef CGFLZ_SIDEINFO_HPP
#define CGFLZ_SIDEINFO_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cgflz/cgf.hpp"
#include "cgflz/parsing.hpp"
#include "cgflz/sequence.hpp"

namespace cgflz {

/// Joint incremental parsing of (x, u) over the pair alphabet. Contexts are the
/// distinct u-phrases in order of first appearance; context_counts[k] is the
/// number of phrases whose u-part equals u_phrases[k].
struct JointParsing {
    Parsing parsing;                              // boundaries over the pair sequence
    std::vector<std::size_t> prefix_index;        // joint-dictionary prefix per phrase
    std::vector<Symbol> last_x_symbol;            // final x symbol per phrase
    std::vector<std::vector<Symbol>> u_phrases;   // distinct u-phrases, first-appearance order
    std::vector<std::size_t> context_of_phrase;   // k per phrase (0-based)
    std::vector<std::uint64_t> context_counts;    // c_k, sums to c
    std::vector<std::size_t> index_in_context;    // j per phrase (1-based)

    std::size_t c() const { return parsing.phrase_count(); }
    std::size_t context_count() const { return u_phrases.size(); }

    /// Per-context counts of pairwise-distinct x-phrases: an incomplete tail
    /// repeats an earlier pair in its own context, so converse floors must not
    /// count it twice. Every adjusted count stays >= 1 because the repeated
    /// pair's first occurrence lives in the same context.
    std::vector<std::uint64_t> distinct_context_counts() const {
        auto out = context_counts;
        if (parsing.last_incomplete && !context_of_phrase.empty())
            --out[context_of_phrase.back()];
        return out;
    }
};

/// Requires equal lengths over the respective alphabets.
JointParsing joint_incremental_parse(const SymbolSequence& x, const SymbolSequence& u);

/// Per-phrase conditional code lengths: the j-th phrase of its context costs
/// ceil(log2(alpha * j)) bits, alpha = |x alphabet|.
LengthProfile conditional_lz_lengths(const JointParsing& jp, std::size_t alpha);

/// Demonstration codec realizing exactly the conditional lengths as payload.
/// Those lengths alone do not pin down a self-contained decoder, so the side
/// channel carries phrase boundaries and joint-dictionary prefix pointers
/// (serialized as 32-bit words; cost reported separately, excluded from CGF
/// accounting). The payload word of phrase (context k, index j) is its final
/// x-symbol zero-padded to ceil(log2(alpha j)) bits.
struct ConditionalEncoded {
    std::vector<std::uint8_t> payload;
    std::vector<std::uint8_t> side_channel;
    std::uint64_t payload_bits = 0;
    std::uint64_t side_channel_bits = 0;
    LengthProfile profile;
    JointParsing joint;
};

ConditionalEncoded conditional_lz_encode(const SymbolSequence& x, const SymbolSequence& u);

SymbolSequence conditional_lz_decode(std::span<const std::uint8_t> payload,
                                     std::span<const std::uint8_t> side_channel,
                                     const SymbolSequence& u, const Alphabet& x_alphabet);

bool conditional_lz_roundtrip(const SymbolSequence& x, const SymbolSequence& u);

}  // namespace cgflz

#endif
