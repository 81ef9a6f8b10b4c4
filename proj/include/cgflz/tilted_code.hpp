#ifndef CGFLZ_TILTED_CODE_HPP
#define CGFLZ_TILTED_CODE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cgflz/cgf.hpp"
#include "cgflz/empirical.hpp"
#include "cgflz/rational.hpp"

namespace cgflz {

struct TiltedCodeEntry {
    std::vector<Symbol> block;
    std::uint64_t count = 0;       // occurrences in the source sequence
    double tilted_prob = 0.0;      // Q*(block)
    std::uint32_t length = 0;      // ceil(-log2 Q*)
    std::uint64_t codeword = 0;    // canonical code, MSB-first in `length` bits
};

/// Tilted Shannon block code: Q*(a) = P(a)^(1/(1+lambda)) / sum P^(1/(1+lambda)),
/// lengths ceil(-log2 Q*) (with a 1e-9 ceiling nudge against FP noise), canonical
/// codeword assignment ordered by (length, block). Kraft sum <= 1 (+1e-9).
struct TiltedCode {
    std::size_t ell = 0;
    std::size_t alpha = 0;
    Rational lambda;
    std::vector<TiltedCodeEntry> entries;            // canonical order
    std::map<std::vector<Symbol>, std::size_t> index;  // block -> entry
    double kraft_sum = 0.0;
    std::uint64_t header_bits = 0;        // observed-blocks header model (see README)
    double worst_case_header_bits = 0.0;  // alpha^ell * log2(blocks + 1) figure
};

TiltedCode build_tilted_code(const BlockStats& stats, Rational lambda);

/// Stream layout (all big-endian): version u8, alpha u16, ell u32, lambda num/den
/// u32 each, distinct-block count u32, entries (ell u16 symbols + count u32),
/// then canonical codewords for each source block, zero-padded.
struct TiltedEncoded {
    std::vector<std::uint8_t> stream;
    LengthProfile payload_profile;        // per-block payload lengths
    std::uint64_t payload_bits = 0;
    std::uint64_t header_bytes = 0;
};

/// Requires every block of x to be in the code support.
TiltedEncoded encode_blocks(const SymbolSequence& x, const TiltedCode& code);

SymbolSequence tilted_decode(std::span<const std::uint8_t> stream);

}  // namespace cgflz

#endif
