#include "cgflz/tilted_code.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cgflz/bitstream.hpp"
#include "cgflz/errors.hpp"
#include "cgflz/lz78.hpp"

namespace cgflz {
namespace {

constexpr double kCeilNudge = 1e-9;
constexpr std::uint8_t kStreamVersion = 1;

std::uint32_t ideal_ceil(double bits) {
    double c = std::ceil(bits - kCeilNudge);
    return c <= 0.0 ? 0u : static_cast<std::uint32_t>(c);
}

}  // namespace

TiltedCode build_tilted_code(const BlockStats& stats, Rational lambda) {
    if (stats.block_count == 0) throw std::invalid_argument("empty block statistics");
    if (lambda.num < 0 || lambda.den <= 0)
        throw std::invalid_argument("tilt parameter must be a nonnegative rational");

    const double lam = lambda.value();
    const double q = 1.0 / (1.0 + lam);
    // P(a)^q / sum P^q == count^q / sum count^q: the total block count cancels.
    std::vector<double> exponents;
    exponents.reserve(stats.counts.size());
    for (const auto& [block, count] : stats.counts)
        exponents.push_back(q * std::log2(static_cast<double>(count)));
    const double log2_s = log2_sum_exp2(exponents);

    TiltedCode code;
    code.ell = stats.ell;
    code.alpha = stats.alpha;
    code.lambda = lambda;
    std::size_t i = 0;
    for (const auto& [block, count] : stats.counts) {
        TiltedCodeEntry e;
        e.block = block;
        e.count = count;
        double neg_log2_q = log2_s - exponents[i++];
        e.tilted_prob = std::exp2(-neg_log2_q);
        e.length = ideal_ceil(neg_log2_q);
        code.entries.push_back(std::move(e));
    }
    std::sort(code.entries.begin(), code.entries.end(),
              [](const TiltedCodeEntry& a, const TiltedCodeEntry& b) {
                  return a.length != b.length ? a.length < b.length : a.block < b.block;
              });

    // Canonical codeword assignment over the sorted (length, block) order.
    std::uint64_t next_code = 0;
    std::uint32_t prev_len = code.entries.empty() ? 0 : code.entries.front().length;
    for (std::size_t k = 0; k < code.entries.size(); ++k) {
        auto& e = code.entries[k];
        if (k > 0) next_code = (next_code + 1) << (e.length - prev_len);
        e.codeword = next_code;
        prev_len = e.length;
        code.kraft_sum += std::exp2(-static_cast<double>(e.length));
        code.index.emplace(e.block, k);
    }

    const double m1 = std::log2(static_cast<double>(stats.block_count) + 1.0);
    const std::uint64_t d = code.entries.size();
    code.header_bits = d * ceil_log2(stats.block_count + 1) +
                       d * stats.ell * ceil_log2(stats.alpha);
    code.worst_case_header_bits =
        std::exp2(static_cast<double>(stats.ell) *
                  std::log2(static_cast<double>(stats.alpha))) *
        m1;
    return code;
}

TiltedEncoded encode_blocks(const SymbolSequence& x, const TiltedCode& code) {
    if (code.ell == 0 || x.size() % code.ell != 0)
        throw DivisibilityError(x.size(), code.ell);
    if (x.size() == 0) throw std::invalid_argument("cannot encode an empty sequence");
    if (code.alpha > 0xffff || code.ell > 0xffffffffull)
        throw std::invalid_argument("stream format limits exceeded");
    if (code.lambda.num > 0xffffffffll || code.lambda.den > 0xffffffffll)
        throw std::invalid_argument("tilt parameter too large for the stream header");

    TiltedEncoded enc;
    BitWriter w;
    w.write_bits(kStreamVersion, 8);
    w.write_bits(code.alpha, 16);
    w.write_bits(code.ell, 32);
    w.write_bits(static_cast<std::uint64_t>(code.lambda.num), 32);
    w.write_bits(static_cast<std::uint64_t>(code.lambda.den), 32);
    w.write_bits(code.entries.size(), 32);
    for (const auto& e : code.entries) {
        for (auto sym : e.block) w.write_bits(sym, 16);
        if (e.count > 0xffffffffull)
            throw std::invalid_argument("block count too large for the stream header");
        w.write_bits(e.count, 32);
    }
    enc.header_bytes = w.bit_count() / 8;

    enc.payload_profile.granularity = Granularity::PerBlock;
    enc.payload_profile.source = "tilted-block";
    for (std::size_t start = 0; start < x.size(); start += code.ell) {
        std::vector<Symbol> block(x.symbols.begin() + static_cast<std::ptrdiff_t>(start),
                                  x.symbols.begin() +
                                      static_cast<std::ptrdiff_t>(start + code.ell));
        auto it = code.index.find(block);
        if (it == code.index.end())
            throw std::invalid_argument("block outside the code support");
        const auto& e = code.entries[it->second];
        w.write_bits(e.codeword, e.length);
        enc.payload_profile.lengths.push_back(e.length);
        enc.payload_bits += e.length;
    }
    enc.stream = w.take();
    return enc;
}

SymbolSequence tilted_decode(std::span<const std::uint8_t> stream) {
    BitReader r(stream);
    std::uint64_t version = 0, alpha = 0, ell = 0, num = 0, den = 0, distinct = 0;
    try {
        version = r.read_bits(8);
        alpha = r.read_bits(16);
        ell = r.read_bits(32);
        num = r.read_bits(32);
        den = r.read_bits(32);
        distinct = r.read_bits(32);
    } catch (const DecodeError&) {
        throw DecodeError(DecodeError::Kind::BadHeader, "stream shorter than header");
    }
    if (version != kStreamVersion)
        throw DecodeError(DecodeError::Kind::BadHeader,
                          "unsupported stream version " + std::to_string(version));
    if (alpha < 2 || ell == 0 || den == 0 || distinct == 0)
        throw DecodeError(DecodeError::Kind::BadHeader, "degenerate header field");

    BlockStats stats;
    stats.ell = ell;
    stats.alpha = alpha;
    for (std::uint64_t d = 0; d < distinct; ++d) {
        std::vector<Symbol> block;
        block.reserve(ell);
        for (std::uint64_t k = 0; k < ell; ++k) {
            auto sym = r.read_bits(16);
            if (sym >= alpha)
                throw DecodeError(DecodeError::Kind::Corrupt, "symbol outside alphabet");
            block.push_back(static_cast<Symbol>(sym));
        }
        auto count = r.read_bits(32);
        if (count == 0)
            throw DecodeError(DecodeError::Kind::Corrupt, "zero count in header");
        if (!stats.counts.emplace(std::move(block), count).second)
            throw DecodeError(DecodeError::Kind::Corrupt, "duplicate block in header");
        stats.block_count += count;
    }

    // The code is a pure function of (counts, lambda): rebuild and decode.
    auto code = build_tilted_code(
        stats, Rational{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)});

    std::uint32_t max_len = 0;
    for (const auto& e : code.entries) max_len = std::max(max_len, e.length);
    // first_code/count per length for canonical decoding.
    std::vector<std::uint64_t> first_code(max_len + 1, 0), first_idx(max_len + 1, 0),
        group(max_len + 1, 0);
    for (std::size_t k = 0; k < code.entries.size(); ++k) {
        auto len = code.entries[k].length;
        if (group[len] == 0) {
            first_code[len] = code.entries[k].codeword;
            first_idx[len] = k;
        }
        ++group[len];
    }

    SymbolSequence x{Alphabet::indexed(alpha), {}};
    x.symbols.reserve(stats.block_count * ell);
    for (std::uint64_t t = 0; t < stats.block_count; ++t) {
        const TiltedCodeEntry* entry = nullptr;
        if (max_len == 0) {
            entry = &code.entries.front();  // single zero-length codeword
        } else {
            std::uint64_t value = 0;
            for (std::uint32_t len = 1; len <= max_len; ++len) {
                value = (value << 1) | r.read_bit();
                if (group[len] > 0 && value >= first_code[len] &&
                    value - first_code[len] < group[len]) {
                    entry = &code.entries[first_idx[len] + (value - first_code[len])];
                    break;
                }
            }
            if (!entry)
                throw DecodeError(DecodeError::Kind::Corrupt, "undecodable codeword");
        }
        x.symbols.insert(x.symbols.end(), entry->block.begin(), entry->block.end());
    }
    if (!r.remainder_is_zero_padding())
        throw DecodeError(DecodeError::Kind::Corrupt, "nonzero trailing padding");
    return x;
}

}  // namespace cgflz
