#ifndef CGFLZ_BITSTREAM_HPP
#define CGFLZ_BITSTREAM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cgflz/errors.hpp"

namespace cgflz {

/// MSB-first bit sink; the final byte is zero-padded.
class BitWriter {
public:
    void write_bits(std::uint64_t value, unsigned width) {
        for (unsigned i = width; i-- > 0;) push_bit((value >> i) & 1u);
    }

    void push_bit(unsigned bit) {
        if (bit_count_ % 8 == 0) buf_.push_back(0);
        if (bit) buf_.back() |= static_cast<std::uint8_t>(0x80u >> (bit_count_ % 8));
        ++bit_count_;
    }

    std::uint64_t bit_count() const { return bit_count_; }
    const std::vector<std::uint8_t>& bytes() const { return buf_; }
    std::vector<std::uint8_t> take() { return std::move(buf_); }

private:
    std::vector<std::uint8_t> buf_;
    std::uint64_t bit_count_ = 0;
};

/// MSB-first bit source over a byte span; reading past the end raises
/// DecodeError(Truncated).
class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint64_t read_bits(unsigned width) {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < width; ++i) v = (v << 1) | read_bit();
        return v;
    }

    unsigned read_bit() {
        if (pos_ >= 8 * bytes_.size())
            throw DecodeError(DecodeError::Kind::Truncated, "bit stream exhausted");
        unsigned bit = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
        ++pos_;
        return bit;
    }

    std::uint64_t position() const { return pos_; }
    std::uint64_t bits_left() const { return 8 * bytes_.size() - pos_; }

    /// True when every bit from the cursor to the end is zero (valid padding).
    bool remainder_is_zero_padding() const {
        for (std::uint64_t p = pos_; p < 8 * bytes_.size(); ++p)
            if ((bytes_[p / 8] >> (7 - p % 8)) & 1u) return false;
        return true;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::uint64_t pos_ = 0;
};

}  // namespace cgflz

#endif
