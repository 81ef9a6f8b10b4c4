#ifndef CGFLZ_RNG_HPP
#define CGFLZ_RNG_HPP

#include <cstdint>
#include <random>

namespace cgflz {

/// Seeded generator with a bit-exact cross-platform sequence. std::mt19937_64 is
/// fully specified by the standard; the range reduction below is ours because
/// std::uniform_int_distribution is implementation-defined and would break
/// byte-identical reports.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    static constexpr const char* name() { return "mt19937_64"; }

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, m), m >= 1. Multiply-shift reduction (negligible bias at
    /// desk-scale m, deterministic everywhere).
    std::uint64_t below(std::uint64_t m) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * m) >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

}  // namespace cgflz

#endif
