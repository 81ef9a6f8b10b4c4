#ifndef CGFLZ_CGF_HPP
#define CGFLZ_CGF_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cgflz {

enum class Granularity { PerSymbol, PerBlock, PerPhrase };

/// Code lengths in bits at a declared granularity; `source` names the coder
/// that produced them (reports carry it through).
struct LengthProfile {
    Granularity granularity = Granularity::PerSymbol;
    std::vector<std::uint64_t> lengths;
    std::string source;

    std::vector<double> as_doubles() const {
        return std::vector<double>(lengths.begin(), lengths.end());
    }
};

/// Empirical CGF value in bits per symbol. `annotation` is nonempty for the
/// lambda == 0 collapse (mean code length).
struct CgfValue {
    double value = 0.0;
    double lambda = 0.0;
    std::string annotation;
};

/// log2(sum_i 2^(e_i)) via max shift; stable for exponents up to ~1e3.
double log2_sum_exp2(std::span<const double> exponents);

/// sum_i 2^(lambda * L_i), the raw exponential sum the variable-to-variable
/// bounds sandwich. Finite at desk scale (lambda * L <= ~1000).
double exp_sum(std::span<const double> lengths, double lambda);

/// Fixed-to-variable, per-symbol lengths: (1/lambda) log2( (1/n) sum 2^(lambda l_t) ).
CgfValue naive_cgf(std::span<const double> per_symbol_bits, double lambda);

/// Fixed-to-variable over ell-blocks: (1/(lambda ell)) log2( (ell/n) sum 2^(lambda L_t) )
/// with n = ell * block count.
CgfValue fv_cgf(std::span<const double> per_block_bits, std::size_t ell, double lambda);

/// Variable-to-variable over c phrases covering n symbols:
///   (c/(n lambda)) log2( (1/c) sum 2^(lambda L_i) ).
CgfValue vv_cgf(std::span<const double> per_phrase_bits, std::uint64_t n, double lambda);

/// Identical formula to vv_cgf over all phrases of a joint parsing; the
/// context grouping is reporting metadata only.
CgfValue conditional_vv_cgf(std::span<const double> per_phrase_bits,
                            std::span<const std::size_t> context_of_phrase,
                            std::uint64_t n, double lambda);

}  // namespace cgflz

#endif
