#include "cgflz/cgf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cgflz {
namespace {

void require_lengths(std::span<const double> lengths) {
    if (lengths.empty()) throw std::invalid_argument("empty length profile");
    for (double l : lengths)
        if (l < 0.0 || !std::isfinite(l))
            throw std::invalid_argument("code lengths must be finite and nonnegative");
}

void require_lambda(double lambda) {
    if (lambda < 0.0 || !std::isfinite(lambda))
        throw std::invalid_argument("lambda must be nonnegative");
}

double mean(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

constexpr const char* kMeanAnnotation = "lambda=0: mean code length";

}  // namespace

double log2_sum_exp2(std::span<const double> exponents) {
    if (exponents.empty()) throw std::invalid_argument("empty exponent list");
    double shift = *std::max_element(exponents.begin(), exponents.end());
    if (!std::isfinite(shift)) return shift;
    double acc = 0.0;
    for (double e : exponents) acc += std::exp2(e - shift);
    return shift + std::log2(acc);
}

double exp_sum(std::span<const double> lengths, double lambda) {
    require_lengths(lengths);
    require_lambda(lambda);
    double acc = 0.0;
    for (double l : lengths) acc += std::exp2(lambda * l);
    return acc;
}

CgfValue naive_cgf(std::span<const double> per_symbol_bits, double lambda) {
    require_lengths(per_symbol_bits);
    require_lambda(lambda);
    if (lambda == 0.0) return {mean(per_symbol_bits), 0.0, kMeanAnnotation};
    std::vector<double> exponents(per_symbol_bits.size());
    for (std::size_t i = 0; i < exponents.size(); ++i)
        exponents[i] = lambda * per_symbol_bits[i];
    double log2_mean = log2_sum_exp2(exponents) -
                       std::log2(static_cast<double>(per_symbol_bits.size()));
    return {log2_mean / lambda, lambda, {}};
}

CgfValue fv_cgf(std::span<const double> per_block_bits, std::size_t ell, double lambda) {
    require_lengths(per_block_bits);
    require_lambda(lambda);
    if (ell == 0) throw std::invalid_argument("block length must be positive");
    if (lambda == 0.0)
        return {mean(per_block_bits) / static_cast<double>(ell), 0.0, kMeanAnnotation};
    std::vector<double> exponents(per_block_bits.size());
    for (std::size_t i = 0; i < exponents.size(); ++i)
        exponents[i] = lambda * per_block_bits[i];
    double log2_mean = log2_sum_exp2(exponents) -
                       std::log2(static_cast<double>(per_block_bits.size()));
    return {log2_mean / (lambda * static_cast<double>(ell)), lambda, {}};
}

CgfValue vv_cgf(std::span<const double> per_phrase_bits, std::uint64_t n, double lambda) {
    require_lengths(per_phrase_bits);
    require_lambda(lambda);
    if (n == 0) throw std::invalid_argument("sequence length must be positive");
    const double c = static_cast<double>(per_phrase_bits.size());
    if (lambda == 0.0) {
        double total = mean(per_phrase_bits) * c;
        return {total / static_cast<double>(n), 0.0, kMeanAnnotation};
    }
    std::vector<double> exponents(per_phrase_bits.size());
    for (std::size_t i = 0; i < exponents.size(); ++i)
        exponents[i] = lambda * per_phrase_bits[i];
    double log2_mean = log2_sum_exp2(exponents) - std::log2(c);
    return {c / (static_cast<double>(n) * lambda) * log2_mean, lambda, {}};
}

CgfValue conditional_vv_cgf(std::span<const double> per_phrase_bits,
                            std::span<const std::size_t> context_of_phrase,
                            std::uint64_t n, double lambda) {
    if (context_of_phrase.size() != per_phrase_bits.size())
        throw std::invalid_argument("context labels must match the phrase profile");
    return vv_cgf(per_phrase_bits, n, lambda);
}

}  // namespace cgflz
