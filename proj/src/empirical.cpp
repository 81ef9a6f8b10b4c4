#include "cgflz/empirical.hpp"

#include <cmath>
#include <stdexcept>

#include "cgflz/cgf.hpp"
#include "cgflz/errors.hpp"

namespace cgflz {
namespace {

void require_positive_lambda(double lambda) {
    if (lambda < 0.0 || !std::isfinite(lambda))
        throw std::invalid_argument("lambda must be nonnegative");
}

}  // namespace

BlockStats block_stats(const SymbolSequence& x, std::size_t ell) {
    if (ell == 0) throw std::invalid_argument("block length must be positive");
    if (x.size() % ell != 0) throw DivisibilityError(x.size(), ell);
    BlockStats stats;
    stats.ell = ell;
    stats.alpha = x.alpha();
    stats.block_count = x.size() / ell;
    for (std::size_t start = 0; start < x.size(); start += ell) {
        std::vector<Symbol> block(x.symbols.begin() + static_cast<std::ptrdiff_t>(start),
                                  x.symbols.begin() + static_cast<std::ptrdiff_t>(start + ell));
        ++stats.counts[std::move(block)];
    }
    return stats;
}

double renyi_entropy(const BlockStats& stats, double lambda) {
    require_positive_lambda(lambda);
    if (stats.block_count == 0)
        throw std::invalid_argument("empty block statistics");
    if (lambda == 0.0) return shannon_entropy(stats);
    const double q = 1.0 / (1.0 + lambda);
    const double log2_m = std::log2(static_cast<double>(stats.block_count));
    std::vector<double> exponents;
    exponents.reserve(stats.counts.size());
    for (const auto& [block, count] : stats.counts)
        exponents.push_back(q * (std::log2(static_cast<double>(count)) - log2_m));
    double log2_sum = log2_sum_exp2(exponents);
    return (1.0 + lambda) / (lambda * static_cast<double>(stats.ell)) * log2_sum;
}

double shannon_entropy(const BlockStats& stats) {
    if (stats.block_count == 0)
        throw std::invalid_argument("empty block statistics");
    const double m = static_cast<double>(stats.block_count);
    double h = 0.0;
    for (const auto& [block, count] : stats.counts) {
        double p = static_cast<double>(count) / m;
        h -= p * std::log2(p);
    }
    return h / static_cast<double>(stats.ell);
}

JointBlockStats joint_block_stats(const SymbolSequence& x, const SymbolSequence& u,
                                  std::size_t ell) {
    if (x.size() != u.size())
        throw std::invalid_argument("sequence and side information differ in length");
    if (ell == 0) throw std::invalid_argument("block length must be positive");
    if (x.size() % ell != 0) throw DivisibilityError(x.size(), ell);
    JointBlockStats stats;
    stats.ell = ell;
    stats.x_alpha = x.alpha();
    stats.u_alpha = u.alpha();
    stats.block_count = x.size() / ell;
    for (std::size_t start = 0; start < x.size(); start += ell) {
        std::vector<Symbol> xb(x.symbols.begin() + static_cast<std::ptrdiff_t>(start),
                               x.symbols.begin() + static_cast<std::ptrdiff_t>(start + ell));
        std::vector<Symbol> ub(u.symbols.begin() + static_cast<std::ptrdiff_t>(start),
                               u.symbols.begin() + static_cast<std::ptrdiff_t>(start + ell));
        ++stats.counts[{std::move(xb), std::move(ub)}];
    }
    return stats;
}

double conditional_renyi_sum(const JointBlockStats& stats, double lambda) {
    require_positive_lambda(lambda);
    if (lambda == 0.0) throw std::invalid_argument("conditional tilted mass needs lambda > 0");
    if (stats.block_count == 0)
        throw std::invalid_argument("empty block statistics");
    const double q = 1.0 / (1.0 + lambda);
    const double log2_m = std::log2(static_cast<double>(stats.block_count));
    // Group the tilted masses by u-block (map order makes this a single sweep:
    // keys sort by x-block first, so collect per-u in a map).
    std::map<std::vector<Symbol>, std::vector<double>> per_u;
    for (const auto& [pair_key, count] : stats.counts)
        per_u[pair_key.second].push_back(
            q * (std::log2(static_cast<double>(count)) - log2_m));
    std::vector<double> outer;
    outer.reserve(per_u.size());
    for (const auto& [ub, exponents] : per_u)
        outer.push_back((1.0 + lambda) * log2_sum_exp2(exponents));
    return std::exp2(log2_sum_exp2(outer));
}

}  // namespace cgflz
