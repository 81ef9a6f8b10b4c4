#ifndef CGFLZ_EMPIRICAL_HPP
#define CGFLZ_EMPIRICAL_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cgflz/sequence.hpp"

namespace cgflz {

/// Empirical distribution of non-overlapping ell-blocks (deterministic
/// lexicographic iteration order).
struct BlockStats {
    std::size_t ell = 0;
    std::size_t alpha = 0;
    std::uint64_t block_count = 0;
    std::map<std::vector<Symbol>, std::uint64_t> counts;
};

/// Requires ell >= 1 and ell | n.
BlockStats block_stats(const SymbolSequence& x, std::size_t ell);

/// Empirical Renyi block entropy in bits per symbol:
///   ((1+lambda)/(lambda*ell)) * log2( sum_a P(a)^(1/(1+lambda)) ).
/// lambda == 0 returns the Shannon block entropy (annotated collapse);
/// lambda < 0 is rejected.
double renyi_entropy(const BlockStats& stats, double lambda);

/// -(1/ell) * sum_a P(a) log2 P(a), bits per symbol.
double shannon_entropy(const BlockStats& stats);

/// Joint empirical distribution of aligned (x-block, u-block) pairs.
struct JointBlockStats {
    std::size_t ell = 0;
    std::size_t x_alpha = 0;
    std::size_t u_alpha = 0;
    std::uint64_t block_count = 0;
    std::map<std::pair<std::vector<Symbol>, std::vector<Symbol>>, std::uint64_t> counts;
};

/// Requires equal lengths, ell >= 1, ell | n.
JointBlockStats joint_block_stats(const SymbolSequence& x, const SymbolSequence& u,
                                  std::size_t ell);

/// sum_u ( sum_x P(x,u)^(1/(1+lambda)) )^(1+lambda)  — the conditional tilted
/// mass behind the side-information block converse. Raw (not log) scale.
double conditional_renyi_sum(const JointBlockStats& stats, double lambda);

}  // namespace cgflz

#endif
