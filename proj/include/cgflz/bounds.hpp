#ifndef CGFLZ_BOUNDS_HPP
#define CGFLZ_BOUNDS_HPP

#include <cstdint>
#include <span>
#include <string>

#include "cgflz/empirical.hpp"
#include "cgflz/lz78.hpp"

namespace cgflz {

/// Scale a bound value lives on. BitsPerSymbol compares against CGF values;
/// ExpSum compares against raw sums of 2^(lambda L).
enum class Scale { BitsPerSymbol, ExpSum };

const char* scale_name(Scale s);

struct BoundReport {
    std::string name;
    double value = 0.0;
    Scale scale = Scale::BitsPerSymbol;
    bool vacuous = false;   // below the trivial floor (no constraint)
    std::string bounds_what;
    std::string note;       // degenerate-case annotations
};

/// Slack of the generalized Kraft inequality for s-state information-lossless
/// encoders over a candidate set of the given mass:
///   2 log2 s + log2(1 + log2((s^2 + mass)/s^2)).
double kraft_slack_mass(std::size_t s, double mass);

/// Same with mass = alpha^ell (ell may be fractional).
double kraft_slack(std::size_t s, double ell, std::size_t alpha);

/// Converse for every s-state IL encoder on ell-blocks, bits per symbol:
/// fixed-to-variable CGF >= Renyi block entropy - kraft_slack/ell.
BoundReport fv_renyi_lower_bound(const BlockStats& stats, double lambda, std::size_t s);

/// Converse from per-block distinct-phrase counts for block-restarting
/// s-state encoders, bits per symbol:
///   (1/(lambda ell)) log2( (ell/n) sum_t 2^(lambda (c_t+s^2) log2((c_t+s^2)/(4 s^2))) ).
BoundReport fv_block_lz_lower_bound(const BlockPhraseCounts& counts, std::uint64_t n,
                                    double lambda, std::size_t s);

/// Converse for the per-phrase exponential sum of any s-state IL encoder on a
/// parsing into c distinct phrases (minimal-length packing argument):
///   s^2 [ ((c+s^2)/(2 s^2))^(lambda+1) - 1 ] / (2^(lambda+1) - 1).
BoundReport vv_packing_lower_bound(std::uint64_t c, std::size_t s, double lambda);

/// Alternative converse via the generalized Kraft inequality over the c
/// distinct phrases: 2^((lambda+1) log2 c - lambda kraft_slack_mass(s, c)).
/// Requires c >= 2. Neither this nor the packing bound dominates.
BoundReport vv_kraft_lower_bound(std::uint64_t c, std::size_t s, double lambda,
                                 std::size_t alpha);

/// Achievability of the incremental-parsing code: sum_i 2^(lambda L_i) <=
/// (2 alpha)^lambda c^(lambda+1).
BoundReport vv_lz_upper_bound(std::uint64_t c, std::size_t alpha, double lambda);

/// Side-information block converse on the exponential-sum scale:
///   2^(-lambda kraft_slack(s, ell, x_alpha)) * conditional_renyi_sum.
BoundReport cond_fv_renyi_lower_bound(const JointBlockStats& stats, double lambda,
                                      std::size_t s);

/// Per-context packing converse: (s^2/(2^(lambda+1)-1)) *
///   sum_k [ ((c_k+s^2)/(2 s^2))^(lambda+1) - 1 ].
BoundReport cond_vv_packing_lower_bound(std::span<const std::uint64_t> context_counts,
                                        std::size_t s, double lambda);

/// Per-context Kraft-route converse, summing 2^((lambda+1) log2 c_k - lambda
/// kraft_slack_mass(s, c_k)). Contexts with c_k == 1 contribute their packing
/// term instead (annotated), since the Kraft route needs c_k >= 2.
BoundReport cond_vv_kraft_lower_bound(std::span<const std::uint64_t> context_counts,
                                      std::size_t s, double lambda, std::size_t alpha);

/// Per-context incremental-code achievability: (2 alpha)^lambda sum_k c_k^(lambda+1).
BoundReport cond_vv_lz_upper_bound(std::span<const std::uint64_t> context_counts,
                                   std::size_t alpha, double lambda);

/// (1/n) sum_k c_k log2 c_k — the side-information analogue of the
/// compressibility figure (bits per symbol).
double conditional_compressibility(std::span<const std::uint64_t> context_counts,
                                   std::uint64_t n);

}  // namespace cgflz

#endif
