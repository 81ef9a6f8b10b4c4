#include "cgflz/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "cgflz/cgf.hpp"

namespace cgflz {
namespace {

void require_states(std::size_t s) {
    if (s == 0) throw std::invalid_argument("state count must be positive");
}

void require_lambda_positive(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("bounds need lambda > 0");
}

BoundReport make(std::string name, double value, Scale scale, std::string what,
                 std::string note = {}) {
    BoundReport b;
    b.name = std::move(name);
    b.value = value;
    b.scale = scale;
    b.bounds_what = std::move(what);
    b.note = std::move(note);
    b.vacuous = scale == Scale::ExpSum ? value <= 0.0 : value < 0.0;
    return b;
}

}  // namespace

const char* scale_name(Scale s) {
    return s == Scale::BitsPerSymbol ? "bits_per_symbol" : "exp_sum";
}

double kraft_slack_mass(std::size_t s, double mass) {
    require_states(s);
    if (!(mass > 0.0)) throw std::invalid_argument("candidate mass must be positive");
    const double s2 = static_cast<double>(s) * static_cast<double>(s);
    return 2.0 * std::log2(static_cast<double>(s)) +
           std::log2(1.0 + std::log2((s2 + mass) / s2));
}

double kraft_slack(std::size_t s, double ell, std::size_t alpha) {
    if (alpha < 2) throw std::invalid_argument("alphabet size must be at least 2");
    return kraft_slack_mass(s, std::exp2(ell * std::log2(static_cast<double>(alpha))));
}

BoundReport fv_renyi_lower_bound(const BlockStats& stats, double lambda, std::size_t s) {
    require_lambda_positive(lambda);
    double value = renyi_entropy(stats, lambda) -
                   kraft_slack(s, static_cast<double>(stats.ell), stats.alpha) /
                       static_cast<double>(stats.ell);
    return make("fv_renyi_lower", value, Scale::BitsPerSymbol,
                "fixed-to-variable CGF of any " + std::to_string(s) +
                    "-state IL encoder on " + std::to_string(stats.ell) + "-blocks");
}

BoundReport fv_block_lz_lower_bound(const BlockPhraseCounts& counts, std::uint64_t n,
                                    double lambda, std::size_t s) {
    require_lambda_positive(lambda);
    require_states(s);
    if (counts.counts.empty()) throw std::invalid_argument("no block counts");
    if (n != counts.ell * counts.counts.size())
        throw std::invalid_argument("block counts do not tile the sequence");
    if (counts.distinct_counts.size() != counts.counts.size())
        throw std::invalid_argument("block counts lack distinct-phrase tallies");
    const double s2 = static_cast<double>(s) * static_cast<double>(s);
    // The floor counts distinct source words per block, so a repeated final
    // phrase contributes nothing here even though the block code emits it.
    std::vector<double> exponents;
    exponents.reserve(counts.distinct_counts.size());
    for (auto c_t : counts.distinct_counts) {
        double cs = static_cast<double>(c_t) + s2;
        exponents.push_back(lambda * cs * std::log2(cs / (4.0 * s2)));
    }
    double log2_mean =
        log2_sum_exp2(exponents) - std::log2(static_cast<double>(counts.counts.size()));
    double value = log2_mean / (lambda * static_cast<double>(counts.ell));
    return make("fv_block_lz_lower", value, Scale::BitsPerSymbol,
                "fixed-to-variable CGF of any block-restarting " + std::to_string(s) +
                    "-state IL encoder",
                counts.method == PhraseCountMethod::Incremental
                    ? "per-block distinct-phrase counts: incremental"
                    : "per-block distinct-phrase counts: max-distinct");
}

BoundReport vv_packing_lower_bound(std::uint64_t c, std::size_t s, double lambda) {
    require_lambda_positive(lambda);
    require_states(s);
    if (c == 0) throw std::invalid_argument("need at least one phrase");
    const double s2 = static_cast<double>(s) * static_cast<double>(s);
    const double ratio = (static_cast<double>(c) + s2) / (2.0 * s2);
    double value = s2 * (std::pow(ratio, lambda + 1.0) - 1.0) /
                   (std::exp2(lambda + 1.0) - 1.0);
    return make("vv_packing_lower", value, Scale::ExpSum,
                "per-phrase exponential sum of any " + std::to_string(s) +
                    "-state IL encoder on " + std::to_string(c) + " distinct phrases");
}

BoundReport vv_kraft_lower_bound(std::uint64_t c, std::size_t s, double lambda,
                                 std::size_t alpha) {
    require_lambda_positive(lambda);
    require_states(s);
    if (alpha < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (c < 2) throw std::invalid_argument("Kraft-route bound needs c >= 2");
    double exponent = (lambda + 1.0) * std::log2(static_cast<double>(c)) -
                      lambda * kraft_slack_mass(s, static_cast<double>(c));
    return make("vv_kraft_lower", std::exp2(exponent), Scale::ExpSum,
                "per-phrase exponential sum of any " + std::to_string(s) +
                    "-state IL encoder on " + std::to_string(c) + " distinct phrases");
}

BoundReport vv_lz_upper_bound(std::uint64_t c, std::size_t alpha, double lambda) {
    require_lambda_positive(lambda);
    if (alpha < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (c == 0) throw std::invalid_argument("need at least one phrase");
    double exponent = lambda * std::log2(2.0 * static_cast<double>(alpha)) +
                      (lambda + 1.0) * std::log2(static_cast<double>(c));
    return make("vv_lz_upper", std::exp2(exponent), Scale::ExpSum,
                "per-phrase exponential sum of the incremental-parsing code");
}

BoundReport cond_fv_renyi_lower_bound(const JointBlockStats& stats, double lambda,
                                      std::size_t s) {
    require_lambda_positive(lambda);
    double slack = kraft_slack(s, static_cast<double>(stats.ell), stats.x_alpha);
    double value = std::exp2(-lambda * slack) * conditional_renyi_sum(stats, lambda);
    return make("cond_fv_renyi_lower", value, Scale::ExpSum,
                "per-block exponential sum of any " + std::to_string(s) +
                    "-state IL encoder with side information");
}

BoundReport cond_vv_packing_lower_bound(std::span<const std::uint64_t> context_counts,
                                        std::size_t s, double lambda) {
    require_lambda_positive(lambda);
    require_states(s);
    if (context_counts.empty()) throw std::invalid_argument("no context counts");
    const double s2 = static_cast<double>(s) * static_cast<double>(s);
    double acc = 0.0;
    for (auto ck : context_counts) {
        double ratio = (static_cast<double>(ck) + s2) / (2.0 * s2);
        acc += std::pow(ratio, lambda + 1.0) - 1.0;
    }
    double value = s2 * acc / (std::exp2(lambda + 1.0) - 1.0);
    return make("cond_vv_packing_lower", value, Scale::ExpSum,
                "conditional per-phrase exponential sum of any " + std::to_string(s) +
                    "-state IL encoder");
}

BoundReport cond_vv_kraft_lower_bound(std::span<const std::uint64_t> context_counts,
                                      std::size_t s, double lambda, std::size_t alpha) {
    require_lambda_positive(lambda);
    require_states(s);
    if (alpha < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (context_counts.empty()) throw std::invalid_argument("no context counts");
    const double s2 = static_cast<double>(s) * static_cast<double>(s);
    double acc = 0.0;
    std::size_t degenerate = 0;
    for (auto ck : context_counts) {
        if (ck < 2) {
            // Kraft route needs >= 2 phrases; fall back to this context's
            // packing term (zero when s == 1).
            double ratio = (static_cast<double>(ck) + s2) / (2.0 * s2);
            acc += s2 * (std::pow(ratio, lambda + 1.0) - 1.0) /
                   (std::exp2(lambda + 1.0) - 1.0);
            ++degenerate;
            continue;
        }
        acc += std::exp2((lambda + 1.0) * std::log2(static_cast<double>(ck)) -
                         lambda * kraft_slack_mass(s, static_cast<double>(ck)));
    }
    std::string note;
    if (degenerate > 0)
        note = std::to_string(degenerate) +
               " context(s) with a single phrase use the packing term";
    return make("cond_vv_kraft_lower", acc, Scale::ExpSum,
                "conditional per-phrase exponential sum of any " + std::to_string(s) +
                    "-state IL encoder",
                std::move(note));
}

BoundReport cond_vv_lz_upper_bound(std::span<const std::uint64_t> context_counts,
                                   std::size_t alpha, double lambda) {
    require_lambda_positive(lambda);
    if (alpha < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (context_counts.empty()) throw std::invalid_argument("no context counts");
    double acc = 0.0;
    for (auto ck : context_counts)
        acc += std::pow(static_cast<double>(ck), lambda + 1.0);
    double value = std::pow(2.0 * static_cast<double>(alpha), lambda) * acc;
    return make("cond_vv_lz_upper", value, Scale::ExpSum,
                "conditional per-phrase exponential sum of the per-context incremental code");
}

double conditional_compressibility(std::span<const std::uint64_t> context_counts,
                                   std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("sequence length must be positive");
    double acc = 0.0;
    for (auto ck : context_counts)
        if (ck > 1)
            acc += static_cast<double>(ck) * std::log2(static_cast<double>(ck));
    return acc / static_cast<double>(n);
}

}  // namespace cgflz
