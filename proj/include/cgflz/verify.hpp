#ifndef CGFLZ_VERIFY_HPP
#define CGFLZ_VERIFY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cgflz/rational.hpp"
#include "cgflz/report.hpp"
#include "cgflz/rng.hpp"

namespace cgflz {

struct CheckResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::string first_violation;      // empty when clean
    std::vector<std::string> notes;
};

/// Codec round trips: decode(encode(x)) == x.
CheckResult check_lz_roundtrips(Rng& rng, std::size_t trials,
                                std::span<const std::size_t> sizes,
                                std::span<const std::size_t> alphas);
CheckResult check_tilted_roundtrips(Rng& rng, std::size_t trials,
                                    std::span<const std::size_t> sizes,
                                    std::span<const std::size_t> alphas,
                                    std::span<const Rational> lambdas);
CheckResult check_conditional_roundtrips(Rng& rng, std::size_t trials,
                                         std::span<const std::size_t> sizes,
                                         std::span<const std::size_t> alphas);

/// Exponential-sum sandwich of the incremental-parsing code lengths between
/// the packing converse (s=1) and the incremental achievability bound.
CheckResult check_lz_sandwich(Rng& rng, std::size_t sequences,
                              std::span<const std::size_t> sizes,
                              std::span<const std::size_t> alphas,
                              std::span<const Rational> lambdas,
                              const SlackPolicy& slack = {});

/// Low-level form used by the mutation test: validates given per-phrase
/// lengths against floors built on c_distinct phrases (a repeated tail is not
/// a new source word) and the c-codeword achievability ceiling.
CheckResult check_lz_sandwich_on(std::span<const std::uint64_t> phrase_lengths,
                                 std::uint64_t c, std::uint64_t c_distinct,
                                 std::size_t alpha,
                                 std::span<const Rational> lambdas,
                                 const SlackPolicy& slack = {});

/// Conditional-code sandwich: per-context converses <= measured conditional
/// exponential sum <= per-context achievability bound.
CheckResult check_sideinfo_sandwich(Rng& rng, std::size_t trials,
                                    std::span<const std::size_t> sizes,
                                    std::span<const std::size_t> alphas,
                                    std::span<const Rational> lambdas,
                                    const SlackPolicy& slack = {});

/// Every enumerated IL encoder, every start state, random inputs: block CGF >=
/// Renyi converse (each ell), and the per-phrase exponential sum >= both
/// variable-length converses.
struct UniversalityParams {
    std::size_t max_states = 2;
    std::size_t alpha = 2;
    std::size_t max_output_len = 2;
    std::size_t depth = 8;
    std::size_t x_trials = 50;
    std::size_t x_len = 64;
    std::vector<std::size_t> ells{2, 4, 8};
    std::vector<Rational> lambdas;
    std::uint64_t seed = 42;
};

CheckResult check_encoder_universality(const UniversalityParams& p,
                                       const SlackPolicy& slack = {});

/// Exhaustive binary sweep n <= max_n: greedy shortest-unseen phrase count ==
/// brute-force max-distinct count.
CheckResult check_max_distinct_oracle(std::size_t max_n);

/// CGFs nondecreasing in lambda; >= mean-length floor with equality iff all
/// lengths equal; Renyi entropy within [Shannon, log2 alpha] and nondecreasing.
CheckResult check_monotonicity(Rng& rng, std::size_t trials,
                               std::span<const Rational> lambdas);

/// lambda -> 0 collapses at lambda = 1e-4 within 1e-3: Renyi -> Shannon,
/// vv CGF -> mean length, ideal-length conditional CGF -> conditional
/// compressibility.
CheckResult check_small_lambda_collapse(Rng& rng, std::size_t trials);

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::size_t trials = 50;
    std::vector<std::size_t> sizes{64, 256, 1024};
    std::vector<std::size_t> alphas{2, 3, 4};
    std::vector<Rational> lambdas;  // default set in normalize()
    std::size_t depth = 6;
    std::size_t enum_states = 2;
    std::size_t enum_max_output_len = 1;
    std::size_t enum_x_trials = 8;
    std::size_t enum_x_len = 32;
    std::vector<std::size_t> enum_ells{2, 4, 8};

    void normalize();  // fills defaulted lambda grid
};

std::vector<CheckResult> run_verify_suites(const VerifyOptions& opt);

/// Deterministic report (byte-identical for identical options).
AnalysisResult verify_report(const VerifyOptions& opt,
                             const std::vector<CheckResult>& results);

}  // namespace cgflz

#endif
