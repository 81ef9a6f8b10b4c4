// Acceptance gate: one line per criterion, exit code = number of failures.
// Tolerances and runtime ceilings are pinned here on purpose; loosening them
// is a reviewed change, not a knob.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cgflz/bounds.hpp"
#include "cgflz/cgf.hpp"
#include "cgflz/empirical.hpp"
#include "cgflz/lz78.hpp"
#include "cgflz/report.hpp"
#include "cgflz/rng.hpp"
#include "cgflz/sideinfo.hpp"
#include "cgflz/tilted_code.hpp"
#include "cgflz/verify.hpp"

using namespace cgflz;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str());
    if (!pass) ++failures;
}

std::string budget_tag(double elapsed_ms, double budget_ms) {
    char buf[64];
    if (budget_ms >= 1000.0)
        std::snprintf(buf, sizeof buf, "%.2f s < %.0f s", elapsed_ms / 1000.0,
                      budget_ms / 1000.0);
    else
        std::snprintf(buf, sizeof buf, "%.3f ms < %.0f ms", elapsed_ms, budget_ms);
    return buf;
}

const std::vector<Rational> kGrid{Rational{1, 4}, Rational{1, 2}, Rational{1, 1},
                                  Rational{2, 1}, Rational{4, 1}};
const SlackPolicy kSlack{1e-9, 0.0};

// ---------------------------------------------------------------------------

void criterion_1_worked_example() {
    auto x = make_sequence("010001", 2);
    auto u = make_sequence("010101", 2);
    joint_incremental_parse(x, u);  // warm up allocator paths
    auto start = Clock::now();
    auto jp = joint_incremental_parse(x, u);
    double elapsed = ms_since(start);

    bool ok = jp.c() == 4 && jp.context_count() == 3 &&
              jp.u_phrases == std::vector<std::vector<Symbol>>{{0}, {1}, {0, 1}} &&
              jp.context_counts == std::vector<std::uint64_t>{1, 1, 2};
    bool in_time = elapsed < 1.0;
    report(1, ok && in_time,
           "joint parse of the worked pair example: c=4, 3 contexts, counts "
           "[1,1,2] (" +
               budget_tag(elapsed, 1.0) + ")");
}

void criterion_2_sandwich() {
    auto start = Clock::now();
    Rng rng(20260815);
    const std::vector<std::size_t> sizes{100, 1000, 10000};
    const std::vector<std::size_t> alphas{2, 3, 4};
    auto r = check_lz_sandwich(rng, 500, sizes, alphas, kGrid, kSlack);
    double elapsed = ms_since(start);
    bool in_time = elapsed < 60'000.0;
    report(2, r.violations == 0 && in_time,
           "phrase exponential sums inside [packing floor, incremental ceiling] on "
           "500 sequences, " +
               std::to_string(r.checks) + " checks, " +
               std::to_string(r.violations) + " violations (" +
               budget_tag(elapsed, 60'000.0) + ")" +
               (r.first_violation.empty() ? "" : "; first: " + r.first_violation));
}

void criterion_3_universality() {
    auto start = Clock::now();
    UniversalityParams p;
    p.max_states = 2;
    p.alpha = 2;
    p.max_output_len = 2;
    p.depth = 8;
    p.x_trials = 50;
    p.x_len = 64;
    p.ells = {2, 4, 8};
    p.lambdas = kGrid;
    p.seed = 20260815;
    auto r = check_encoder_universality(p, kSlack);
    double elapsed = ms_since(start);
    bool in_time = elapsed < 600'000.0;
    std::string notes;
    for (const auto& n : r.notes) notes += n + "; ";
    report(3, r.violations == 0 && in_time,
           "every enumerated certified table stays above the converse floors: " +
               notes + std::to_string(r.checks) + " checks, " +
               std::to_string(r.violations) + " violations (" +
               budget_tag(elapsed, 600'000.0) + ")" +
               (r.first_violation.empty() ? "" : "; first: " + r.first_violation));
}

void criterion_4_achievability() {
    Rng rng(4);
    std::uint64_t checks = 0, bad = 0;
    std::string first;
    auto note = [&](const std::string& what) {
        ++bad;
        if (first.empty()) first = what;
    };
    static constexpr std::size_t kElls[] = {1, 2, 4};
    for (std::size_t t = 0; t < 60; ++t) {
        std::size_t alpha = 2 + t % 2;
        std::size_t ell = kElls[t % 3];
        std::size_t n = (32 + rng.below(225)) / ell * ell;
        SymbolSequence x{Alphabet::indexed(alpha), {}};
        for (std::size_t i = 0; i < n; ++i)
            x.symbols.push_back(static_cast<Symbol>(rng.below(alpha)));
        auto stats = block_stats(x, ell);
        for (const auto& lam : kGrid) {
            auto code = build_tilted_code(stats, lam);
            ++checks;
            if (!kSlack.leq(code.kraft_sum, 1.0))
                note("kraft sum " + std::to_string(code.kraft_sum) + " above 1");
            auto enc = encode_blocks(x, code);
            auto lengths = enc.payload_profile.as_doubles();
            double fv = fv_cgf(lengths, ell, lam.value()).value;
            double ceiling = renyi_entropy(stats, lam.value()) +
                             1.0 / static_cast<double>(ell);
            ++checks;
            if (!kSlack.leq(fv, ceiling))
                note("fv_cgf " + std::to_string(fv) + " above entropy+1/ell " +
                     std::to_string(ceiling) + " at lambda=" + lam.str());
        }
    }
    report(4, bad == 0,
           "tilted-code payload CGF <= tilted entropy + 1/ell and Kraft sum <= 1 on " +
               std::to_string(checks) + " built codes" +
               (first.empty() ? "" : "; first: " + first));
}

void criterion_5_small_lambda() {
    Rng rng(5);
    auto r = check_small_lambda_collapse(rng, 25);
    report(5, r.violations == 0,
           "lambda=1e-4 values within 1e-3 of the lambda=0 limits, " +
               std::to_string(r.checks) + " checks" +
               (r.first_violation.empty() ? "" : "; first: " + r.first_violation));
}

void criterion_6_roundtrips() {
    Rng rng(6);
    const std::vector<std::size_t> sizes{16, 64, 256, 1024};
    const std::vector<std::size_t> alphas{2, 3, 4, 5};
    auto lz = check_lz_roundtrips(rng, 1000, sizes, alphas);
    auto tilted = check_tilted_roundtrips(rng, 200, sizes, alphas, kGrid);
    auto cond = check_conditional_roundtrips(rng, 200, sizes, alphas);
    std::uint64_t bad = lz.violations + tilted.violations + cond.violations;
    std::string first = !lz.first_violation.empty()        ? lz.first_violation
                        : !tilted.first_violation.empty()  ? tilted.first_violation
                                                           : cond.first_violation;
    report(6, bad == 0,
           "codec round trips identical on 1000 phrase-code / 200 tilted / 200 "
           "conditional instances" +
               (first.empty() ? "" : "; first: " + first));
}

void criterion_7_oracle() {
    // The greedy distinct-parse count is a lower bound, not the maximum:
    // an exhaustive search beats it on 2232 of the 8190 binary strings with
    // n<=12 (first gap at x=00100: greedy 3, maximum 4). The criterion is
    // that greedy never exceeds the exhaustive maximum and that the gap
    // bookkeeping matches those independently derived tallies exactly.
    auto start = Clock::now();
    auto r = check_max_distinct_oracle(12);
    double elapsed = ms_since(start);
    bool in_time = elapsed < 300'000.0;
    const std::string want_note =
        "greedy below the exhaustive maximum on 2232 of 8190 strings "
        "(first: x=00100: greedy 3, maximum 4); the greedy count is a lower "
        "bound";
    bool note_ok = r.notes.size() == 1 && r.notes.front() == want_note;
    report(7, r.violations == 0 && r.checks == 8190 && note_ok && in_time,
           "greedy phrase count <= exhaustive maximum on all binary strings "
           "n<=12, " +
               std::to_string(r.checks) + " strings, gaps reported (" +
               (r.notes.empty() ? "no note" : r.notes.front()) + ") (" +
               budget_tag(elapsed, 300'000.0) + ")" +
               (r.first_violation.empty() ? "" : "; first: " + r.first_violation));
}

void criterion_8_monotonicity() {
    Rng rng(8);
    auto r = check_monotonicity(rng, 50, kGrid);
    report(8, r.violations == 0,
           "CGFs nondecreasing in lambda, above the mean floor (equality iff "
           "constant), entropy within [Shannon, log2 alpha], " +
               std::to_string(r.checks) + " checks" +
               (r.first_violation.empty() ? "" : "; first: " + r.first_violation));
}

void criterion_9_determinism() {
    VerifyOptions opt;
    opt.seed = 9;
    opt.trials = 6;
    opt.sizes = {32, 64};
    opt.alphas = {2, 3};
    opt.depth = 4;
    opt.enum_states = 1;
    opt.enum_max_output_len = 1;
    opt.enum_x_trials = 2;
    opt.enum_x_len = 16;
    opt.enum_ells = {2, 4};
    opt.normalize();
    auto a = verify_report(opt, run_verify_suites(opt)).report.dump(2);
    auto b = verify_report(opt, run_verify_suites(opt)).report.dump(2);
    report(9, a == b,
           "verify report byte-identical across two same-seed runs (" +
               std::to_string(a.size()) + " bytes)");
}

}  // namespace

int main() {
    criterion_1_worked_example();
    criterion_2_sandwich();
    criterion_3_universality();
    criterion_4_achievability();
    criterion_5_small_lambda();
    criterion_6_roundtrips();
    criterion_7_oracle();
    criterion_8_monotonicity();
    criterion_9_determinism();
    if (failures == 0)
        std::printf("all 9 criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
