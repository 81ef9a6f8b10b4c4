#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cgflz/cgf.hpp"

using namespace cgflz;

TEST_CASE("log2_sum_exp2 is exact on small sets and stable on huge exponents") {
    std::vector<double> three{0.0, 0.0, 0.0};
    CHECK(log2_sum_exp2(three) == doctest::Approx(1.584962500721156).epsilon(1e-15));
    std::vector<double> mixed{0.0, 1.0, 2.0};  // 1+2+4 = 7
    CHECK(log2_sum_exp2(mixed) == doctest::Approx(2.807354922057604).epsilon(1e-15));
    std::vector<double> huge{1000.0, 1000.0};
    CHECK(log2_sum_exp2(huge) == doctest::Approx(1001.0).epsilon(1e-15));
    std::vector<double> empty;
    CHECK_THROWS_AS(log2_sum_exp2(empty), std::invalid_argument);
}

TEST_CASE("exp_sum") {
    std::vector<double> l{1.0, 2.0, 3.0, 3.0};
    CHECK(exp_sum(l, 1.0) == doctest::Approx(22.0).epsilon(1e-15));
    CHECK(exp_sum(l, 0.0) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("naive per-symbol CGF matches the frozen idle/dump value") {
    std::vector<double> lengths{0.0, 2.0, 0.0, 2.0};
    auto v = naive_cgf(lengths, 1.0);
    // (1/1) log2((1+4+1+4)/4) = log2(2.5)
    CHECK(v.value == doctest::Approx(1.3219280948873623).epsilon(1e-15));
    CHECK(v.annotation.empty());

    auto mean = naive_cgf(lengths, 0.0);
    CHECK(mean.value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(mean.annotation == "lambda=0: mean code length");

    CHECK_THROWS_AS(naive_cgf(lengths, -1.0), std::invalid_argument);
    std::vector<double> empty;
    CHECK_THROWS_AS(naive_cgf(empty, 1.0), std::invalid_argument);
}

TEST_CASE("fixed-to-variable block CGF matches the frozen value") {
    std::vector<double> block_bits{2.0, 4.0};
    auto v = fv_cgf(block_bits, 2, 1.0);
    // (1/2) log2((2/4)(4+16)) = (1/2) log2(10)
    CHECK(v.value == doctest::Approx(1.6609640474436812).epsilon(1e-15));
    auto mean = fv_cgf(block_bits, 2, 0.0);
    CHECK(mean.value == doctest::Approx(1.5).epsilon(1e-15));
    CHECK_FALSE(mean.annotation.empty());
    CHECK_THROWS_AS(fv_cgf(block_bits, 0, 1.0), std::invalid_argument);
}

TEST_CASE("variable-to-variable CGF matches the frozen value") {
    std::vector<double> phrase_bits{1.0, 2.0, 3.0, 3.0};
    auto v = vv_cgf(phrase_bits, 6, 1.0);
    // (4/6) log2(22/4)
    CHECK(v.value == doctest::Approx(1.6396210790915315).epsilon(1e-15));
    auto mean = vv_cgf(phrase_bits, 6, 0.0);
    CHECK(mean.value == doctest::Approx(9.0 / 6.0).epsilon(1e-15));
    CHECK_FALSE(mean.annotation.empty());
    CHECK_THROWS_AS(vv_cgf(phrase_bits, 0, 1.0), std::invalid_argument);
}

TEST_CASE("conditional CGF equals the unconditional formula over all phrases") {
    std::vector<double> phrase_bits{1.0, 1.0, 1.0, 2.0};
    std::vector<std::size_t> ctx{0, 1, 2, 2};
    auto v = conditional_vv_cgf(phrase_bits, ctx, 6, 1.0);
    auto plain = vv_cgf(phrase_bits, 6, 1.0);
    CHECK(v.value == doctest::Approx(plain.value).epsilon(1e-15));

    std::vector<std::size_t> wrong{0, 1};
    CHECK_THROWS_AS(conditional_vv_cgf(phrase_bits, wrong, 6, 1.0),
                    std::invalid_argument);
}

TEST_CASE("CGF values stay finite at large tilts and grow with lambda") {
    std::vector<double> lengths{1.0, 5.0, 9.0, 2.0, 7.0};
    double prev = vv_cgf(lengths, 24, 0.0).value;
    for (double lambda : {0.25, 1.0, 4.0, 16.0, 64.0, 512.0}) {
        auto v = vv_cgf(lengths, 24, lambda);
        CHECK(std::isfinite(v.value));
        CHECK(v.value >= prev - 1e-12);
        prev = v.value;
    }
    // In the stiff limit the CGF approaches (c/n) * max length.
    CHECK(vv_cgf(lengths, 24, 512.0).value ==
          doctest::Approx(5.0 / 24.0 * 9.0).epsilon(1e-3));
}
