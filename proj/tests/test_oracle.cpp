#include "doctest.h"

#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <stdexcept>

#include "modcount/arith.hpp"
#include "modcount/oracle.hpp"

using namespace modcount;

TEST_CASE("dft of the constant function") {
    oracle::PeriodicSamples f;
    f.values.assign(4, {1.0, 0.0});
    const oracle::PeriodicSamples fhat = oracle::dft(f);
    // components at b = 1,2,3 vanish; b = n collects the full sum
    for (std::size_t i = 0; i + 1 < fhat.values.size(); ++i) {
        CHECK(std::abs(fhat.values[i]) < 1e-9);
    }
    CHECK(std::abs(fhat.values[3] - std::complex<double>(4.0, 0.0)) < 1e-9);
}

TEST_CASE("dft concentrates a pure exponential") {
    const std::int64_t n = 8;
    oracle::PeriodicSamples f;
    for (std::int64_t j = 1; j <= n; ++j) {
        const double angle = 2.0 * 3.14159265358979323846 * 3.0 * j / n;
        f.values.emplace_back(std::cos(angle), std::sin(angle));
    }
    const oracle::PeriodicSamples fhat = oracle::dft(f);
    for (std::int64_t b = 1; b <= n; ++b) {
        const double expected = b == 3 ? 8.0 : 0.0;
        CHECK(std::abs(fhat.values[static_cast<std::size_t>(b - 1)] -
                       std::complex<double>(expected, 0.0)) < 1e-9);
    }
}

TEST_CASE("idft inverts dft on random samples") {
    std::mt19937 rng(20260821);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (std::int64_t n : {1, 2, 3, 16, 37, 64}) {
        oracle::PeriodicSamples f;
        for (std::int64_t j = 0; j < n; ++j) {
            f.values.emplace_back(dist(rng), dist(rng));
        }
        const oracle::PeriodicSamples back = oracle::idft(oracle::dft(f));
        REQUIRE(back.period() == n);
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            REQUIRE(std::abs(back.values[i] - f.values[i]) < 1e-9);
        }
    }
}

TEST_CASE("dft of the coprimality indicator gives the Ramanujan sums") {
    ArithContext ctx;
    for (std::int64_t n = 1; n <= 40; ++n) {
        oracle::PeriodicSamples f;
        for (std::int64_t j = 1; j <= n; ++j) {
            f.values.emplace_back(std::gcd(j, n) == 1 ? 1.0 : 0.0, 0.0);
        }
        const oracle::PeriodicSamples fhat = oracle::dft(f);
        for (std::int64_t b = 1; b <= n; ++b) {
            const auto value = fhat.values[static_cast<std::size_t>(b - 1)];
            REQUIRE(std::abs(value.imag()) < 1e-6);
            REQUIRE(std::abs(value.real() -
                             static_cast<double>(ramanujan_sum(ctx, n, b))) < 1e-6);
        }
    }
}

TEST_CASE("brute-force counters, fixed values") {
    CHECK(oracle::count_distinct({5, 2, 0}) == 4);
    CHECK(oracle::count_distinct_positive({6, 2, 1}) == 4);
    CHECK(oracle::subset_sum(5, 0, false) == 8);
    CHECK(oracle::subset_sum(5, 0, true) == 4);
    CHECK(oracle::necklaces(6, 3, false) == 4);
    CHECK(oracle::necklaces(6, 3, true) == 3);
    CHECK(oracle::ramanujan_definition(6, 4) == -1);
    CHECK(oracle::ramanujan_definition(1, 0) == 1);

    const oracle::VTScan scan = oracle::vt_scan({5, 0});
    CHECK(scan.size == 6);
    CHECK(scan.weights.counts == std::vector<Count>{1, 0, 2, 2, 1, 0});
}

TEST_CASE("oracles refuse work beyond their caps") {
    CHECK_THROWS_AS(oracle::count_distinct({40, 20, 0}), CapacityError);
    CHECK_THROWS_AS(oracle::count_distinct_positive({40, 20, 0}), CapacityError);
    CHECK_THROWS_AS(oracle::subset_sum(30, 0, false), CapacityError);
    CHECK_THROWS_AS(oracle::vt_scan({24, 0}), CapacityError);
    CHECK_THROWS_AS(oracle::necklaces(20, 10, false), CapacityError);
    CHECK_THROWS_AS(oracle::ramanujan_definition(20000, 1), CapacityError);
    CHECK_THROWS_AS(oracle::product_coefficients_numeric(30, 1), CapacityError);
    // explicit caps loosen or tighten the defaults
    CHECK(oracle::subset_sum(5, 0, false, 5) == 8);
    CHECK_THROWS_AS(oracle::subset_sum(6, 0, false, 5), CapacityError);
}

TEST_CASE("numeric product expansion matches small closed products") {
    // prod_{j=1..2} (1 + z e(j/2)) = (1 - z)(1 + z) = 1 - z^2
    const std::vector<double> coeffs = oracle::product_coefficients_numeric(2, 1);
    REQUIRE(coeffs.size() == 3);
    CHECK(std::abs(coeffs[0] - 1.0) < 1e-9);
    CHECK(std::abs(coeffs[1]) < 1e-9);
    CHECK(std::abs(coeffs[2] + 1.0) < 1e-9);

    // m = 0 collapses to (1 + z)^3
    const std::vector<double> cube = oracle::product_coefficients_numeric(3, 0);
    REQUIRE(cube.size() == 4);
    CHECK(std::abs(cube[1] - 3.0) < 1e-9);
    CHECK(std::abs(cube[2] - 3.0) < 1e-9);
}
