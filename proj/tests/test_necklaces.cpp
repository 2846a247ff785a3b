#include "doctest.h"

#include <stdexcept>

#include "modcount/congruence.hpp"
#include "modcount/necklaces.hpp"
#include "modcount/oracle.hpp"

using namespace modcount;

TEST_CASE("necklace polynomial, fixed values") {
    ArithContext ctx;
    CHECK(necklace_poly(ctx, 2, 1) == 2);
    CHECK(necklace_poly(ctx, 2, 5) == 6);
    CHECK(necklace_poly(ctx, 2, 6) == 9);
    CHECK(necklace_poly(ctx, 3, 4) == 18);
    CHECK(necklace_poly(ctx, 1, 1) == 1);
    CHECK(necklace_poly(ctx, 1, 5) == 0);
    CHECK(necklace_poly(ctx, 0, 3) == 0);
    CHECK_THROWS_AS(necklace_poly(ctx, 2, 0), std::invalid_argument);
}

TEST_CASE("necklace polynomial is integer for negative arguments too") {
    ArithContext ctx;
    for (std::int64_t q = -10; q <= 10; ++q) {
        for (std::int64_t n = 1; n <= 30; ++n) {
            // exact_div inside necklace_poly throws if divisibility ever fails
            const Count value = necklace_poly(ctx, q, n);
            if (q > 1 && n >= 1) {
                CHECK(value > 0);
            }
        }
    }
}

TEST_CASE("quasi-necklace polynomial halves the necklace polynomial") {
    ArithContext ctx;
    CHECK(quasi_necklace_poly(ctx, 2, 5) == Rational(3));
    CHECK(quasi_necklace_poly(ctx, 3, 1) == Rational(3, 2));
    CHECK(quasi_necklace_poly(ctx, 2, 1) == Rational(1));
    for (std::int64_t q = -6; q <= 6; ++q) {
        for (std::int64_t n = 1; n <= 20; ++n) {
            const Rational half = quasi_necklace_poly(ctx, q, n);
            REQUIRE(half * 2 == Rational(necklace_poly(ctx, q, n)));
        }
    }
}

TEST_CASE("fixed-density counts, fixed values") {
    ArithContext ctx;
    CHECK(fixed_density_necklaces(ctx, 6, 3) == 4);
    CHECK(fixed_density_lyndon(ctx, 6, 3) == 3);
    CHECK(fixed_density_necklaces(ctx, 5, 2) == 2);
    CHECK(fixed_density_lyndon(ctx, 5, 2) == 2);
    CHECK(fixed_density_necklaces(ctx, 4, 0) == 1);
    CHECK(fixed_density_lyndon(ctx, 4, 0) == 0);
    CHECK(fixed_density_lyndon(ctx, 1, 0) == 1);
    CHECK(fixed_density_necklaces(ctx, 4, 4) == 1);
    CHECK(fixed_density_lyndon(ctx, 4, 4) == 0);
    CHECK_THROWS_AS(fixed_density_necklaces(ctx, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(fixed_density_necklaces(ctx, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(fixed_density_lyndon(ctx, 4, -1), std::invalid_argument);
}

TEST_CASE("fixed-density counts match rotation-class enumeration") {
    ArithContext ctx;
    for (std::int64_t n = 1; n <= 14; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            REQUIRE(fixed_density_necklaces(ctx, n, k) ==
                    oracle::necklaces(n, k, false));
            REQUIRE(fixed_density_lyndon(ctx, n, k) == oracle::necklaces(n, k, true));
        }
    }
}

TEST_CASE("binary necklace polynomial totals the Lyndon densities") {
    ArithContext ctx;
    for (std::int64_t n = 1; n <= 40; ++n) {
        Count total = 0;
        for (std::int64_t k = 0; k <= n; ++k) {
            total += fixed_density_lyndon(ctx, n, k);
        }
        REQUIRE(necklace_poly(ctx, 2, n) == total);
    }
}

TEST_CASE("necklace polynomial meets the subset sums at odd lengths") {
    ArithContext ctx;
    for (std::int64_t n = 1; n <= 31; n += 2) {
        REQUIRE(necklace_poly(ctx, 2, n) == subset_sum_count(ctx, n, 1));
        REQUIRE(quasi_necklace_poly(ctx, 2, n) ==
                Rational(subset_sum_count_excl(ctx, n, 1)));
    }
}
