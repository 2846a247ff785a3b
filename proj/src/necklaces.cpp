#include "modcount/necklaces.hpp"

#include <stdexcept>
#include <string>

namespace modcount {

namespace {

void require_length(std::int64_t n, const char *who) {
    if (n < 1) {
        throw std::invalid_argument(std::string(who) + ": length must be >= 1, got " +
                                    std::to_string(n));
    }
}

void require_density(std::int64_t n, std::int64_t ones, const char *who) {
    require_length(n, who);
    if (ones < 0 || ones > n) {
        throw std::invalid_argument(std::string(who) + ": ones must lie in 0.." +
                                    std::to_string(n) + ", got " +
                                    std::to_string(ones));
    }
}

Count mobius_power_sum(ArithContext &ctx, std::int64_t q, std::int64_t n) {
    Count sum = 0;
    for (std::int64_t d : ctx.divisors(n)) {
        const int mu = ctx.mobius(d);
        if (mu == 0) {
            continue;
        }
        Count term = pow_count(q, static_cast<std::uint64_t>(n / d));
        sum += mu > 0 ? term : -term;
    }
    return sum;
}

} // namespace

Count necklace_poly(ArithContext &ctx, std::int64_t q, std::int64_t n) {
    require_length(n, "necklace_poly");
    return exact_div(mobius_power_sum(ctx, q, n), n);
}

Rational quasi_necklace_poly(ArithContext &ctx, std::int64_t q, std::int64_t n) {
    require_length(n, "quasi_necklace_poly");
    Rational r(mobius_power_sum(ctx, q, n), Count(2 * n));
    r.canonicalize();
    return r;
}

Count fixed_density_necklaces(ArithContext &ctx, std::int64_t n, std::int64_t ones) {
    require_density(n, ones, "fixed_density_necklaces");
    const std::int64_t g = gcd_with_modulus(ones, n);
    Count sum = 0;
    for (std::int64_t d : ctx.divisors(g)) {
        sum += Count(ctx.euler_phi(d)) * binomial(n / d, ones / d);
    }
    return exact_div(sum, n);
}

Count fixed_density_lyndon(ArithContext &ctx, std::int64_t n, std::int64_t ones) {
    require_density(n, ones, "fixed_density_lyndon");
    const std::int64_t g = gcd_with_modulus(ones, n);
    Count sum = 0;
    for (std::int64_t d : ctx.divisors(g)) {
        const int mu = ctx.mobius(d);
        if (mu == 0) {
            continue;
        }
        Count term = binomial(n / d, ones / d);
        sum += mu > 0 ? term : -term;
    }
    return exact_div(sum, n);
}

} // namespace modcount
