#include "modcount/congruence.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace modcount {

namespace {

std::int64_t reduce(std::int64_t b, std::int64_t n) {
    std::int64_t r = b % n;
    return r < 0 ? r + n : r;
}

// Finishes the divisor sums of the distinct-coordinate counts:
// result = (-1)^k * k! * sum / n, checked exact and non-negative.
Count finish_count(const Count &sum, std::int64_t k, std::int64_t n) {
    Count total = factorial(k) * sum;
    if (k % 2 != 0) {
        total = -total;
    }
    Count result = exact_div(total, n);
    if (result < 0) {
        throw std::logic_error("distinct-coordinate count came out negative");
    }
    return result;
}

} // namespace

CongruenceSpec::CongruenceSpec(std::int64_t n, std::int64_t k, std::int64_t b)
    : modulus(n), tuple_size(k), residue(0) {
    if (n < 1) {
        throw std::invalid_argument("CongruenceSpec: modulus must be >= 1, got " +
                                    std::to_string(n));
    }
    if (k < 0) {
        throw std::invalid_argument("CongruenceSpec: tuple size must be >= 0, got " +
                                    std::to_string(k));
    }
    residue = reduce(b, n);
}

Count count_distinct(ArithContext &ctx, const CongruenceSpec &spec) {
    const std::int64_t n = spec.modulus;
    const std::int64_t k = spec.tuple_size;
    const std::int64_t b = spec.residue;
    if (k > n) {
        return 0;
    }
    const std::int64_t g = gcd_with_modulus(k, n);
    Count sum = 0;
    for (std::int64_t d : ctx.divisors(g)) {
        Count term = Count(ramanujan_sum(ctx, d, b)) * binomial(n / d, k / d);
        if ((k / d) % 2 != 0) {
            term = -term;
        }
        sum += term;
    }
    return finish_count(sum, k, n);
}

Count count_distinct_unordered(ArithContext &ctx, const CongruenceSpec &spec) {
    return exact_div(count_distinct(ctx, spec), factorial(spec.tuple_size));
}

Count count_distinct_positive(ArithContext &ctx, const CongruenceSpec &spec) {
    const std::int64_t n = spec.modulus;
    const std::int64_t k = spec.tuple_size;
    const std::int64_t b = spec.residue;
    if (k >= n) {
        return 0; // only n-1 nonzero residues
    }
    Count sum = 0;
    for (std::int64_t d : ctx.divisors(n)) {
        const std::int64_t kd = k / d; // floor
        Count term = Count(ramanujan_sum(ctx, d, b)) * binomial(n / d - 1, kd);
        if (kd % 2 != 0) {
            term = -term;
        }
        sum += term;
    }
    return finish_count(sum, k, n);
}

Count subset_sum_count(ArithContext &ctx, std::int64_t n, std::int64_t b) {
    if (n < 1) {
        throw std::invalid_argument("subset_sum_count: modulus must be >= 1");
    }
    const std::int64_t r = reduce(b, n);
    Count sum = 0;
    for (std::int64_t d : ctx.divisors(n)) {
        if (d % 2 == 0) {
            continue;
        }
        sum += Count(ramanujan_sum(ctx, d, r)) * pow2(static_cast<std::uint64_t>(n / d));
    }
    return exact_div(sum, n);
}

Count subset_sum_count_excl(ArithContext &ctx, std::int64_t n, std::int64_t b) {
    return exact_div(subset_sum_count(ctx, n, b), 2);
}

Count count_unrestricted(std::span<const std::int64_t> coeffs, std::int64_t b,
                         std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("count_unrestricted: modulus must be >= 1");
    }
    if (coeffs.empty()) {
        throw std::invalid_argument("count_unrestricted: coefficient list is empty");
    }
    std::int64_t l = n;
    for (std::int64_t a : coeffs) {
        l = std::gcd(l, a < 0 ? -a : a);
    }
    if (reduce(b, n) % l != 0) {
        return 0;
    }
    return l * pow_count(n, static_cast<std::uint64_t>(coeffs.size() - 1));
}

CoeffVector product_coefficients(ArithContext &, std::int64_t n, std::int64_t m) {
    if (n < 1) {
        throw std::invalid_argument("product_coefficients: n must be >= 1");
    }
    if (m < 0) {
        throw std::invalid_argument("product_coefficients: m must be >= 0");
    }
    const std::int64_t d = gcd_with_modulus(m, n);
    const std::int64_t step = n / d; // z^k coefficient vanishes unless step | k
    CoeffVector cv;
    cv.degree = n;
    cv.coeffs.assign(static_cast<std::size_t>(n) + 1, Count(0));
    for (std::int64_t j = 0; j <= d; ++j) {
        const std::int64_t k = j * step;
        Count c = binomial(d, j);
        if ((k + j) % 2 != 0) {
            c = -c;
        }
        cv.coeffs[static_cast<std::size_t>(k)] = c;
    }
    return cv;
}

} // namespace modcount
