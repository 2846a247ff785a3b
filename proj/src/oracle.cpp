#include "modcount/oracle.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "modcount/arith.hpp"

namespace modcount::oracle {

namespace {

constexpr double kSumTolerance = 1e-6;

std::complex<double> unit_root(double numerator, double denominator) {
    const double angle = 2.0 * std::numbers::pi * numerator / denominator;
    return {std::cos(angle), std::sin(angle)};
}

std::int64_t reduce(std::int64_t b, std::int64_t n) {
    std::int64_t r = b % n;
    return r < 0 ? r + n : r;
}

void require_cap(std::int64_t n, std::int64_t max_n, const char *who) {
    if (n > max_n) {
        throw CapacityError(std::string(who) + ": n = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(max_n));
    }
}

// Counts k-element subsets of `universe` whose element sum is congruent to
// b mod n, by walking the combinations in place.
Count count_subsets(const std::vector<std::int64_t> &universe, std::int64_t k,
                    std::int64_t b, std::int64_t n) {
    const std::int64_t size = static_cast<std::int64_t>(universe.size());
    if (k > size) {
        return 0;
    }
    std::vector<std::int64_t> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    Count matches = 0;
    while (true) {
        std::int64_t sum = 0;
        for (std::int64_t i : idx) {
            sum += universe[static_cast<std::size_t>(i)];
        }
        if (sum % n == b) {
            ++matches;
        }
        // advance to the next combination
        std::int64_t pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == size - k + pos) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++idx[static_cast<std::size_t>(pos)];
        for (std::int64_t i = pos + 1; i < k; ++i) {
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return matches;
}

std::uint64_t rotate_left(std::uint64_t x, std::int64_t n) {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    return ((x << 1) & mask) | (x >> (n - 1));
}

} // namespace

PeriodicSamples dft(const PeriodicSamples &f) {
    const std::int64_t n = f.period();
    PeriodicSamples out;
    out.values.resize(f.values.size());
    for (std::int64_t b = 1; b <= n; ++b) {
        std::complex<double> acc = 0.0;
        for (std::int64_t j = 1; j <= n; ++j) {
            acc += f.values[static_cast<std::size_t>(j - 1)] *
                   unit_root(static_cast<double>(-b * j), static_cast<double>(n));
        }
        out.values[static_cast<std::size_t>(b - 1)] = acc;
    }
    return out;
}

PeriodicSamples idft(const PeriodicSamples &fhat) {
    const std::int64_t n = fhat.period();
    PeriodicSamples out;
    out.values.resize(fhat.values.size());
    for (std::int64_t b = 1; b <= n; ++b) {
        std::complex<double> acc = 0.0;
        for (std::int64_t j = 1; j <= n; ++j) {
            acc += fhat.values[static_cast<std::size_t>(j - 1)] *
                   unit_root(static_cast<double>(b * j), static_cast<double>(n));
        }
        out.values[static_cast<std::size_t>(b - 1)] = acc / static_cast<double>(n);
    }
    return out;
}

Count count_distinct(const CongruenceSpec &spec, std::int64_t max_subsets) {
    const std::int64_t n = spec.modulus;
    const std::int64_t k = spec.tuple_size;
    if (k <= n && binomial(n, k) > max_subsets) {
        throw CapacityError("oracle::count_distinct: C(" + std::to_string(n) + "," +
                            std::to_string(k) + ") exceeds cap " +
                            std::to_string(max_subsets));
    }
    std::vector<std::int64_t> universe(static_cast<std::size_t>(n));
    std::iota(universe.begin(), universe.end(), 0);
    return count_subsets(universe, k, spec.residue, n) * factorial(k);
}

Count count_distinct_positive(const CongruenceSpec &spec, std::int64_t max_subsets) {
    const std::int64_t n = spec.modulus;
    const std::int64_t k = spec.tuple_size;
    if (k <= n - 1 && binomial(n - 1, k) > max_subsets) {
        throw CapacityError("oracle::count_distinct_positive: C(" +
                            std::to_string(n - 1) + "," + std::to_string(k) +
                            ") exceeds cap " + std::to_string(max_subsets));
    }
    std::vector<std::int64_t> universe(static_cast<std::size_t>(n - 1));
    std::iota(universe.begin(), universe.end(), 1);
    return count_subsets(universe, k, spec.residue, n) * factorial(k);
}

Count subset_sum(std::int64_t n, std::int64_t b, bool exclude_n, std::int64_t max_n) {
    if (n < 1) {
        throw std::invalid_argument("oracle::subset_sum: modulus must be >= 1");
    }
    require_cap(n, max_n, "oracle::subset_sum");
    const std::int64_t r = reduce(b, n);
    const std::int64_t limit = exclude_n ? n - 1 : n;
    Count matches = 0;
    const std::uint64_t total = std::uint64_t{1} << limit;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::int64_t sum = 0;
        for (std::int64_t i = 1; i <= limit; ++i) {
            if ((mask >> (i - 1)) & 1U) {
                sum += i;
            }
        }
        if (sum % n == r) {
            ++matches;
        }
    }
    return matches;
}

VTScan vt_scan(const VTSpec &spec, std::int64_t max_n) {
    const std::int64_t n = spec.length;
    require_cap(n, max_n, "oracle::vt_scan");
    VTScan scan;
    scan.size = 0;
    scan.weights.length = n;
    scan.weights.syndrome = spec.syndrome;
    scan.weights.counts.assign(static_cast<std::size_t>(n) + 1, Count(0));
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (std::uint64_t x = 0; x < total; ++x) {
        for (std::int64_t i = 1; i <= n; ++i) {
            bits[static_cast<std::size_t>(i - 1)] =
                static_cast<std::uint8_t>((x >> (n - i)) & 1U);
        }
        BitVector v(bits);
        if (vt_member(v, spec)) {
            ++scan.size;
            ++scan.weights.counts[static_cast<std::size_t>(v.weight())];
        }
    }
    return scan;
}

Count necklaces(std::int64_t n, std::int64_t ones, bool lyndon_only,
                std::int64_t max_n) {
    if (n < 1) {
        throw std::invalid_argument("oracle::necklaces: length must be >= 1");
    }
    if (ones < 0 || ones > n) {
        throw std::invalid_argument("oracle::necklaces: ones outside 0..n");
    }
    require_cap(n, max_n, "oracle::necklaces");
    Count classes = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < total; ++x) {
        if (std::popcount(x) != static_cast<int>(ones)) {
            continue;
        }
        // keep x only if it is the least element of its rotation class
        bool least = true;
        bool aperiodic = true;
        std::uint64_t y = x;
        for (std::int64_t step = 1; step < n; ++step) {
            y = rotate_left(y, n);
            if (y < x) {
                least = false;
                break;
            }
            if (y == x) {
                aperiodic = false;
            }
        }
        if (least && (!lyndon_only || aperiodic)) {
            ++classes;
        }
    }
    return classes;
}

std::int64_t ramanujan_definition(std::int64_t n, std::int64_t m, std::int64_t max_n) {
    if (n < 1) {
        throw std::invalid_argument("oracle::ramanujan_definition: n must be >= 1");
    }
    require_cap(n, max_n, "oracle::ramanujan_definition");
    std::complex<double> acc = 0.0;
    for (std::int64_t j = 1; j <= n; ++j) {
        if (std::gcd(j, n) != 1) {
            continue;
        }
        acc += unit_root(static_cast<double>(j) * static_cast<double>(m),
                         static_cast<double>(n));
    }
    const double rounded = std::round(acc.real());
    if (std::abs(acc.imag()) >= kSumTolerance ||
        std::abs(acc.real() - rounded) >= kSumTolerance) {
        throw std::runtime_error("oracle::ramanujan_definition: sum " +
                                 std::to_string(acc.real()) + " + " +
                                 std::to_string(acc.imag()) +
                                 "i is not close to an integer");
    }
    return static_cast<std::int64_t>(rounded);
}

std::vector<double> product_coefficients_numeric(std::int64_t n, std::int64_t m,
                                                 std::int64_t max_n) {
    if (n < 1) {
        throw std::invalid_argument(
            "oracle::product_coefficients_numeric: n must be >= 1");
    }
    require_cap(n, max_n, "oracle::product_coefficients_numeric");
    std::vector<std::complex<double>> poly{1.0};
    poly.reserve(static_cast<std::size_t>(n) + 1);
    for (std::int64_t j = 1; j <= n; ++j) {
        const std::complex<double> root =
            unit_root(static_cast<double>(j) * static_cast<double>(m),
                      static_cast<double>(n));
        poly.push_back(0.0);
        for (std::size_t k = poly.size() - 1; k >= 1; --k) {
            poly[k] += poly[k - 1] * root;
        }
    }
    std::vector<double> coeffs;
    coeffs.reserve(poly.size());
    for (const std::complex<double> &c : poly) {
        if (std::abs(c.imag()) >= kSumTolerance) {
            throw std::runtime_error(
                "oracle::product_coefficients_numeric: imaginary residue " +
                std::to_string(c.imag()));
        }
        coeffs.push_back(c.real());
    }
    return coeffs;
}

} // namespace modcount::oracle
