#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "modcount/common.hpp"

namespace modcount {

struct PrimePower {
    std::int64_t prime;
    int exponent;

    friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

/// Prime factorization of a positive integer. Primes strictly increasing,
/// exponents >= 1; n = 1 has an empty prime list.
struct Factorization {
    std::int64_t value = 1;
    std::vector<PrimePower> primes;
};

/// Memoizing provider of factorizations, divisor lists, mu and phi.
///
/// All lookups populate on demand and are internally synchronized, so one
/// context can be shared across threads. Returned references stay valid for
/// the lifetime of the context (entries are never evicted or mutated).
///
/// Factorization is plain trial division up to sqrt(n), which covers the
/// intended input scale (n up to ~10^7).
class ArithContext {
  public:
    ArithContext() = default;
    ArithContext(const ArithContext &) = delete;
    ArithContext &operator=(const ArithContext &) = delete;

    const Factorization &factorize(std::int64_t n);

    /// All positive divisors of n, ascending; first is 1, last is n.
    const std::vector<std::int64_t> &divisors(std::int64_t n);

    /// Mobius function: 0 if n has a squared prime factor, else
    /// (-1)^(number of prime factors).
    int mobius(std::int64_t n);

    /// Euler totient: #{1 <= j <= n : gcd(j, n) = 1}.
    std::int64_t euler_phi(std::int64_t n);

  private:
    const Factorization &factorize_locked(std::int64_t n);
    std::int64_t euler_phi_locked(std::int64_t n);

    std::mutex mutex_;
    std::unordered_map<std::int64_t, Factorization> factorizations_;
    std::unordered_map<std::int64_t, std::vector<std::int64_t>> divisor_lists_;
    std::unordered_map<std::int64_t, int> mobius_values_;
    std::unordered_map<std::int64_t, std::int64_t> phi_values_;
};

/// Ramanujan sum c_n(m): the sum of the m-th powers of the primitive n-th
/// roots of unity. Computed exactly via Kluyver's divisor formula
///
///   c_n(m) = sum_{d | (m,n)} mu(n/d) * d,
///
/// with the convention (0,n) = n, which makes c_n(0) = phi(n). m may be any
/// integer; c_n is n-periodic in m and c_n(-m) = c_n(m).
std::int64_t ramanujan_sum(ArithContext &ctx, std::int64_t n, std::int64_t m);

/// von Sterneck number phi(n) * mu(n/(m,n)) / phi(n/(m,n)), equal to c_n(m).
/// The division is exact; a nonzero remainder throws std::logic_error.
std::int64_t von_sterneck(ArithContext &ctx, std::int64_t n, std::int64_t m);

/// Binomial coefficient C(n, k) at arbitrary precision, n >= 0.
/// Returns 0 when k < 0 or k > n.
Count binomial(std::int64_t n, std::int64_t k);

/// C(n, num/den) for a rational index: 0 unless den divides num.
Count binomial_ratio(std::int64_t n, std::int64_t num, std::int64_t den);

/// n! at arbitrary precision, n >= 0.
Count factorial(std::int64_t n);

/// gcd(m mod n, n) with gcd(0, n) = n; the "(m, n)" of the divisor sums.
std::int64_t gcd_with_modulus(std::int64_t m, std::int64_t n);

} // namespace modcount
