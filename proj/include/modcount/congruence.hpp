#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "modcount/arith.hpp"
#include "modcount/common.hpp"

namespace modcount {

/// One instance of the counting problem
///
///   x_1 + ... + x_k == b (mod n),  all x_i pairwise distinct mod n.
///
/// The residue is normalized into [0, n) on construction; all formulas
/// consume the reduced value (c_d(b) is d-periodic and d | n).
struct CongruenceSpec {
    std::int64_t modulus;    // n >= 1
    std::int64_t tuple_size; // k >= 0
    std::int64_t residue;    // b, stored in [0, modulus)

    CongruenceSpec(std::int64_t n, std::int64_t k, std::int64_t b);
};

/// N_n(k,b): ordered tuples with distinct coordinates summing to b mod n,
///
///   N_n(k,b) = ((-1)^k k! / n) * sum_{d | (n,k)} (-1)^(k/d) c_d(b) C(n/d, k/d),
///
/// with (n,0) = n, so k = 0 yields 1 iff b == 0 (empty sum). k > n returns 0
/// without evaluating the sum. The division by n is exact.
Count count_distinct(ArithContext &ctx, const CongruenceSpec &spec);

/// P_n(k,b) = N_n(k,b) / k!: the same count with coordinate order ignored.
/// N_n(k,b) is always divisible by k!; the division is checked.
Count count_distinct_unordered(ArithContext &ctx, const CongruenceSpec &spec);

/// N_n^{>0}(k,b): distinct-coordinate tuples with every coordinate nonzero
/// mod n,
///
///   N_n^{>0}(k,b) = ((-1)^k k! / n)
///                   * sum_{d | n} (-1)^floor(k/d) c_d(b) C(n/d - 1, floor(k/d)).
///
/// Returns 0 when k >= n (only n-1 nonzero residues exist). Satisfies
/// N_n(k,b) = N_n^{>0}(k,b) + k * N_n^{>0}(k-1,b).
Count count_distinct_positive(ArithContext &ctx, const CongruenceSpec &spec);

/// T_n(b): subsets of {1,...,n} with element sum == b (mod n),
///
///   T_n(b) = (1/n) * sum_{d | n, d odd} c_d(b) 2^(n/d).
Count subset_sum_count(ArithContext &ctx, std::int64_t n, std::int64_t b);

/// T'_n(b) = T_n(b) / 2: subsets of {1,...,n-1} with sum == b (mod n).
Count subset_sum_count_excl(ArithContext &ctx, std::int64_t n, std::int64_t b);

/// Solutions of a_1 x_1 + ... + a_k x_k == b (mod n) over Z_n^k with no
/// distinctness restriction: l * n^(k-1) if l | b where l = (a_1,...,a_k,n),
/// else 0. Coefficients may be negative or zero; gcd is taken on absolute
/// values with gcd(0, n) = n.
Count count_unrestricted(std::span<const std::int64_t> coeffs, std::int64_t b,
                         std::int64_t n);

/// Exact coefficients of the degree-n polynomial
/// prod_{j=1..n} (1 + z e^(2*pi*i*j*m/n)).
struct CoeffVector {
    std::int64_t degree;       // n
    std::vector<Count> coeffs; // degree+1 entries; coeffs[k] multiplies z^k
};

/// With d = (m,n) (and (0,n) = n), the z^k coefficient is
/// (-1)^(k + kd/n) C(d, kd/n), zero whenever kd/n is not an integer.
/// Requires m >= 0.
CoeffVector product_coefficients(ArithContext &ctx, std::int64_t n, std::int64_t m);

} // namespace modcount
