#pragma once

#include <cstdint>

#include "modcount/arith.hpp"
#include "modcount/common.hpp"

namespace modcount {

/// Necklace polynomial M(q, n) = (1/n) sum_{d | n} mu(d) q^(n/d): the number
/// of aperiodic q-ary necklaces (Lyndon words) of length n. Integer-valued
/// for every integer q; the division by n is checked.
Count necklace_poly(ArithContext &ctx, std::int64_t q, std::int64_t n);

/// Quasi-necklace polynomial M'(q, n) = (1/2n) sum_{d | n} mu(d) q^(n/d),
/// as an exact reduced rational. Not always an integer (M'(3, 1) = 3/2).
Rational quasi_necklace_poly(ArithContext &ctx, std::int64_t q, std::int64_t n);

/// Binary necklaces of length n with exactly `ones` ones:
/// (1/n) sum_{d | (n, ones)} phi(d) C(n/d, ones/d).
Count fixed_density_necklaces(ArithContext &ctx, std::int64_t n, std::int64_t ones);

/// Binary Lyndon words of length n with exactly `ones` ones:
/// (1/n) sum_{d | (n, ones)} mu(d) C(n/d, ones/d).
Count fixed_density_lyndon(ArithContext &ctx, std::int64_t n, std::int64_t ones);

} // namespace modcount
