#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modcount {

/// Exact count. Results of the counting formulas are non-negative, but
/// intermediate divisor-sum accumulations may go negative, so it is signed.
/// Never route these through floating types; serialize as decimal strings.
using Count = mpz_class;

/// Exact rational, kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// Thrown when an enumeration or brute-force request exceeds its cap.
/// Distinct from std::invalid_argument so callers can map it to a
/// dedicated exit status instead of a usage error.
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string &what) : std::runtime_error(what) {}
};

/// Quotient num/den, required to be exact. Every closed form here ends in a
/// division that must leave no remainder; a nonzero remainder means the
/// formula was transcribed wrong, so it throws std::logic_error.
Count exact_div(const Count &num, const Count &den);

/// 2^e.
Count pow2(std::uint64_t e);

/// base^e for arbitrary-precision base, e >= 0.
Count pow_count(const Count &base, std::uint64_t e);

} // namespace modcount
