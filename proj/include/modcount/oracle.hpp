#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "modcount/common.hpp"
#include "modcount/congruence.hpp"
#include "modcount/vt_codes.hpp"

// Brute-force and floating-point reference implementations. These share no
// formula logic with the production paths; the `verify` sweeps and the test
// suites check the closed forms against them at small scale. Not a stable
// surface and not tuned for speed.
//
// Every enumeration takes an explicit cap and throws CapacityError beyond it
// rather than silently truncating. Floating tolerances: 1e-6 for definition
// sums and polynomial products (error growth is O(n) in unit-magnitude
// summands), 1e-9 for DFT round trips.

namespace modcount::oracle {

/// One period of a function Z -> C with period n: values[i] = f(i+1).
struct PeriodicSamples {
    std::vector<std::complex<double>> values;

    std::int64_t period() const { return static_cast<std::int64_t>(values.size()); }
};

/// fhat(b) = sum_{j=1..n} f(j) e(-bj/n), for b = 1..n.
PeriodicSamples dft(const PeriodicSamples &f);

/// f(b) = (1/n) sum_{j=1..n} fhat(j) e(bj/n), for b = 1..n.
PeriodicSamples idft(const PeriodicSamples &fhat);

/// N_n(k,b) by enumerating k-element subsets of Z_n and multiplying by k!
/// (the sum is order-invariant). Cap: C(n,k) <= max_subsets.
Count count_distinct(const CongruenceSpec &spec,
                     std::int64_t max_subsets = 1'000'000);

/// N_n^{>0}(k,b): subsets drawn from {1,...,n-1}. Cap: C(n-1,k) <= max_subsets.
Count count_distinct_positive(const CongruenceSpec &spec,
                              std::int64_t max_subsets = 1'000'000);

/// Subsets of {1,...,n} (or {1,...,n-1} when exclude_n) with sum == b mod n,
/// by iterating all masks. Cap: n <= max_n.
Count subset_sum(std::int64_t n, std::int64_t b, bool exclude_n,
                 std::int64_t max_n = 24);

struct VTScan {
    Count size;
    WeightDistribution weights;
};

/// Scans all 2^n words with the membership predicate. Cap: n <= max_n.
VTScan vt_scan(const VTSpec &spec, std::int64_t max_n = 20);

/// Rotation-equivalence classes of binary length-n strings with exactly
/// `ones` ones; with lyndon_only, just the aperiodic classes.
/// Cap: n <= max_n.
Count necklaces(std::int64_t n, std::int64_t ones, bool lyndon_only,
                std::int64_t max_n = 16);

/// c_n(m) straight from the definition sum_{1<=j<=n, (j,n)=1} e(jm/n) in
/// complex arithmetic, rounded. Throws std::runtime_error if the imaginary
/// part or the distance to the nearest integer reaches 1e-6.
/// Cap: n <= max_n.
std::int64_t ramanujan_definition(std::int64_t n, std::int64_t m,
                                  std::int64_t max_n = 10'000);

/// Coefficients of prod_{j=1..n} (1 + z e(jm/n)) by iterated polynomial
/// multiplication in complex arithmetic. Imaginary parts must stay under
/// 1e-6; returns the real parts. Cap: n <= max_n.
std::vector<double> product_coefficients_numeric(std::int64_t n, std::int64_t m,
                                                 std::int64_t max_n = 24);

} // namespace modcount::oracle
