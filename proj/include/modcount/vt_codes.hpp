#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "modcount/arith.hpp"
#include "modcount/common.hpp"

namespace modcount {

/// Binary word y_1 ... y_n. Position 1 is the leftmost character of the
/// string form, so "01010" has y_2 = y_4 = 1.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::vector<std::uint8_t> bits);

    /// Parse an ASCII 0/1 string.
    static BitVector parse(std::string_view text);

    std::int64_t length() const { return static_cast<std::int64_t>(bits_.size()); }

    /// y_i, 1-based.
    int bit(std::int64_t i) const;

    /// Hamming weight: number of ones.
    std::int64_t weight() const;

    /// sum_{i=1..n} i * y_i mod (n+1).
    std::int64_t syndrome() const;

    std::string str() const;

    friend auto operator<=>(const BitVector &, const BitVector &) = default;

  private:
    std::vector<std::uint8_t> bits_;
};

/// Varshamov-Tenengolts code VT_b(n): binary length-n words with
/// sum i*y_i == b (mod n+1). The syndrome residue is reduced mod n+1 on
/// construction.
struct VTSpec {
    std::int64_t length;   // n >= 1
    std::int64_t syndrome; // b, stored in [0, length]

    VTSpec(std::int64_t n, std::int64_t b);
};

/// True iff v belongs to VT_b(n). v must have length spec.length.
bool vt_member(const BitVector &v, const VTSpec &spec);

/// |VT_b(n)| = (1 / (2(n+1))) * sum_{d | n+1, d odd} c_d(b) 2^((n+1)/d).
Count vt_size(ArithContext &ctx, const VTSpec &spec);

/// Codewords of Hamming weight k:
///
///   |VT_b^{1,k}(n)| = ((-1)^k / (n+1))
///       * sum_{d | n+1} (-1)^floor(k/d) c_d(b) C((n+1)/d - 1, floor(k/d)).
///
/// Requires 0 <= k <= n.
Count vt_weight_count(ArithContext &ctx, const VTSpec &spec, std::int64_t k);

struct WeightDistribution {
    std::int64_t length;
    std::int64_t syndrome;
    std::vector<Count> counts; // counts[k] = codewords of weight k; n+1 entries

    Count total() const;
};

/// Per-weight counts for all k = 0..n, by n+1 formula evaluations (no
/// enumeration), so it scales to large n. Entries sum to vt_size.
WeightDistribution vt_weight_distribution(ArithContext &ctx, const VTSpec &spec);

/// Default length cap for explicit enumeration (2^24 membership tests).
inline constexpr std::int64_t kDefaultEnumCap = 24;

/// All codewords of VT_b(n) in lexicographic string order. Refuses
/// spec.length > cap with a CapacityError.
std::vector<BitVector> vt_enumerate(const VTSpec &spec,
                                    std::int64_t cap = kDefaultEnumCap);

/// Counts rendered as decimal strings (big integers must not pass through
/// native floating types, e.g. in JSON output).
std::vector<std::string> to_decimal_strings(const std::vector<Count> &counts);

} // namespace modcount
