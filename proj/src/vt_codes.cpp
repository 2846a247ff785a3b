#include "modcount/vt_codes.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace modcount {

namespace {

std::int64_t reduce(std::int64_t b, std::int64_t m) {
    std::int64_t r = b % m;
    return r < 0 ? r + m : r;
}

} // namespace

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("BitVector: entries must be 0 or 1");
        }
    }
}

BitVector BitVector::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitVector: invalid character '" +
                                        std::string(1, c) + "' in \"" +
                                        std::string(text) + "\"");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitVector(std::move(bits));
}

int BitVector::bit(std::int64_t i) const {
    if (i < 1 || i > length()) {
        throw std::out_of_range("BitVector: index " + std::to_string(i) +
                                " outside 1.." + std::to_string(length()));
    }
    return bits_[static_cast<std::size_t>(i - 1)];
}

std::int64_t BitVector::weight() const {
    std::int64_t w = 0;
    for (std::uint8_t b : bits_) {
        w += b;
    }
    return w;
}

std::int64_t BitVector::syndrome() const {
    const std::int64_t n = length();
    std::int64_t sum = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        sum += i * bits_[static_cast<std::size_t>(i - 1)];
    }
    return sum % (n + 1);
}

std::string BitVector::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (std::uint8_t b : bits_) {
        s.push_back(static_cast<char>('0' + b));
    }
    return s;
}

VTSpec::VTSpec(std::int64_t n, std::int64_t b) : length(n), syndrome(0) {
    if (n < 1) {
        throw std::invalid_argument("VTSpec: length must be >= 1, got " +
                                    std::to_string(n));
    }
    syndrome = reduce(b, n + 1);
}

bool vt_member(const BitVector &v, const VTSpec &spec) {
    if (v.length() != spec.length) {
        throw std::invalid_argument("vt_member: word length " +
                                    std::to_string(v.length()) +
                                    " does not match code length " +
                                    std::to_string(spec.length));
    }
    return v.syndrome() == spec.syndrome;
}

Count vt_size(ArithContext &ctx, const VTSpec &spec) {
    const std::int64_t m = spec.length + 1;
    Count sum = 0;
    for (std::int64_t d : ctx.divisors(m)) {
        if (d % 2 == 0) {
            continue;
        }
        sum += Count(ramanujan_sum(ctx, d, spec.syndrome)) *
               pow2(static_cast<std::uint64_t>(m / d));
    }
    return exact_div(sum, 2 * m);
}

Count vt_weight_count(ArithContext &ctx, const VTSpec &spec, std::int64_t k) {
    const std::int64_t m = spec.length + 1;
    if (k < 0 || k > spec.length) {
        throw std::invalid_argument("vt_weight_count: weight " + std::to_string(k) +
                                    " outside 0.." + std::to_string(spec.length));
    }
    Count sum = 0;
    for (std::int64_t d : ctx.divisors(m)) {
        const std::int64_t kd = k / d; // floor
        Count term = Count(ramanujan_sum(ctx, d, spec.syndrome)) *
                     binomial(m / d - 1, kd);
        if (kd % 2 != 0) {
            term = -term;
        }
        sum += term;
    }
    if (k % 2 != 0) {
        sum = -sum;
    }
    Count result = exact_div(sum, m);
    if (result < 0) {
        throw std::logic_error("vt_weight_count came out negative");
    }
    return result;
}

Count WeightDistribution::total() const {
    Count t = 0;
    for (const Count &c : counts) {
        t += c;
    }
    return t;
}

WeightDistribution vt_weight_distribution(ArithContext &ctx, const VTSpec &spec) {
    WeightDistribution dist;
    dist.length = spec.length;
    dist.syndrome = spec.syndrome;
    dist.counts.reserve(static_cast<std::size_t>(spec.length) + 1);
    for (std::int64_t k = 0; k <= spec.length; ++k) {
        dist.counts.push_back(vt_weight_count(ctx, spec, k));
    }
    return dist;
}

std::vector<BitVector> vt_enumerate(const VTSpec &spec, std::int64_t cap) {
    const std::int64_t n = spec.length;
    if (n > cap || n > 62) {
        throw CapacityError("vt_enumerate: length " + std::to_string(n) +
                            " exceeds enumeration cap " +
                            std::to_string(cap < 62 ? cap : 62));
    }
    std::vector<BitVector> words;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < total; ++x) {
        std::int64_t sum = 0;
        for (std::int64_t i = 1; i <= n; ++i) {
            if ((x >> (n - i)) & 1U) {
                sum += i;
            }
        }
        if (sum % (n + 1) != spec.syndrome) {
            continue;
        }
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
        for (std::int64_t i = 1; i <= n; ++i) {
            bits[static_cast<std::size_t>(i - 1)] =
                static_cast<std::uint8_t>((x >> (n - i)) & 1U);
        }
        words.emplace_back(std::move(bits));
    }
    return words;
}

std::vector<std::string> to_decimal_strings(const std::vector<Count> &counts) {
    std::vector<std::string> out;
    out.reserve(counts.size());
    for (const Count &c : counts) {
        out.push_back(c.get_str());
    }
    return out;
}

} // namespace modcount
