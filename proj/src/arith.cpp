#include "modcount/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace modcount {

namespace {

void require_positive(std::int64_t n, const char *what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": argument must be >= 1, got " +
                                    std::to_string(n));
    }
}

Factorization trial_division(std::int64_t n) {
    Factorization f;
    f.value = n;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; p += (p == 2) ? 1 : 2) {
        if (rest % p != 0) {
            continue;
        }
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.primes.push_back({p, e});
    }
    if (rest > 1) {
        f.primes.push_back({rest, 1});
    }
    return f;
}

} // namespace

const Factorization &ArithContext::factorize(std::int64_t n) {
    std::lock_guard lock(mutex_);
    return factorize_locked(n);
}

const Factorization &ArithContext::factorize_locked(std::int64_t n) {
    require_positive(n, "factorize");
    auto it = factorizations_.find(n);
    if (it == factorizations_.end()) {
        it = factorizations_.emplace(n, trial_division(n)).first;
    }
    return it->second;
}

const std::vector<std::int64_t> &ArithContext::divisors(std::int64_t n) {
    std::lock_guard lock(mutex_);
    require_positive(n, "divisors");
    auto it = divisor_lists_.find(n);
    if (it == divisor_lists_.end()) {
        const Factorization &f = factorize_locked(n);
        std::vector<std::int64_t> divs = {1};
        for (const auto &[prime, exponent] : f.primes) {
            const std::size_t base_count = divs.size();
            std::int64_t pk = 1;
            for (int e = 1; e <= exponent; ++e) {
                pk *= prime;
                for (std::size_t i = 0; i < base_count; ++i) {
                    divs.push_back(divs[i] * pk);
                }
            }
        }
        std::sort(divs.begin(), divs.end());
        it = divisor_lists_.emplace(n, std::move(divs)).first;
    }
    return it->second;
}

int ArithContext::mobius(std::int64_t n) {
    std::lock_guard lock(mutex_);
    require_positive(n, "mobius");
    auto it = mobius_values_.find(n);
    if (it == mobius_values_.end()) {
        const Factorization &f = factorize_locked(n);
        int mu = (f.primes.size() % 2 == 0) ? 1 : -1;
        for (const auto &[prime, exponent] : f.primes) {
            if (exponent >= 2) {
                mu = 0;
                break;
            }
        }
        it = mobius_values_.emplace(n, mu).first;
    }
    return it->second;
}

std::int64_t ArithContext::euler_phi(std::int64_t n) {
    std::lock_guard lock(mutex_);
    return euler_phi_locked(n);
}

std::int64_t ArithContext::euler_phi_locked(std::int64_t n) {
    require_positive(n, "euler_phi");
    auto it = phi_values_.find(n);
    if (it == phi_values_.end()) {
        const Factorization &f = factorize_locked(n);
        std::int64_t phi = 1;
        for (const auto &[prime, exponent] : f.primes) {
            std::int64_t pk = 1;
            for (int e = 1; e < exponent; ++e) {
                pk *= prime;
            }
            phi *= pk * (prime - 1);
        }
        it = phi_values_.emplace(n, phi).first;
    }
    return it->second;
}

std::int64_t gcd_with_modulus(std::int64_t m, std::int64_t n) {
    std::int64_t r = m % n;
    if (r < 0) {
        r += n;
    }
    return std::gcd(r, n); // gcd(0, n) = n
}

std::int64_t ramanujan_sum(ArithContext &ctx, std::int64_t n, std::int64_t m) {
    require_positive(n, "ramanujan_sum");
    const std::int64_t g = gcd_with_modulus(m, n);
    std::int64_t sum = 0;
    for (std::int64_t d : ctx.divisors(g)) {
        sum += static_cast<std::int64_t>(ctx.mobius(n / d)) * d;
    }
    return sum;
}

std::int64_t von_sterneck(ArithContext &ctx, std::int64_t n, std::int64_t m) {
    require_positive(n, "von_sterneck");
    const std::int64_t g = gcd_with_modulus(m, n);
    const std::int64_t t = n / g;
    const std::int64_t phi_n = ctx.euler_phi(n);
    const std::int64_t phi_t = ctx.euler_phi(t);
    if (phi_n % phi_t != 0) {
        throw std::logic_error("von_sterneck: phi(" + std::to_string(n) +
                               ") not divisible by phi(" + std::to_string(t) + ")");
    }
    return (phi_n / phi_t) * ctx.mobius(t);
}

Count binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be >= 0, got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    Count r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Count binomial_ratio(std::int64_t n, std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("binomial_ratio: zero denominator");
    }
    if (num % den != 0) {
        return 0;
    }
    return binomial(n, num / den);
}

Count factorial(std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: n must be >= 0, got " + std::to_string(n));
    }
    Count r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

} // namespace modcount
