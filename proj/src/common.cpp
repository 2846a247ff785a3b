#include "modcount/common.hpp"

namespace modcount {

Count exact_div(const Count &num, const Count &den) {
    Count q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) {
        throw std::logic_error("exact_div: " + num.get_str() + " is not divisible by " +
                               den.get_str());
    }
    return q;
}

Count pow2(std::uint64_t e) {
    Count r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

Count pow_count(const Count &base, std::uint64_t e) {
    Count r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace modcount
