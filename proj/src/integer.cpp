#include "pptor/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace pptor {

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int floor_mod(const Int& a, const Int& m) {
    if (m == 0) return a;
    Int r;
    Int am = abs(m);
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

unsigned valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    unsigned k = 0;
    Int m = abs(n);
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++k;
    }
    return k;
}

Int power(const Int& base, unsigned long exponent) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize of zero");
    std::vector<std::pair<Int, unsigned>> out;
    Int m = abs(n);
    for (Int p = 2; p * p <= m; ++p) {
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            unsigned k = 0;
            while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
                m /= p;
                ++k;
            }
            out.emplace_back(p, k);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out{1};
    for (const auto& [p, k] : factorize(n)) {
        const std::size_t base = out.size();
        Int pk = 1;
        for (unsigned e = 1; e <= k; ++e) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool fits_int64(const Int& n) {
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return mpz_fits_slong_p(n.get_mpz_t()) != 0;
}

std::int64_t to_int64(const Int& n) {
    if (!fits_int64(n)) throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
    return n.get_si();
}

}  // namespace pptor
