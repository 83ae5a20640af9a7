#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pptor {

/// Arbitrary precision integer used for every coefficient, coordinate and order.
using Int = mpz_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Remainder in [0, |m|) for m != 0; returns a unchanged when m == 0.
Int floor_mod(const Int& a, const Int& m);

bool is_prime(const Int& n);

/// Largest k with p^k | n (n != 0).
unsigned valuation(const Int& n, const Int& p);

Int power(const Int& base, unsigned long exponent);

/// Prime factorization of |n| >= 1 by trial division, primes ascending.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

/// Positive divisors of n >= 1, ascending.
std::vector<Int> divisors(const Int& n);

/// Fits in a signed 64-bit integer.
bool fits_int64(const Int& n);
std::int64_t to_int64(const Int& n);

inline std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace pptor
