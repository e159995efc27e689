#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eulerref {

/// Arbitrary-precision integer used for every permutation count.
using Count = mpz_class;

/// Exact rational, always kept in canonical reduced form with a positive
/// denominator (gmpxx canonicalizes after every arithmetic operation).
using Ratio = mpq_class;

/// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n (n >= 0).
/// A negative n also yields 0; no generalized binomials are needed here.
Count binomial(long n, long k);

Count factorial(long n);

/// base^exp with 0^0 = 1.
Count ipow(long base, unsigned long exp);

/// Rising factorial k(k+1)...(k+m-1); empty product is 1.
Count rising_factorial(long k, unsigned long m);

Ratio make_ratio(const Count& num, const Count& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Ratio& r);
std::string to_string(const Count& c);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Ratio& r, int significant_digits = 12);

}  // namespace eulerref
