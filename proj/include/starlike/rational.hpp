#pragma once

#include <gmpxx.h>

#include <string>

namespace starlike {

// Exact rational arithmetic for diagonalization and bisection. GMP keeps
// values in canonical form (reduced, positive denominator) through all
// arithmetic operators; only explicit num/den construction needs a
// canonicalize() call, which the helpers below take care of.
using Rational = mpq_class;
using BigInt = mpz_class;

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

// Accepts "p", "p/q", plain decimals ("0.25") and scientific notation
// ("1e-6", "2.5e3"). The result is exact. Throws std::invalid_argument
// on anything else, including a zero denominator.
Rational parse_rational(const std::string& text);

// value / 2^bits
Rational dyadic(long value, unsigned bits);

// Fixed-point rendering with `digits` fractional digits, rounding half away
// from zero. For labeled approximations only; certified values are emitted
// via to_string.
std::string decimal_string(const Rational& value, int digits);

}  // namespace starlike
