#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zhs::algebra {

// Arbitrary-precision rational, always kept canonical (gcd 1, positive
// denominator) by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" form; integers are written with an explicit "/1".
std::string to_string(const Rational& r);

// Accepts "p/q", "p" and an optional leading sign. Throws
// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// n/d in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n);

// base^exp for a possibly negative integer exponent.
Rational power(const Rational& base, long exp);

inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace zhs::algebra
