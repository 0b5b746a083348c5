#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace freedf {

/// Exact arbitrary-precision rational. Always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical wire form "p/q", q > 0, gcd(p, q) = 1. Integers render as "p/1".
std::string to_string(const Rational& value);

/// Accepts "p/q" or "p". With `allow_decimal`, also plain decimal and
/// scientific literals ("0.125", "-3e-2"), converted exactly.
Rational parse_rational(std::string_view text, bool allow_decimal = false);

Rational power(const Rational& base, unsigned exponent);
Integer power(long base, unsigned exponent);

/// n (n-1) ... (n-k+1); zero when k > n.
Integer falling_factorial(long n, long k);

Integer factorial(long k);

}  // namespace freedf
