#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kfock {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Floats and q = 0 are rejected.
/// The result is canonical.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Canonical p/q; q must be nonzero.
Rational frac(long p, long q);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// r^e for a non-negative exponent.
Rational power(const Rational& r, unsigned e);

}  // namespace kfock
