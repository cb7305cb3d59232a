#pragma once

#include <gmpxx.h>

#include <string>

namespace superschur {

// Exact arithmetic throughout; no floating point anywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parse "p/q" or "p" (exact, canonicalized). Throws std::invalid_argument on junk.
Rational rational_from_string(const std::string& s);

/// Serialize as "p/q", always with an explicit denominator ("3" -> "3/1").
std::string rational_to_string(const Rational& r);

Integer factorial(int n);
Integer binomial(int n, int k);

} // namespace superschur
