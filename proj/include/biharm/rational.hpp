#pragma once

#include <gmpxx.h>

#include <string>

namespace biharm {

// Exact scalars. mpq_class keeps values canonical (coprime, positive
// denominator) as long as every value enters through make_rational or
// integer construction.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds n/d in canonical form. Throws Error(invalid_argument) if d == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

/// Parses decimal integer strings (as stored in kernel documents).
Rational rational_from_strings(const std::string& num, const std::string& den);

std::string to_string(const Rational& q);

/// Binomial coefficient C(n, r) for n >= 0; zero when r < 0 or r > n.
Integer binomial(long n, long r);

double to_double(const Rational& q);
long double to_long_double(const Rational& q);

} // namespace biharm
