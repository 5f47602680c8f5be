#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace symstab {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", "p", and finite decimals such as "0.272" or "-1.5e-3".
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" for integers).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Canonicalised num/den (mpq_class(num, den) alone does not reduce).
Rational ratio(long num, long den);

Integer binomial(long n, long k);
Integer factorial(long n);
Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& q);

// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

// Best approximation with denominator <= max_den (continued-fraction convergents
// and semiconvergents).
Rational best_approximation(double value, long max_den);

// Exact binary value of a finite double.
Rational from_double(double value);

}  // namespace symstab
