#pragma once

#include <gmpxx.h>

#include <string>

namespace quatdec {

// Exact rational scalar. mpq_class maintains the canonical form the whole
// library relies on: positive denominator, gcd(|num|, den) = 1, zero stored
// as 0/1. Arithmetic on canonical values stays canonical.
using Rational = mpq_class;
using Integer = mpz_class;

// Builds num/den in canonical form; den must be nonzero.
Rational make_rational(long numerator, long denominator = 1);

bool is_zero(const Rational& r);

// "p" or "p/q" in lowest terms, denominator omitted when 1.
std::string to_string(const Rational& r);

}  // namespace quatdec
