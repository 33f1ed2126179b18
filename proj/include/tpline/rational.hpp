#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tpline {

// mpq_class keeps every result of arithmetic in lowest terms with a
// positive denominator; values built from raw parts go through
// make_rational() so the same holds everywhere.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "p/q" and "-p/q" (optional surrounding whitespace).
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

int sign(const Rational& value);

// Exact square root when value is the square of a rational.
bool rational_sqrt(const Rational& value, Rational& root);

double to_double(const Rational& value);

}  // namespace tpline
