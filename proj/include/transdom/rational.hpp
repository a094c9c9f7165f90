#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace transdom {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses a decimal literal such as "-12", "3.25", ".5" or "1.5e-3" into an exact rational.
/// Throws Error(ParseError) on anything else.
Rational parse_decimal(std::string_view text);

/// "p/q" in lowest terms; integers render as "p/1".
std::string to_fraction_string(const Rational& r);

Rational parse_fraction(std::string_view text);

BigInt binomial_pascal(unsigned n, unsigned k);
BigInt binomial_multiplicative(unsigned n, unsigned k);

}  // namespace transdom
