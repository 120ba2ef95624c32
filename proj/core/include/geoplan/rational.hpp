#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geoplan {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "p/q", "-p/q" and finite decimals such as "0.125" or "-3.5".
// Decimals convert exactly through a power-of-ten denominator.
Rational parse_rational(std::string_view text);

// Comma separated list of rationals, e.g. "1/2,0.3".
std::vector<Rational> parse_rational_list(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

Rational make_rational(long num, long den = 1);

Integer floor(const Rational& q);
// q - floor(q), always in [0,1).
Rational frac(const Rational& q);
Rational abs(const Rational& q);

double to_double(const Rational& q);

// Exact square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

// Dyadic rational nearest to a double (exact for finite inputs).
Rational from_double(double value);

} // namespace geoplan
