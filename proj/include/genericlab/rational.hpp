#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace genericlab {

/// Exact arbitrary-precision rational. Every measure, arc endpoint and LP
/// coefficient in the library is one of these.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q", an integer, or a finite decimal such as "-0.125" exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", including integers ("3/1").
std::string to_fraction_string(const Rational& q);

/// Fixed-point decimal rendering, rounded half away from zero.
std::string to_decimal_string(const Rational& q, int places = 6);

double to_double(const Rational& q);

Integer floor(const Rational& q);

/// Fractional part in [0, 1).
Rational frac(const Rational& q);

/// Distance to the nearest integer, in [0, 1/2].
Rational dist_to_integer(const Rational& q);

Rational abs(const Rational& q);

}  // namespace genericlab
