#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace geoset {

// Exact arbitrary-precision rational scalar. Values are always kept in
// canonical reduced form with a positive denominator.
using Rational = mpq_class;

// Builds num/den in canonical form. den must be nonzero.
Rational make_rational(long num, long den = 1);

// Parses "num" or "num/den" (optional leading '-', den > 0 after reduction).
// Throws ParseError on anything else.
Rational rational_from_string(const std::string& text);

// Canonical formatting: "num" when the denominator is 1, else "num/den".
std::string to_string(const Rational& value);

int sign(const Rational& value);

// Smallest integer >= value.
long ceil_to_long(const Rational& value);

// Decimal string with at most `digits` fractional digits, rounding half away
// from zero; trailing zeros and a trailing '.' are trimmed. Used only at
// emission boundaries (SVG, tables); all internal math stays rational.
std::string to_decimal_string(const Rational& value, int digits = 9);

}  // namespace geoset
