#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace affex {

/// Exact rational scalar. Values are kept canonical (lowest terms, positive
/// denominator); arithmetic never rounds.
using Rational = mpq_class;

/// Canonical rational from a numerator/denominator pair. Throws Error on a
/// zero denominator.
Rational rational(long numerator, long denominator = 1);

/// Parses "p" or "p/q" (optional leading minus, decimal digits only).
/// Throws ParseError on anything else, including q = 0.
Rational rational_from_string(std::string_view text);

/// "p" or "p/q"; the denominator is omitted when it is 1.
std::string to_string(const Rational& value);

/// Decimal rendering with the given number of fractional digits, rounded
/// half away from zero. Display only; never feeds back into arithmetic.
std::string to_decimal_string(const Rational& value, int digits);

}  // namespace affex
