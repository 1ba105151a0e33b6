#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cakecut {

/// Exact arbitrary-precision rational. Always kept in canonical form.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "a", "a/b" or a finite decimal literal such as "0.125" exactly.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "a/b" (or "a" when the denominator is 1).
std::string to_string(const Rational& value);

/// Decimal rendering for reports. Approximate by nature.
std::string to_decimal(const Rational& value, int digits = 9);

BigInt floor(const Rational& value);

}  // namespace cakecut
