#pragma once

#include <string>

#include "polcovar/polynomial.hpp"
#include "polcovar/rational.hpp"

namespace polcovar {

/// Decimal rendering of exact values.
///
/// The value is rounded to `significant_digits` digits, ties to even, and
/// printed in fixed notation ("2.50", "0.10938") when 1e-5 <= |v| < 1e6 and in
/// scientific notation ("2.0833e16", "-1.5e-7") otherwise. Zero prints as "0".
/// Rounding is decided exactly on the rational value, never through a double.
std::string format_decimal(const Rational& value, int significant_digits);

/// Decimal rendering of sqrt(value) under the same rounding and layout rules.
/// Throws std::domain_error for negative input.
std::string format_sqrt_decimal(const Rational& value, int significant_digits);

/// Evaluates p exactly at n and renders the result with format_decimal.
std::string evaluate_decimal(const Polynomial& p, const BigInt& n, int significant_digits);

}  // namespace polcovar
