#include "polcovar/decimal.hpp"

#include <stdexcept>

namespace polcovar {
namespace {

BigInt pow10(int exponent) {
  BigInt r = 1;
  for (int i = 0; i < exponent; ++i) r *= 10;
  return r;
}

int digit_count(const BigInt& positive) { return static_cast<int>(positive.str().size()); }

// floor(log10(num/den)) for num, den > 0.
int floor_log10(const BigInt& num, const BigInt& den) {
  int e = digit_count(num) - digit_count(den);
  bool at_least = e >= 0 ? num >= den * pow10(e) : num * pow10(-e) >= den;
  return at_least ? e : e - 1;
}

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// Scales num/den by 10^shift, splitting the factor between the two sides.
void scale_by_pow10(BigInt& num, BigInt& den, int shift) {
  if (shift >= 0) {
    num *= pow10(shift);
  } else {
    den *= pow10(-shift);
  }
}

struct Rounded {
  BigInt significand;  // exactly `digits` decimal digits
  int exponent;        // value ~= significand * 10^(exponent - digits + 1)
};

// Round-half-even of num/den to an integer.
BigInt round_quotient(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  BigInt twice_rem = 2 * (num - q * den);
  if (twice_rem > den || (twice_rem == den && boost::multiprecision::bit_test(q, 0))) ++q;
  return q;
}

Rounded round_value(const BigInt& num, const BigInt& den, int digits) {
  int e = floor_log10(num, den);
  BigInt n = num;
  BigInt d = den;
  scale_by_pow10(n, d, digits - 1 - e);
  BigInt q = round_quotient(n, d);
  if (q == pow10(digits)) {
    q /= 10;
    ++e;
  }
  return {q, e};
}

Rounded round_sqrt(const BigInt& num, const BigInt& den, int digits) {
  int e = floor_div2(floor_log10(num, den));
  BigInt n = num;
  BigInt d = den;
  scale_by_pow10(n, d, 2 * (digits - 1 - e));
  BigInt q = boost::multiprecision::sqrt(BigInt(n / d));
  // sqrt(n/d) >= q + 1/2  <=>  4n >= (2q+1)^2 d; equality is an exact tie.
  BigInt lhs = 4 * n;
  BigInt rhs = (2 * q + 1) * (2 * q + 1) * d;
  if (lhs > rhs || (lhs == rhs && boost::multiprecision::bit_test(q, 0))) ++q;
  if (q == pow10(digits)) {
    q /= 10;
    ++e;
  }
  return {q, e};
}

std::string layout(const Rounded& r, int digits, bool negative) {
  std::string s = r.significand.str();
  std::string out = negative ? "-" : "";
  if (r.exponent >= 6 || r.exponent < -5) {
    out += s.substr(0, 1);
    if (digits > 1) out += "." + s.substr(1);
    out += "e" + std::to_string(r.exponent);
  } else if (r.exponent >= digits - 1) {
    out += s + std::string(static_cast<std::size_t>(r.exponent - digits + 1), '0');
  } else if (r.exponent >= 0) {
    auto point = static_cast<std::size_t>(r.exponent + 1);
    out += s.substr(0, point) + "." + s.substr(point);
  } else {
    out += "0." + std::string(static_cast<std::size_t>(-r.exponent - 1), '0') + s;
  }
  return out;
}

void check_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("significant digits must be at least 1");
}

}  // namespace

std::string format_decimal(const Rational& value, int significant_digits) {
  check_digits(significant_digits);
  if (value.is_zero()) return "0";
  BigInt num = boost::multiprecision::abs(value.numerator());
  return layout(round_value(num, value.denominator(), significant_digits), significant_digits,
                value.sign() < 0);
}

std::string format_sqrt_decimal(const Rational& value, int significant_digits) {
  check_digits(significant_digits);
  if (value.sign() < 0) throw std::domain_error("square root of negative value " + value.to_string());
  if (value.is_zero()) return "0";
  return layout(round_sqrt(value.numerator(), value.denominator(), significant_digits),
                significant_digits, false);
}

std::string evaluate_decimal(const Polynomial& p, const BigInt& n, int significant_digits) {
  return format_decimal(p.evaluate(Rational(n)), significant_digits);
}

}  // namespace polcovar
