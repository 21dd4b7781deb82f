#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "polcovar/rational.hpp"

namespace polcovar {

/// Univariate polynomial in n with exact rational coefficients.
///
/// Dense storage: coefficients()[i] multiplies n^i. The highest stored
/// coefficient is always nonzero; the zero polynomial stores nothing.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(Rational c);
  /// c * n^power.
  static Polynomial monomial(Rational c, std::size_t power);
  /// n (n-1) ... (n-k+1); the constant 1 for k = 0.
  static Polynomial falling_factorial(unsigned k);

  std::span<const Rational> coefficients() const& { return coeffs_; }
  std::span<const Rational> coefficients() const&& = delete;
  /// Coefficient of n^power (zero past the degree).
  Rational coefficient(std::size_t power) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Polynomial scaled(const Rational& c) const;
  Rational evaluate(const Rational& n) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace polcovar
