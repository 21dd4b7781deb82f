#include "polcovar/polynomial.hpp"

#include <algorithm>

namespace polcovar {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(Rational c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = std::move(c);
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::falling_factorial(unsigned k) {
  Polynomial result = constant(1);
  for (unsigned j = 0; j < k; ++j) {
    result = result * Polynomial({Rational(-static_cast<std::int64_t>(j)), Rational(1)});
  }
  return result;
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return Polynomial(std::move(out));
}

Rational Polynomial::evaluate(const Rational& n) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(-a);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

}  // namespace polcovar
