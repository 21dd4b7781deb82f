#include "polcovar/render.hpp"

#include <sstream>

namespace polcovar {

std::string render_human(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coefficients();
  for (int power = p.degree(); power >= 0; --power) {
    const Rational& c = coeffs[static_cast<std::size_t>(power)];
    if (c.is_zero()) continue;

    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }

    const Rational magnitude = negative ? -c : c;
    std::string term;
    if (power == 0 || magnitude != Rational(1)) term = magnitude.to_string();
    if (power > 0) {
      if (!term.empty()) term += ' ';
      term += power == 1 ? "n" : "n^" + std::to_string(power);
    }
    out += term;
  }
  return out;
}

MatrixEncoding to_matrix(const Polynomial& p) {
  MatrixEncoding m;
  if (p.is_zero()) {
    m.numerators.emplace_back(0);
    m.denominators.emplace_back(1);
    return m;
  }
  const auto coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    m.numerators.push_back(it->numerator());
    m.denominators.push_back(it->denominator());
  }
  return m;
}

std::string render_matrix_csv(const Polynomial& p) {
  const auto m = to_matrix(p);
  std::ostringstream out;
  auto row = [&out](const std::vector<BigInt>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) out << ',';
      out << values[i];
    }
    out << '\n';
  };
  row(m.numerators);
  row(m.denominators);
  return out.str();
}

}  // namespace polcovar
