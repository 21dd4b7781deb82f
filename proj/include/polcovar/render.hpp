#pragma once

#include <string>
#include <vector>

#include "polcovar/polynomial.hpp"

namespace polcovar {

/// "1/48 n^3 - 1/16 n^2 + 1/24 n". Unit coefficients are omitted on
/// non-constant terms; the zero polynomial renders as "0".
std::string render_human(const Polynomial& p);

/// Two-row numerator/denominator encoding, highest degree first:
///   a_m,...,a_1,a_0
///   b_m,...,b_1,b_0
/// Each a_i/b_i in lowest terms with b_i > 0; absent terms are 0/1. The zero
/// polynomial is the single column 0 / 1.
struct MatrixEncoding {
  std::vector<BigInt> numerators;
  std::vector<BigInt> denominators;
};

MatrixEncoding to_matrix(const Polynomial& p);

/// Both rows, comma separated, each terminated by '\n'.
std::string render_matrix_csv(const Polynomial& p);

}  // namespace polcovar
