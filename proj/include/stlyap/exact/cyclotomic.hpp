#pragma once

#include <vector>

#include "stlyap/exact/matrix.hpp"

namespace stlyap {

/// Integer coefficients of Φ_n, lowest degree first.
inline std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  if (n == 0) fail(ErrorKind::InvalidInput, "cyclotomic index must be positive");
  // xⁿ − 1 divided by Φ_e for every proper divisor e
  std::vector<Integer> num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned e = 1; e < n; ++e) {
    if (n % e) continue;
    auto den = cyclotomic_polynomial(e);
    std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      q[k] = num[k + den.size() - 1];  // den is monic
      for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
    }
    num = std::move(q);
  }
  return num;
}

inline MatQ polynomial_of(const MatQ& m, const std::vector<Integer>& coeffs) {
  MatQ acc(m.rows(), m.cols());
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += Rational(coeffs[k]);
  }
  return acc;
}

inline MatQ matrix_power(const MatQ& m, unsigned n) {
  MatQ acc = MatQ::identity(m.rows());
  for (unsigned k = 0; k < n; ++k) acc = acc * m;
  return acc;
}

/// Basis of ker Φ_d(m) for a matrix of order dividing n.
inline std::vector<VecQ> cyclotomic_kernel(const MatQ& m, unsigned n, unsigned d) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidInput, "square matrix expected");
  if (n == 0 || d == 0 || n % d) fail(ErrorKind::InvalidInput, "d must divide n");
  if (matrix_power(m, n) != MatQ::identity(m.rows()))
    fail(ErrorKind::OrderMismatch, "matrix power does not equal the identity");
  return kernel_Q(polynomial_of(m, cyclotomic_polynomial(d)));
}

}  // namespace stlyap
