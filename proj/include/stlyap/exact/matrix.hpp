#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stlyap/exact/numeric.hpp"

namespace stlyap {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(ErrorKind::InvalidInput, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) fail(ErrorKind::InvalidInput, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t height) {
    Matrix m(height, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != height) fail(ErrorKind::InvalidInput, "column height mismatch");
      for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == 0; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::InvalidInput, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) fail(ErrorKind::InvalidInput, "matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (v[j] != 0) out[i] += a(i, j) * v[j];
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::InvalidInput, "matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::InvalidInput, "matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }

  Matrix operator-() const {
    Matrix n = *this;
    for (auto& v : n.data_) v = -v;
    return n;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatZ = Matrix<Integer>;
using MatQ = Matrix<Rational>;
using VecZ = std::vector<Integer>;
using VecQ = std::vector<Rational>;

inline MatQ to_rational(const MatZ& m) {
  MatQ q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

inline VecQ to_rational(const VecZ& v) { return VecQ(v.begin(), v.end()); }

inline bool is_integral(const MatQ& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

inline MatZ to_integer(const MatQ& m) {
  MatZ z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) fail(ErrorKind::InvalidInput, "matrix entry is not integral");
      z(i, j) = numerator_of(m(i, j));
    }
  return z;
}

/// Clears denominators and divides out the content, keeping the sign of the
/// first nonzero entry positive. The zero vector maps to itself.
inline VecZ primitive_vector(const VecQ& v) {
  Integer den = 1;
  for (const auto& q : v) den = lcm(den, denominator_of(q));
  VecZ z(v.size());
  Integer content = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    z[i] = numerator_of(v[i] * den);
    content = gcd(content, z[i]);
  }
  if (content == 0) return z;
  for (auto& x : z) x /= content;
  auto first = std::find_if(z.begin(), z.end(), [](const Integer& x) { return x != 0; });
  if (first != z.end() && *first < 0)
    for (auto& x : z) x = -x;
  return z;
}

struct EchelonForm {
  MatQ matrix;                       // reduced row echelon form, zero rows kept at the bottom
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

inline EchelonForm rref(MatQ m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead, j));
    Rational inv = 1 / m(lead, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(lead, j);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const MatQ& m) { return rref(m).pivots.size(); }

/// Right kernel basis: one vector per free column, read off the reduced
/// echelon form, with a 1 in the free position.
inline std::vector<VecQ> kernel_Q(const MatQ& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<VecQ> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VecQ v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.matrix(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<MatQ> inverse(const MatQ& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  MatQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  MatQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.matrix(i, n + j);
  return inv;
}

inline MatZ inverse_unimodular(const MatZ& m) {
  auto inv = inverse(to_rational(m));
  if (!inv || !is_integral(*inv)) fail(ErrorKind::NonUnimodular, "matrix is not invertible over the integers");
  return to_integer(*inv);
}

inline Rational determinant(const MatQ& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  MatQ a = m;
  std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

inline Integer determinant(const MatZ& m) { return numerator_of(determinant(to_rational(m))); }

/// Integer basis of (Q-span of the given vectors) ∩ Z^n.
///
/// Column-Hermite reduction V·W = [H | 0] with W unimodular; the first k rows
/// of W⁻¹ are then a primitive system with the same rational span.
inline std::vector<VecZ> saturate(const std::vector<VecZ>& vectors) {
  if (vectors.empty()) return {};
  std::size_t n = vectors.front().size();
  std::vector<VecZ> independent;
  for (const auto& v : vectors) {
    std::vector<VecQ> rows;
    for (const auto& u : independent) rows.push_back(to_rational(u));
    rows.push_back(to_rational(v));
    if (rank(MatQ::from_rows(rows)) == rows.size()) independent.push_back(v);
  }
  std::size_t k = independent.size();
  MatZ v = MatZ::from_rows(independent);
  MatZ winv = MatZ::identity(n);
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < k; ++i) std::swap(v(i, a), v(i, b));
    for (std::size_t j = 0; j < n; ++j) std::swap(winv(a, j), winv(b, j));
  };
  // col_a -= q * col_b  <=>  row_b(W⁻¹) += q * row_a(W⁻¹)
  auto sub_col = [&](std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t i = 0; i < k; ++i) v(i, a) -= q * v(i, b);
    for (std::size_t j = 0; j < n; ++j) winv(b, j) += q * winv(a, j);
  };
  for (std::size_t r = 0; r < k; ++r) {
    // Euclid across columns r..n-1 of row r until a single nonzero remains.
    while (true) {
      std::size_t best = n;
      for (std::size_t c = r; c < n; ++c)
        if (v(r, c) != 0 && (best == n || abs(v(r, c)) < abs(v(r, best)))) best = c;
      if (best == n) fail(ErrorKind::InvalidInput, "saturate: dependent vectors");
      if (best != r) swap_cols(r, best);
      bool done = true;
      for (std::size_t c = r + 1; c < n; ++c) {
        if (v(r, c) == 0) continue;
        sub_col(c, r, floor_div(v(r, c), v(r, r)));
        if (v(r, c) != 0) done = false;
      }
      if (done) break;
    }
  }
  std::vector<VecZ> out;
  for (std::size_t r = 0; r < k; ++r) out.push_back(winv.row(r));
  return out;
}

}  // namespace stlyap
