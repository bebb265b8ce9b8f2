#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stlyap/exact/matrix.hpp"

namespace stlyap {

class AlternatingForm {
 public:
  AlternatingForm() = default;
  explicit AlternatingForm(MatZ gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) fail(ErrorKind::InvalidInput, "gram matrix is not square");
    for (std::size_t i = 0; i < gram_.rows(); ++i) {
      if (gram_(i, i) != 0) fail(ErrorKind::InvalidInput, "gram matrix has nonzero diagonal");
      for (std::size_t j = 0; j < i; ++j)
        if (gram_(i, j) != -gram_(j, i)) fail(ErrorKind::InvalidInput, "gram matrix is not antisymmetric");
    }
  }

  const MatZ& gram() const noexcept { return gram_; }
  std::size_t dim() const noexcept { return gram_.rows(); }

  Integer operator()(const VecZ& a, const VecZ& b) const {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] != 0) s += a[i] * gram_(i, j) * b[j];
    }
    return s;
  }

  Rational operator()(const VecQ& a, const VecQ& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] != 0) s += a[i] * Rational(gram_(i, j)) * b[j];
    }
    return s;
  }

  /// Gram matrix of the form on the given vectors.
  AlternatingForm restrict_to(const std::vector<VecZ>& basis) const {
    MatZ g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = (*this)(basis[i], basis[j]);
    return AlternatingForm(std::move(g));
  }

 private:
  MatZ gram_;
};

/// Standard form with blocks [[0,1],[-1,0]].
inline MatZ standard_J(std::size_t g) {
  MatZ j(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    j(2 * k, 2 * k + 1) = 1;
    j(2 * k + 1, 2 * k) = -1;
  }
  return j;
}

inline bool is_symplectic(const MatZ& m) {
  if (m.rows() != m.cols() || m.rows() % 2) return false;
  MatZ j = standard_J(m.rows() / 2);
  return m.transpose() * j * m == j;
}

struct SymplecticReduction {
  std::vector<VecZ> symplectic;  // e1, f1, ..., eg, fg
  std::vector<VecZ> radical;
  std::size_t genus() const { return symplectic.size() / 2; }
  /// Columns e1, f1, ..., eg, fg, c1, ...: a unimodular change of basis.
  MatZ basis_matrix() const {
    std::vector<VecZ> cols = symplectic;
    cols.insert(cols.end(), radical.begin(), radical.end());
    if (cols.empty()) return MatZ{};
    return MatZ::from_columns(cols, cols.front().size());
  }
};

/// Unimodular reduction of an integral alternating form to J ⊕ 0.
inline SymplecticReduction symplectic_reduce(const AlternatingForm& f) {
  std::size_t n = f.dim();
  std::vector<VecZ> pool;
  for (std::size_t i = 0; i < n; ++i) {
    VecZ e(n, Integer(0));
    e[i] = 1;
    pool.push_back(std::move(e));
  }
  SymplecticReduction out;
  auto axpy = [](VecZ& v, const Integer& c, const VecZ& w) {
    if (c == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
  };
  while (true) {
    // pair with smallest nonzero |ω|
    std::size_t bi = 0, bj = 0;
    Integer best = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        Integer w = f(pool[i], pool[j]);
        if (w != 0 && (best == 0 || abs(w) < abs(best))) {
          best = w;
          bi = i;
          bj = j;
        }
      }
    if (best == 0) break;
    // Euclid step: shrink residues against the pair until best divides all
    bool shrunk = false;
    for (std::size_t k = 0; k < pool.size() && !shrunk; ++k) {
      if (k == bi || k == bj) continue;
      Integer wf = f(pool[k], pool[bj]);
      if (wf % best != 0) {
        axpy(pool[k], -floor_div(wf, best), pool[bi]);
        shrunk = true;
        break;
      }
      Integer we = f(pool[k], pool[bi]);
      if (we % best != 0) {
        axpy(pool[k], floor_div(we, best), pool[bj]);
        shrunk = true;
      }
    }
    if (shrunk) continue;
    if (abs(best) != 1)
      fail(ErrorKind::NonUnimodular, "alternating form is not unimodular modulo its radical (pairing " +
                                         best.str() + ")");
    VecZ e = pool[bi], fv = pool[bj];
    if (best < 0) std::swap(e, fv);
    std::vector<VecZ> rest;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (k == bi || k == bj) continue;
      VecZ v = pool[k];
      Integer vf = f(v, fv), ve = f(v, e);
      axpy(v, -vf, e);
      axpy(v, ve, fv);
      rest.push_back(std::move(v));
    }
    out.symplectic.push_back(std::move(e));
    out.symplectic.push_back(std::move(fv));
    pool = std::move(rest);
  }
  out.radical = std::move(pool);
  return out;
}

struct ScaledRank2Basis {
  VecZ b1, b2;
  Integer scale;
};

/// Orders a lattice basis so that ω(b1, b2) > 0; the value is the minimal
/// positive pairing on the lattice.
inline ScaledRank2Basis scaled_symplectic_basis_rank2(const AlternatingForm& f, const VecZ& b1, const VecZ& b2) {
  Integer k = f(b1, b2);
  if (k == 0) fail(ErrorKind::DegenerateForm, "form vanishes on the rank-2 lattice");
  if (k > 0) return {b1, b2, k};
  return {b2, b1, -k};
}

/// Same, for a bare 2×2 gram on the standard basis.
inline ScaledRank2Basis scaled_symplectic_basis_rank2(const AlternatingForm& f) {
  if (f.dim() != 2) fail(ErrorKind::InvalidInput, "rank-2 form expected");
  return scaled_symplectic_basis_rank2(f, VecZ{1, 0}, VecZ{0, 1});
}

}  // namespace stlyap
