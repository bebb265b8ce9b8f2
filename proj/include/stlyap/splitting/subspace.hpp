#pragma once

#include <string>
#include <vector>

#include "stlyap/exact/matrix.hpp"

namespace stlyap {

/// Rational subspace of ℚⁿ, stored as the nonzero rows of its reduced
/// echelon form (the canonical key).
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<VecQ>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    for (const auto& v : vectors)
      if (v.size() != ambient) fail(ErrorKind::InvalidInput, "vector length does not match the ambient dimension");
    auto e = rref(MatQ::from_rows(vectors));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.rows_.push_back(e.matrix.row(r));
    return s;
  }

  static Subspace span(std::size_t ambient, const std::vector<VecZ>& vectors) {
    std::vector<VecQ> q;
    for (const auto& v : vectors) q.push_back(to_rational(v));
    return span(ambient, q);
  }

  static Subspace full(std::size_t ambient) {
    std::vector<VecQ> rows;
    for (std::size_t i = 0; i < ambient; ++i) {
      VecQ e(ambient, Rational(0));
      e[i] = 1;
      rows.push_back(e);
    }
    return span(ambient, rows);
  }

  std::size_t ambient() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<VecQ>& basis() const noexcept { return rows_; }

  /// Primitive integer vectors spanning the same rational space.
  std::vector<VecZ> integer_basis() const {
    std::vector<VecZ> out;
    for (const auto& r : rows_) out.push_back(primitive_vector(r));
    return out;
  }

  bool contains(const VecQ& v) const { return span(n_, with(v)).dim() == dim(); }
  bool contains(const Subspace& o) const { return sum(*this, o).dim() == dim(); }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    auto rows = a.rows_;
    rows.insert(rows.end(), b.rows_.begin(), b.rows_.end());
    return span(a.n_, rows);
  }

  friend Subspace intersection(const Subspace& a, const Subspace& b) {
    // x = Σ αᵢ aᵢ = Σ βⱼ bⱼ
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.n_);
    MatQ m(a.n_, a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t k = 0; k < a.n_; ++k) m(k, i) = a.rows_[i][k];
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < a.n_; ++k) m(k, a.dim() + j) = -b.rows_[j][k];
    std::vector<VecQ> vecs;
    for (const auto& kv : kernel_Q(m)) {
      VecQ x(a.n_, Rational(0));
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.n_; ++k) x[k] += kv[i] * a.rows_[i][k];
      vecs.push_back(std::move(x));
    }
    return span(a.n_, vecs);
  }

  /// {x : xᵀ·G·s = 0 for all s in this space}
  Subspace annihilator(const MatQ& gram) const {
    if (dim() == 0) return full(n_);
    MatQ m(dim(), n_);
    for (std::size_t i = 0; i < dim(); ++i) {
      // row i: (G·sᵢ)ᵀ, so that row·x = sᵢᵀ·Gᵀ·x = −sᵢᵀ·G·x for alternating G
      auto gs = gram * rows_[i];
      for (std::size_t k = 0; k < n_; ++k) m(i, k) = gs[k];
    }
    return span(n_, kernel_Q(m));
  }

  Subspace image(const MatQ& m) const {
    std::vector<VecQ> imgs;
    for (const auto& r : rows_) imgs.push_back(m * r);
    return span(n_, imgs);
  }

  bool invariant_under(const MatQ& m) const { return image(m) == *this; }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.rows_ < b.rows_;
  }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      s += i ? ", (" : "(";
      for (std::size_t k = 0; k < n_; ++k) s += (k ? "," : "") + stlyap::to_string(rows_[i][k]);
      s += ")";
    }
    return s + ">";
  }

 private:
  std::vector<VecQ> with(const VecQ& v) const {
    auto r = rows_;
    r.push_back(v);
    return r;
  }

  std::size_t n_ = 0;
  std::vector<VecQ> rows_;
};

}  // namespace stlyap
