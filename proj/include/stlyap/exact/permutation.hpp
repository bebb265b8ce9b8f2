#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "stlyap/error.hpp"

namespace stlyap {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        fail(ErrorKind::InvalidInput, "images do not form a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t d) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  /// 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t d, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 0);
    std::vector<bool> used(d, false);
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        int a = c[k];
        if (a < 0 || static_cast<std::size_t>(a) >= d)
          fail(ErrorKind::InvalidInput, "cycle entry out of range");
        if (used[a]) fail(ErrorKind::InvalidInput, "point repeated across cycles");
        used[a] = true;
        im[a] = c[(k + 1) % c.size()];
      }
    }
    return Permutation(std::move(im));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  int operator[](std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }

  /// Cycles in order of their smallest point, each starting at that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> c;
      for (int p = static_cast<int>(s); !seen[p]; p = images_[p]) {
        seen[p] = true;
        c.push_back(p);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::size_t cycle_count() const { return cycles().size(); }

  std::size_t order() const {
    std::size_t o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, c.size());
    return o;
  }

  /// 1-based cycle notation, fixed points omitted; identity prints "()".
  std::string to_string() const {
    std::string s;
    for (const auto& c : cycles()) {
      if (c.size() == 1) continue;
      s += '(';
      for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k] + 1);
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// (a∘b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) fail(ErrorKind::DegreeMismatch, "composing permutations of different degree");
  std::vector<int> im(a.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = a(b(static_cast<int>(i)));
  return Permutation(std::move(im));
}

inline Permutation power(const Permutation& p, long long k) {
  Permutation base = k < 0 ? p.inverse() : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation acc = Permutation::identity(p.degree());
  while (e) {
    if (e & 1) acc = compose(base, acc);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

/// τ·p·τ⁻¹
inline Permutation conjugate(const Permutation& p, const Permutation& tau) {
  return compose(tau, compose(p, tau.inverse()));
}

inline std::vector<int> orbit_of(int start, const std::vector<Permutation>& gens) {
  std::size_t d = gens.empty() ? 0 : gens.front().degree();
  std::vector<bool> seen(d, false);
  std::vector<int> orbit{start};
  seen[start] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& g : gens) {
      int q = g(orbit[k]);
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
  return orbit;
}

inline bool is_transitive(const std::vector<Permutation>& gens) {
  if (gens.empty()) return true;
  std::size_t d = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != d) fail(ErrorKind::DegreeMismatch, "generators of different degree");
  if (d == 0) return true;
  return orbit_of(0, gens).size() == d;
}

/// The unique τ with τ(0) = target that intertwines each gens1[k] with
/// gens2[k], if one exists. Requires gens1 transitive.
inline std::optional<Permutation> intertwiner_from(int target, const std::vector<Permutation>& gens1,
                                                   const std::vector<Permutation>& gens2) {
  std::size_t d = gens1.front().degree();
  std::vector<int> tau(d, -1), used(d, 0);
  tau[0] = target;
  used[target] = 1;
  std::vector<int> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int i = queue[k];
    for (std::size_t g = 0; g < gens1.size(); ++g) {
      int a = gens1[g](i), b = gens2[g](tau[i]);
      if (tau[a] == -1) {
        if (used[b]) return std::nullopt;
        tau[a] = b;
        used[b] = 1;
        queue.push_back(a);
      } else if (tau[a] != b) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != d) return std::nullopt;
  return Permutation(std::move(tau));
}

/// τ with τ·r1·τ⁻¹ = r2 and τ·u1·τ⁻¹ = u2, trying images of point 0 in order.
inline std::optional<Permutation> simultaneous_conjugacy(const Permutation& r1, const Permutation& u1,
                                                         const Permutation& r2, const Permutation& u2) {
  std::size_t d = r1.degree();
  if (u1.degree() != d || r2.degree() != d || u2.degree() != d)
    fail(ErrorKind::DegreeMismatch, "simultaneous_conjugacy: degree mismatch");
  if (d == 0) return Permutation{};
  std::vector<Permutation> g1{r1, u1}, g2{r2, u2};
  for (std::size_t c = 0; c < d; ++c)
    if (auto tau = intertwiner_from(static_cast<int>(c), g1, g2)) return tau;
  return std::nullopt;
}

/// All permutations commuting with every generator (transitive input).
inline std::vector<Permutation> centralizer(const std::vector<Permutation>& gens) {
  std::vector<Permutation> out;
  if (gens.empty()) return out;
  std::size_t d = gens.front().degree();
  for (std::size_t c = 0; c < d; ++c)
    if (auto tau = intertwiner_from(static_cast<int>(c), gens, gens)) out.push_back(*tau);
  return out;
}

}  // namespace stlyap
