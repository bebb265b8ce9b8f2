#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "stlyap/error.hpp"
#include "stlyap/exact/numeric.hpp"
#include "stlyap/exact/permutation.hpp"

namespace stlyap {

struct CoveringParameters {
  int r = 0;
  int d = 1;
  std::vector<int> t;

  bool operator==(const CoveringParameters&) const = default;
};

struct BranchLoop {
  std::string label;  // "0", "1", "inf" or "x1", "x2", ...
  bool cusp = false;
  Permutation sigma;
  bool determined = false;  // fixed by the product relation
};

struct CoveringSpec {
  CoveringParameters params;
  std::vector<BranchLoop> loops;  // order 0, 1, inf, x1..xr

  const BranchLoop& loop(const std::string& label) const {
    for (const auto& l : loops)
      if (l.label == label) return l;
    fail(ErrorKind::InvalidInput, "no loop labelled " + label);
  }
};

struct Certificate {
  int genus = 0;
  int cusps = 0;
  Integer euler = 0;  // of the punctured cover
  Rational lambda = 0;
};

/// Smallest r first, then smallest d (a multiple of p); t balanced.
inline CoveringParameters solve_parameters(const Rational& lambda) {
  if (lambda <= 0 || lambda > 1) fail(ErrorKind::OutOfRange, "exponent " + to_string(lambda) + " outside (0,1]");
  Integer p = numerator_of(lambda), q = denominator_of(lambda);
  if (lambda == 1) return {0, 1, {}};
  for (int r = 1;; ++r) {
    // Σt/d = r + 1 − q/p must lie in [r/d, r]; it is positive once r+1 > q/p.
    Rational target = Rational(r + 1) - make_rational(q, p);
    if (target <= 0) continue;
    // l = d·target ≥ r forces d ≥ r/target; upper bound l ≤ rd holds since target ≤ r.
    for (Integer d = p;; d += p) {
      Rational l = target * Rational(d);
      if (!is_integer(l)) continue;
      Integer li = numerator_of(l);
      if (li < r) continue;
      if (li > Integer(r) * d) break;
      CoveringParameters out;
      out.r = r;
      out.d = static_cast<int>(d);
      int base = static_cast<int>(li / r), extra = static_cast<int>(li % r);
      for (int i = 0; i < r; ++i) out.t.push_back(base + (i < extra ? 1 : 0));
      return out;
    }
  }
}

inline void check_parameters(const CoveringParameters& c) {
  if (c.d < 1 || c.r < 0 || static_cast<int>(c.t.size()) != c.r)
    fail(ErrorKind::InvalidParameters, "need d >= 1 and exactly r fiber sizes");
  for (int ti : c.t)
    if (ti < 1 || ti > c.d) fail(ErrorKind::InvalidParameters, "fiber size " + std::to_string(ti) + " not in [1,d]");
}

inline CoveringSpec build_covering(const CoveringParameters& c) {
  check_parameters(c);
  std::size_t d = static_cast<std::size_t>(c.d);
  std::vector<int> full(d);
  for (std::size_t i = 0; i < d; ++i) full[i] = static_cast<int>(i);
  Permutation s_inf = Permutation::from_cycles(d, {full});
  std::vector<Permutation> xs;
  for (int ti : c.t) {
    std::vector<int> cyc(full.begin(), full.begin() + (c.d - ti + 1));
    xs.push_back(Permutation::from_cycles(d, {cyc}));
  }
  Permutation prod = s_inf;
  for (const auto& x : xs) prod = compose(prod, x);
  CoveringSpec spec;
  spec.params = c;
  spec.loops.push_back({"0", true, Permutation::identity(d), false});
  spec.loops.push_back({"1", true, prod.inverse(), true});
  spec.loops.push_back({"inf", true, s_inf, false});
  for (std::size_t i = 0; i < xs.size(); ++i) spec.loops.push_back({"x" + std::to_string(i + 1), false, xs[i], false});
  return spec;
}

inline Certificate certify(const CoveringSpec& spec) {
  const auto& c = spec.params;
  check_parameters(c);
  if (spec.loops.size() != static_cast<std::size_t>(c.r) + 3) fail(ErrorKind::InconsistentSpec, "wrong number of loops");
  Permutation prod = Permutation::identity(static_cast<std::size_t>(c.d));
  std::vector<Permutation> all;
  for (const auto& l : spec.loops) {
    if (l.sigma.degree() != static_cast<std::size_t>(c.d)) fail(ErrorKind::InconsistentSpec, "loop " + l.label + " has wrong degree");
    all.push_back(l.sigma);
  }
  // Loops are ordered so that σ_∞ σ_x1 … σ_xr σ_0 σ_1 = 1.
  for (std::size_t i = 2; i < all.size(); ++i) prod = compose(prod, all[i]);
  prod = compose(prod, compose(all[0], all[1]));
  if (!prod.is_identity()) fail(ErrorKind::InconsistentSpec, "loop product is not the identity");
  if (!is_transitive(all)) fail(ErrorKind::InconsistentSpec, "covering is not connected");
  Integer ramification = 0;
  int s = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    int cycles = static_cast<int>(all[i].cycle_count());
    ramification += c.d - cycles;
    if (spec.loops[i].cusp) s += cycles;
    else if (cycles != c.t[i - 3]) fail(ErrorKind::InconsistentSpec, "cycle count of " + spec.loops[i].label + " differs from t");
  }
  Integer chi_closed = Integer(2 * c.d) - ramification;
  if (chi_closed % 2 != 0 || chi_closed > 2) fail(ErrorKind::InconsistentSpec, "odd Euler characteristic");
  Certificate cert;
  cert.genus = static_cast<int>((2 - chi_closed) / 2);
  cert.cusps = s;
  cert.euler = chi_closed - s;
  Integer sum_t = 0;
  for (int ti : c.t) sum_t += ti;
  Integer expected = -Integer(c.d) * (c.r + 1) + sum_t;
  if (cert.euler != expected) fail(ErrorKind::InconsistentSpec, "Euler characteristic disagrees with the parameter count");
  if (-cert.euler != Integer(2 * cert.genus - 2 + s)) fail(ErrorKind::InconsistentSpec, "Riemann-Hurwitz identity fails");
  cert.lambda = make_rational(Integer(c.d), -expected);
  return cert;
}

struct SweepRow {
  Rational requested;
  bool constant_family = false;  // λ = 0: no covering
  CoveringParameters params;
  Certificate certificate;
};

/// All p/q in [0,1] with q ≤ n, ordered by q then p.
inline std::vector<SweepRow> sweep(int n) {
  std::vector<SweepRow> rows;
  SweepRow zero;
  zero.constant_family = true;
  rows.push_back(zero);
  for (int q = 1; q <= n; ++q)
    for (int p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      SweepRow row;
      row.requested = make_rational(Integer(p), Integer(q));
      row.params = solve_parameters(row.requested);
      row.certificate = certify(build_covering(row.params));
      if (row.certificate.lambda != row.requested)
        fail(ErrorKind::InconsistentSpec, "round trip of " + to_string(row.requested) + " gave " + to_string(row.certificate.lambda));
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace stlyap
