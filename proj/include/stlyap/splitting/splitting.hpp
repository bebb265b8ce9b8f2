#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stlyap/exact/cyclotomic.hpp"
#include "stlyap/monodromy/homology_rep.hpp"
#include "stlyap/origami/quotients.hpp"
#include "stlyap/splitting/subspace.hpp"

namespace stlyap {

namespace detail {

inline std::vector<std::vector<long long>> fundamental_chains(const SpanningTreeData& t) {
  std::vector<std::vector<long long>> out;
  for (const auto& g : h_generators(t)) out.push_back(edge_counts(t, g));
  return out;
}

/// Fundamental-cycle coordinates of a closed edge chain.
inline VecZ chain_to_tcoords(const SpanningTreeData& t, const std::vector<long long>& chain) {
  VecZ c(t.rank());
  for (std::size_t k = 0; k < t.rank(); ++k) c[k] = chain[t.nontree[k]];
  return c;
}

inline std::vector<long long> tcoords_to_chain(const std::vector<std::vector<long long>>& chains, const VecZ& c) {
  std::vector<long long> out(chains.empty() ? 0 : chains.front().size(), 0);
  for (std::size_t k = 0; k < chains.size(); ++k) {
    if (c[k] == 0) continue;
    long long ck = static_cast<long long>(c[k]);
    for (std::size_t e = 0; e < out.size(); ++e) out[e] += ck * chains[k][e];
  }
  return out;
}

}  // namespace detail

inline MatQ to_q(const MatZ& m) { return to_rational(m); }

inline bool is_invariant(const Subspace& s, const SymplecticRep& rep) {
  for (const auto& g : rep.generators)
    if (!s.invariant_under(to_q(g.matrix))) return false;
  return true;
}

inline void require_invariant(const Subspace& s, const SymplecticRep& rep, const std::string& what) {
  for (const auto& g : rep.generators)
    if (!s.invariant_under(to_q(g.matrix)))
      fail(ErrorKind::NotInvariant, what + " is not preserved by " + g.word.to_string());
}

/// Transfer of H₁ of a quotient into H₁ of the cover: each quotient cycle
/// goes to the sum of the lifts of its edges over the fibers.
inline Subspace pullback_subspace(const SymplecticRep& cover, const QuotientCover& q, bool require_invariance = true) {
  auto tq = graph_and_tree(q.quotient);
  const auto& t = cover.tree;
  std::vector<VecZ> images;
  for (const auto& qchain : detail::fundamental_chains(tq)) {
    std::vector<long long> chain(2 * t.degree());
    for (std::size_t i = 0; i < t.degree(); ++i)
      for (int p : {0, 1}) chain[2 * i + p] = qchain[2 * q.projection[i] + p];
    images.push_back(cover.project(detail::chain_to_tcoords(t, chain)));
  }
  auto s = Subspace::span(cover.dim(), images);
  if (require_invariance) require_invariant(s, cover, "pullback subspace");
  return s;
}

inline Subspace symplectic_complement(const Subspace& s, const SymplecticRep& rep, bool require_invariance = true) {
  auto c = s.annihilator(to_q(standard_J(rep.genus)));
  if (require_invariance) require_invariant(c, rep, "symplectic complement");
  return c;
}

inline std::vector<Permutation> deck_group(const Origami& o) { return centralizer({o.r, o.u}); }

/// Action of a deck transformation on H₁ of the closed surface.
inline MatZ deck_action(const SymplecticRep& rep, const Permutation& tau) {
  const auto& t = rep.tree;
  auto chains = detail::fundamental_chains(t);
  std::size_t n = rep.dim();
  MatZ m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto chain = detail::tcoords_to_chain(chains, rep.basis.col(j));
    std::vector<long long> pushed(chain.size());
    for (std::size_t i = 0; i < t.degree(); ++i)
      for (int p : {0, 1}) pushed[2 * tau(static_cast<int>(i)) + p] = chain[2 * i + p];
    auto col = rep.project(detail::chain_to_tcoords(t, pushed));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

struct IsotypicPiece {
  unsigned order;  // d with Φ_d
  Subspace space;
};

inline std::vector<IsotypicPiece> isotypic_cyclic(const SymplecticRep& rep, const Permutation& tau) {
  if (tau.is_identity()) fail(ErrorKind::InvalidInput, "isotypic splitting needs a nontrivial deck transformation");
  const auto& o = rep.tree.origami;
  if (compose(tau, o.r) != compose(o.r, tau) || compose(tau, o.u) != compose(o.u, tau))
    fail(ErrorKind::InvalidInput, "permutation is not a deck transformation");
  MatQ m = to_q(deck_action(rep, tau));
  unsigned n = static_cast<unsigned>(tau.order());
  std::vector<IsotypicPiece> out;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    out.push_back({d, Subspace::span(rep.dim(), cyclotomic_kernel(m, n, d))});
  }
  return out;
}

/// Finite-index subgroup of the Veech group preserving s, via the action on
/// pairs (coset c, W) ↦ (c·h, ρ(γ_{c,h})⁻¹·W) with γ_{c,h} the Schreier
/// element rep(c)·h·rep(c·h)⁻¹.
inline ModularSubgroup stabilizer_of_subspace(const SymplecticRep& rep, const Subspace& s,
                                              std::size_t max_orbit = default_max_orbit) {
  const auto& g = rep.veech.subgroup;
  std::size_t n = g.index();
  std::vector<MatQ> inv_s(n), inv_t(n);
  for (std::size_t c = 0; c < n; ++c) {
    int ci = static_cast<int>(c);
    for (int h : {1, 2}) {
      int to = g.act(ci, h);
      WordST w = g.rep_words()[c] * WordST({h}) * g.rep_words()[to].inverse();
      MatQ m = to_q(symplectic_inverse(rep.evaluate(w)));
      (h == 1 ? inv_s : inv_t)[c] = std::move(m);
    }
  }
  using State = std::pair<int, Subspace>;
  auto res = orbit_subgroup(
      State{0, s},
      [&](const State& st) { return State{g.sigma_S()(st.first), st.second.image(inv_s[st.first])}; },
      [&](const State& st) { return State{g.sigma_T()(st.first), st.second.image(inv_t[st.first])}; },
      [](const State& st) { return st; }, max_orbit, ErrorKind::OrbitOverflow);
  return res.subgroup;
}

struct RankTwoRep {
  ModularSubgroup domain;
  std::vector<Mat2Z> images;  // per Schreier generator of the domain
  Integer scale = 1;
  VecZ b1, b2;                // lattice basis in symplectic coordinates
};

/// Images of the domain's Schreier generators on the integer lattice of a
/// 2-dimensional invariant subspace, in a basis with ω(b1, b2) = scale > 0.
inline RankTwoRep restrict_to_rank2(const SymplecticRep& rep, const Subspace& s, const ModularSubgroup& domain) {
  if (s.dim() != 2) fail(ErrorKind::InvalidInput, "restrict_to_rank2 needs a 2-dimensional subspace");
  auto lattice = saturate(s.integer_basis());
  AlternatingForm form(standard_J(rep.genus));
  auto sb = scaled_symplectic_basis_rank2(form, lattice[0], lattice[1]);
  RankTwoRep out;
  out.domain = domain;
  out.scale = sb.scale;
  out.b1 = sb.b1;
  out.b2 = sb.b2;
  auto coordinates = [&](const VecZ& v, const std::string& word) {
    Integer a = form(v, sb.b2), b = form(sb.b1, v);
    if (a % sb.scale != 0 || b % sb.scale != 0)
      fail(ErrorKind::NotInvariant, "image under " + word + " leaves the plane");
    a /= sb.scale;
    b /= sb.scale;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (a * sb.b1[i] + b * sb.b2[i] != v[i]) fail(ErrorKind::NotInvariant, "image under " + word + " leaves the plane");
    return std::make_pair(a, b);
  };
  for (const auto& gen : domain.schreier_generators()) {
    if (!rep.veech.subgroup.contains(gen.matrix))
      fail(ErrorKind::NotAMember, "domain generator " + gen.word.to_string() + " is not in the Veech group");
    MatZ m = rep.evaluate(gen.matrix);
    auto [a1, c1] = coordinates(m * sb.b1, gen.word.to_string());
    auto [a2, c2] = coordinates(m * sb.b2, gen.word.to_string());
    out.images.push_back(Mat2Z{a1, a2, c1, c2});
  }
  for (const auto& rel : domain.relators()) {
    Mat2Z p;
    for (auto [k, e] : rel) p = p * (e > 0 ? out.images[k] : out.images[k].inverse());
    if (!p.is_central()) fail(ErrorKind::RelatorViolation, "restricted images violate a relator of the domain");
  }
  return out;
}

}  // namespace stlyap
