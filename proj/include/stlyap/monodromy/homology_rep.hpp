#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stlyap/monodromy/aut2.hpp"
#include "stlyap/monodromy/graph.hpp"
#include "stlyap/veech/veech.hpp"

namespace stlyap {

/// Conjugates a by a tree path so that the images of all u_j fix square 0.
inline Aut2 stabilize_H(const Aut2& a, const SpanningTreeData& t) {
  const Origami& o = t.origami;
  auto gens = h_generators(t);
  std::vector<FreeWord> images;
  for (const auto& g : gens) images.push_back(a(g));
  for (std::size_t s = 0; s < o.degree(); ++s) {
    bool ok = true;
    for (const auto& w : images)
      if (w.trace(static_cast<int>(s), o.r, o.u) != static_cast<int>(s)) {
        ok = false;
        break;
      }
    if (ok) return conjugate_by(t.path[s], a);
  }
  fail(ErrorKind::NotInVeechGroup, "automorphism " + a.to_string() + " does not normalize the origami subgroup");
}

inline Aut2 stabilize_H(const Aut2& a, const Origami& o) { return stabilize_H(a, graph_and_tree(o)); }

/// Column j: non-tree edge counts of a(u_j) traced from square 0.
inline MatZ rewrite_action(const Aut2& a, const SpanningTreeData& t) {
  auto gens = h_generators(t);
  std::size_t n = gens.size();
  MatZ m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    int end = 0;
    auto c = edge_counts(t, a(gens[j]), 0, &end);
    if (end != 0) fail(ErrorKind::PathNotClosed, "image of u_" + std::to_string(j + 1) + " does not return to square 1");
    for (std::size_t k = 0; k < n; ++k) m(k, j) = c[t.nontree[k]];
  }
  return m;
}

/// Inverse of a J-symplectic matrix, −J·Mᵀ·J.
inline MatZ symplectic_inverse(const MatZ& m) {
  MatZ j = standard_J(m.rows() / 2);
  return -(j * m.transpose() * j);
}

/// Inverse transpose: the action on cohomology.
inline MatZ dualize(const MatZ& m) { return inverse_unimodular(m).transpose(); }

struct RepGenerator {
  WordST word;
  Mat2Z matrix2;
  MatZ full;    // on H₁ of the punctured surface, fundamental-cycle basis
  MatZ matrix;  // on H₁ of the closed surface, symplectic basis
};

struct SymplecticRep {
  VeechGroup veech;
  SpanningTreeData tree;
  AlternatingForm gram;
  SymplecticReduction reduction;
  MatZ basis, basis_inverse;  // columns e1, f1, …, c1, …
  std::size_t genus = 1;
  std::vector<RepGenerator> generators;  // parallel to the Veech Schreier generators
  std::optional<RepGenerator> minus_identity;

  std::size_t dim() const { return 2 * genus; }

  /// Symplectic-basis coordinates of a class given in the fundamental-cycle basis.
  VecZ project(const VecZ& t_coords) const {
    VecZ full = basis_inverse * t_coords;
    return VecZ(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(dim()));
  }

  /// Action of an arbitrary element of the Veech group, through the
  /// Schreier generators; defined projectively when −I acts trivially on
  /// the origami class but is not itself an element.
  MatZ evaluate(const Mat2Z& m) const {
    const auto& sub = veech.subgroup;
    auto rw = sub.rewrite(m);
    MatZ acc = MatZ::identity(dim());
    Mat2Z prod;
    for (auto [k, e] : rw.letters) {
      const auto& g = generators[k];
      acc = acc * (e > 0 ? g.matrix : symplectic_inverse(g.matrix));
      prod = prod * (e > 0 ? g.matrix2 : g.matrix2.inverse());
    }
    if (prod != m && minus_identity) acc = acc * minus_identity->matrix;
    return acc;
  }

  MatZ evaluate(const WordST& w) const { return evaluate(word_to_matrix(w)); }
};

/// Lift, stabilize and rewrite one Veech group element.
inline RepGenerator pipeline_generator(const WordST& w, const SpanningTreeData& t, const MatZ& basis_inverse,
                                       const MatZ& basis, std::size_t genus) {
  RepGenerator g;
  g.word = w;
  g.matrix2 = word_to_matrix(w);
  Aut2 a = stabilize_H(lift_to_aut(w), t);
  g.full = rewrite_action(a, t);
  MatZ conj = basis_inverse * g.full * basis;
  std::size_t n = 2 * genus;
  g.matrix = MatZ(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.matrix(i, j) = conj(i, j);
  return g;
}

inline SymplecticRep homology_rep(const Origami& o, const VeechGroup& v) {
  SymplecticRep rep;
  rep.veech = v;
  rep.tree = graph_and_tree(o);
  rep.gram = intersection_gram(rep.tree);
  rep.reduction = symplectic_reduce(rep.gram);
  rep.genus = rep.reduction.genus();
  rep.basis = rep.reduction.basis_matrix();
  rep.basis_inverse = inverse_unimodular(rep.basis);
  for (const auto& [w, m] : v.schreier_gens) {
    rep.generators.push_back(pipeline_generator(w, rep.tree, rep.basis_inverse, rep.basis, rep.genus));
    if (!is_symplectic(rep.generators.back().matrix))
      fail(ErrorKind::NonUnimodular, "generator " + w.to_string() + " does not act symplectically");
  }
  if (v.contains_minus_identity)
    rep.minus_identity = pipeline_generator(WordST({1, 1}), rep.tree, rep.basis_inverse, rep.basis, rep.genus);
  return rep;
}

inline SymplecticRep homology_rep(const Origami& o) { return homology_rep(o, veech_group(o)); }

/// Sums of the horizontal and of the vertical fundamental cycles.
inline std::pair<VecZ, VecZ> tautological_cycles(const SpanningTreeData& t) {
  VecZ h(t.rank(), Integer(0)), v(t.rank(), Integer(0));
  for (std::size_t k = 0; k < t.rank(); ++k) (t.nontree[k] % 2 == 0 ? h : v)[k] = 1;
  return {h, v};
}

/// (h, v) in symplectic coordinates.
inline std::vector<VecZ> tautological_plane(const SymplecticRep& rep) {
  auto [h, v] = tautological_cycles(rep.tree);
  return {rep.project(h), rep.project(v)};
}

}  // namespace stlyap
