#include <gtest/gtest.h>

#include "stlyap/analysis.hpp"

using namespace stlyap;

namespace {

Mat2Z image_of(const RankTwoRep& r, const std::string& word) {
  const auto& gens = r.domain.schreier_generators();
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (gens[k].word.to_string() == word) return r.images[k];
  ADD_FAILURE() << "no generator " << word;
  return {};
}

}  // namespace

TEST(Subspace, SumIntersectionAnnihilator) {
  auto a = Subspace::span(4, std::vector<VecZ>{{1, 0, 0, 0}, {0, 1, 0, 0}});
  auto b = Subspace::span(4, std::vector<VecZ>{{0, 1, 0, 0}, {0, 0, 1, 0}});
  EXPECT_EQ(sum(a, b).dim(), 3u);
  EXPECT_EQ(intersection(a, b).dim(), 1u);
  EXPECT_TRUE(a.contains(VecQ{Rational(2), Rational(-3), Rational(0), Rational(0)}));
  auto perp = a.annihilator(to_q(standard_J(2)));
  EXPECT_EQ(perp, Subspace::span(4, std::vector<VecZ>{{0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(Subspace(4).annihilator(to_q(standard_J(2))).dim(), 4u);
}

TEST(Splitting, L22ComplementIsInvariant) {
  auto rep = homology_rep(origamis::L22());
  auto taut = Subspace::span(rep.dim(), tautological_plane(rep));
  EXPECT_TRUE(is_invariant(taut, rep));
  auto c = symplectic_complement(taut, rep);
  EXPECT_EQ(c.dim(), 2u);
  EXPECT_EQ(intersection(c, taut).dim(), 0u);
}

TEST(Splitting, L22ComplementImages) {
  auto rep = homology_rep(origamis::L22());
  auto c = symplectic_complement(Subspace::span(rep.dim(), tautological_plane(rep)), rep);
  auto dom = stabilizer_of_subspace(rep, c);
  EXPECT_EQ(dom, rep.veech.subgroup);
  auto r2 = restrict_to_rank2(rep, c, dom);
  Mat2Z t2 = image_of(r2, "T^2"), s = image_of(r2, "S");
  EXPECT_EQ(abs(t2.trace()), 2);
  EXPECT_FALSE(t2.is_central());
  EXPECT_EQ(s.trace(), 0);
  // conjugate to T and S⁻¹ (up to sign) in a suitable basis
  ASSERT_TRUE(std::holds_alternative<Parabolic>(classify(t2)));
  EXPECT_EQ(abs(translation_exponent(t2).m), 1);
}

TEST(Splitting, TautologicalPieceIsConjugateToIdentity) {
  for (auto o : {origamis::L22(), origamis::Qmod9(), origamis::L_shape(3, 2)}) {
    auto rep = homology_rep(o);
    auto taut = Subspace::span(rep.dim(), tautological_plane(rep));
    auto r2 = restrict_to_rank2(rep, taut, rep.veech.subgroup);
    const auto& gens = r2.domain.schreier_generators();
    std::size_t n = gens.size();
    // |trace| agrees on all products of two generators
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Mat2Z lhs = r2.images[a] * r2.images[b], rhs = gens[a].matrix * gens[b].matrix;
        EXPECT_EQ(abs(lhs.trace()), abs(rhs.trace())) << gens[a].word.to_string() << " " << gens[b].word.to_string();
      }
    EXPECT_EQ(lyapunov_exponent(ModularEmbeddingData(r2.domain, r2.images)).lambda, 1);
  }
}

TEST(Splitting, Qmod9Quotients) {
  auto o = origamis::Qmod9();
  auto rep = homology_rep(o);
  std::vector<Subspace> pulls;
  for (const auto& q : quotient_covers(o)) {
    if (q.quotient.degree() != 3) continue;
    EXPECT_EQ(stratum(q.quotient).genus, 2);
    pulls.push_back(pullback_subspace(rep, q, false));
  }
  ASSERT_GE(pulls.size(), 2u);
  EXPECT_NE(pulls[0], pulls[1]);
  for (const auto& p : pulls) EXPECT_EQ(p.dim(), 4u);
  // each pullback contains the tautological plane
  auto taut = Subspace::span(rep.dim(), tautological_plane(rep));
  for (const auto& p : pulls) EXPECT_TRUE(p.contains(taut));
}

TEST(Splitting, Qmod9ComplementIsElliptic) {
  auto a = analyze(origamis::Qmod9());
  ASSERT_EQ(a.pieces.size(), 4u);
  const auto& last = a.pieces.back();
  EXPECT_EQ(last.source, "complement");
  ASSERT_TRUE(last.rank2);
  Mat2Z t2 = image_of(*last.rank2, "T^2");
  EXPECT_EQ(abs(t2.trace()), 1);
}

TEST(Splitting, PiecesAreOrthogonalAndFill) {
  for (auto o : {origamis::L22(), origamis::Qmod9()}) {
    auto a = analyze(o);
    Subspace total(a.rep.dim());
    for (const auto& p : a.pieces) total = sum(total, p.space);
    EXPECT_EQ(total.dim(), a.rep.dim());
    MatQ j = to_q(standard_J(a.rep.genus));
    for (std::size_t x = 0; x < a.pieces.size(); ++x)
      for (std::size_t y = x + 1; y < a.pieces.size(); ++y)
        for (const auto& v : a.pieces[x].space.basis())
          for (const auto& w : a.pieces[y].space.basis()) {
            auto jw = j * w;
            Rational acc = 0;
            for (std::size_t k = 0; k < v.size(); ++k) acc += v[k] * jw[k];
            EXPECT_EQ(acc, 0);
          }
  }
}

TEST(Splitting, DeckGroupTrivialForGoldens) {
  EXPECT_EQ(deck_group(origamis::L22()).size(), 1u);
  EXPECT_EQ(deck_group(origamis::Qmod9()).size(), 1u);
}

TEST(Splitting, IsotypicCyclic) {
  auto o = parse_origami_text("r=(1,2,3,4); u=(1,3)");
  auto rep = homology_rep(o);
  auto deck = deck_group(o);
  ASSERT_EQ(deck.size(), 2u);
  const auto& tau = deck[0].is_identity() ? deck[1] : deck[0];
  auto pieces = isotypic_cyclic(rep, tau);
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(pieces[0].space.dim() + pieces[1].space.dim(), rep.dim());
  for (const auto& p : pieces) EXPECT_TRUE(is_invariant(p.space, rep));
  EXPECT_THROW(isotypic_cyclic(rep, Permutation::identity(4)), Error);
}

TEST(Splitting, StabilizerOfNonInvariantPlane) {
  auto o = origamis::Qmod9();
  auto rep = homology_rep(o);
  for (const auto& q : quotient_covers(o)) {
    if (q.quotient.degree() != 3) continue;
    auto taut = Subspace::span(rep.dim(), tautological_plane(rep));
    auto piece = intersection(pullback_subspace(rep, q, false), symplectic_complement(taut, rep));
    EXPECT_FALSE(is_invariant(piece, rep));
    auto dom = stabilizer_of_subspace(rep, piece);
    EXPECT_TRUE(is_subgroup_of(dom, rep.veech.subgroup));
    EXPECT_GT(dom.index(), rep.veech.subgroup.index());
    for (const auto& g : dom.schreier_generators()) EXPECT_TRUE(piece.invariant_under(to_q(rep.evaluate(g.word))));
  }
  EXPECT_THROW(pullback_subspace(rep, quotient_covers(o)[0], true), Error);
}

TEST(Splitting, RestrictRejectsWrongDimension) {
  auto rep = homology_rep(origamis::L22());
  EXPECT_THROW(restrict_to_rank2(rep, Subspace::full(4), rep.veech.subgroup), Error);
}

TEST(Analysis, Spectra) {
  auto torus = analyze(origamis::torus());
  ASSERT_EQ(torus.spectrum.size(), 1u);
  EXPECT_EQ(torus.spectrum[0], 1);
  EXPECT_EQ(analyze(origamis::L22()).spectrum, (std::vector<Rational>{1, make_rational(1, 3)}));
  auto third = make_rational(1, 3);
  EXPECT_EQ(analyze(origamis::Qmod9()).spectrum, (std::vector<Rational>{1, third, third, third}));
  // H(1,1)
  EXPECT_EQ(analyze(parse_origami_text("r=(1,2,3,4); u=(1,3)")).spectrum, (std::vector<Rational>{1, make_rational(1, 2)}));
}

TEST(Analysis, NonCyclicDeckLeavesPiecesOpen) {
  auto a = analyze(parse_origami_text("r=(1,2)(3,4)(5,6); u=(2,3)(4,5)(6,1)"));
  ASSERT_FALSE(a.pieces.empty());
  EXPECT_EQ(a.spectrum.front(), 1);
  bool open = false;
  for (const auto& p : a.pieces) open = open || (!p.lyapunov && !p.note.empty());
  EXPECT_TRUE(open);
}
