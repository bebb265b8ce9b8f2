#include <gtest/gtest.h>

#include <random>

#include "stlyap/monodromy/homology_rep.hpp"

using namespace stlyap;

namespace {

std::vector<Origami> samples() {
  return {origamis::torus(), origamis::L22(), origamis::Qmod9(), origamis::L_shape(3, 3), origamis::L_shape(2, 4)};
}

/// Coordinates (α, β) with v = α·b1 + β·b2, or nullopt if v is outside the span.
std::optional<std::pair<Rational, Rational>> coords(const VecZ& v, const VecZ& b1, const VecZ& b2) {
  MatQ m(v.size(), 3);
  for (std::size_t i = 0; i < v.size(); ++i) {
    m(i, 0) = Rational(b1[i]);
    m(i, 1) = Rational(b2[i]);
    m(i, 2) = Rational(v[i]);
  }
  auto k = kernel_Q(m);
  if (k.size() != 1 || k[0][2] == 0) return std::nullopt;
  return std::make_pair(-k[0][0] / k[0][2], -k[0][1] / k[0][2]);
}

}  // namespace

TEST(Tree, Counts) {
  auto t1 = graph_and_tree(origamis::torus());
  EXPECT_EQ(t1.rank(), 2u);
  auto l = graph_and_tree(origamis::L22());
  EXPECT_EQ(l.rank(), 4u);
  auto q = graph_and_tree(origamis::Qmod9());
  EXPECT_EQ(q.rank(), 10u);
  std::size_t tree_edges = 0;
  for (bool b : q.in_tree) tree_edges += b;
  EXPECT_EQ(tree_edges, 8u);
}

TEST(Tree, HGeneratorsFixBaseSquare) {
  auto t = graph_and_tree(origamis::torus());
  auto g = h_generators(t);
  EXPECT_EQ(g[0], FreeWord::x());
  EXPECT_EQ(g[1], FreeWord::y());
  for (auto o : samples()) {
    auto tr = graph_and_tree(o);
    int max_depth = *std::max_element(tr.depth.begin(), tr.depth.end());
    for (const auto& w : h_generators(tr)) {
      EXPECT_EQ(w.trace(0, o.r, o.u), 0);
      EXPECT_LE(static_cast<int>(w.size()), 2 * max_depth + 1);
    }
  }
}

TEST(Lift, Abelianizations) {
  EXPECT_EQ(lift_to_aut(WordST{}), Aut2::identity());
  EXPECT_EQ(lift_to_aut(WordST::T()).abelianization(), Mat2Z::T());
  EXPECT_EQ(lift_to_aut(WordST::S()).abelianization(), Mat2Z::S());
  EXPECT_EQ(lift_to_aut(WordST({1, 1})).abelianization(), Mat2Z::minus_identity());
  std::mt19937 rng(4);
  for (int k = 0; k < 50; ++k) {
    std::vector<int> letters;
    for (int i = 0; i < 12; ++i) letters.push_back(std::vector<int>{1, -1, 2, -2}[rng() % 4]);
    WordST w(letters);
    EXPECT_EQ(lift_to_aut(w).abelianization(), word_to_matrix(w));
    EXPECT_EQ(compose(lift_to_aut(w), lift_to_aut(w.inverse())), Aut2::identity());
  }
}

TEST(StabilizeH, Examples) {
  auto l = origamis::L22();
  auto t = graph_and_tree(l);
  EXPECT_EQ(stabilize_H(Aut2::identity(), t), Aut2::identity());
  auto a = stabilize_H(lift_to_aut(WordST::T_power(2)), t);
  for (const auto& u : h_generators(t)) EXPECT_EQ(a(u).trace(0, l.r, l.u), 0);
  try {
    stabilize_H(lift_to_aut(WordST::T()), t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInVeechGroup);
  }
}

TEST(RewriteAction, IdentityAndUnimodular) {
  auto t = graph_and_tree(origamis::L22());
  EXPECT_EQ(rewrite_action(Aut2::identity(), t), MatZ::identity(4));
  auto m = rewrite_action(stabilize_H(lift_to_aut(WordST::T_power(2)), t), t);
  EXPECT_EQ(abs(determinant(m)), 1);
  try {
    rewrite_action(lift_to_aut(WordST::T()), t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PathNotClosed);
  }
}

TEST(RewriteAction, ColumnSumsMatchEdgeTotals) {
  // every edge crossed is counted: summing over tree and non-tree edges
  // reproduces the abelianized exponents of the image word
  auto o = origamis::Qmod9();
  auto t = graph_and_tree(o);
  auto a = stabilize_H(lift_to_aut(WordST::S()), t);
  for (const auto& u : h_generators(t)) {
    auto w = a(u);
    auto c = edge_counts(t, w);
    long long xs = 0, ys = 0;
    for (std::size_t i = 0; i < o.degree(); ++i) {
      xs += c[2 * i];
      ys += c[2 * i + 1];
    }
    auto ab = w.abelianize();
    EXPECT_EQ(xs, ab[0]);
    EXPECT_EQ(ys, ab[1]);
  }
}

TEST(IntersectionGram, Examples) {
  auto g1 = intersection_gram(graph_and_tree(origamis::torus()));
  EXPECT_EQ(g1.gram(), standard_J(1));
  auto gl = intersection_gram(graph_and_tree(origamis::L22()));
  EXPECT_EQ(rank(to_rational(gl.gram())), 4u);
  auto gq = intersection_gram(graph_and_tree(origamis::Qmod9()));
  EXPECT_EQ(10 - rank(to_rational(gq.gram())), 2u);
}

TEST(HomologyRep, Torus) {
  auto rep = homology_rep(origamis::torus());
  EXPECT_EQ(rep.genus, 1u);
  for (const auto& g : rep.generators) EXPECT_EQ(g.matrix, (MatZ{{g.matrix2.a, g.matrix2.b}, {g.matrix2.c, g.matrix2.d}}));
}

TEST(HomologyRep, SymplecticInvariantAndRadical) {
  for (auto o : samples()) {
    auto rep = homology_rep(o);
    auto s = stratum(o);
    EXPECT_EQ(static_cast<int>(rep.genus), s.genus);
    EXPECT_EQ(rep.reduction.radical.size(), static_cast<std::size_t>(s.punctures - 1));
    for (const auto& g : rep.generators) {
      EXPECT_TRUE(is_symplectic(g.matrix)) << g.word.to_string();
      EXPECT_EQ(g.full.transpose() * rep.gram.gram() * g.full, rep.gram.gram());
      // the radical is invariant (punctures may be permuted among themselves)
      for (const auto& c : rep.reduction.radical) {
        auto img = g.full * c;
        auto gi = rep.gram.gram() * img;
        EXPECT_TRUE(std::all_of(gi.begin(), gi.end(), [](const Integer& z) { return z == 0; }));
      }
    }
  }
}

TEST(HomologyRep, TautologicalPlaneCarriesTheVeechGroup) {
  for (auto o : samples()) {
    auto rep = homology_rep(o);
    auto hv = tautological_plane(rep);
    for (const auto& g : rep.generators) {
      auto ih = coords(g.matrix * hv[0], hv[0], hv[1]);
      auto iv = coords(g.matrix * hv[1], hv[0], hv[1]);
      ASSERT_TRUE(ih && iv);
      // restriction in the basis (h, v) is the derivative itself
      EXPECT_EQ(ih->first, Rational(g.matrix2.a));
      EXPECT_EQ(ih->second, Rational(g.matrix2.c));
      EXPECT_EQ(iv->first, Rational(g.matrix2.b));
      EXPECT_EQ(iv->second, Rational(g.matrix2.d));
    }
  }
}

TEST(HomologyRep, TautologicalSupportIsHorizontalEdges) {
  auto t = graph_and_tree(origamis::L22());
  auto [h, v] = tautological_cycles(t);
  for (std::size_t k = 0; k < t.rank(); ++k) {
    EXPECT_EQ(h[k] == 1, t.nontree[k] % 2 == 0);
    EXPECT_EQ(v[k] == 1, t.nontree[k] % 2 == 1);
  }
}

TEST(HomologyRep, CocycleIsStrictWithoutDeckGroup) {
  for (auto o : {origamis::L22(), origamis::Qmod9()}) {
    ASSERT_EQ(centralizer({o.r, o.u}).size(), 1u);
    auto rep = homology_rep(o);
    const auto& gens = rep.generators;
    for (const auto& a : gens)
      for (const auto& b : gens) {
        Mat2Z ab = a.matrix2 * b.matrix2;
        EXPECT_EQ(rep.evaluate(ab), a.matrix * b.matrix);
      }
  }
}

TEST(Dualize, Properties) {
  EXPECT_EQ(dualize(MatZ::identity(4)), MatZ::identity(4));
  auto rep = homology_rep(origamis::L22());
  for (const auto& g : rep.generators) {
    EXPECT_TRUE(is_symplectic(dualize(g.matrix)));
    EXPECT_EQ(dualize(dualize(g.matrix)), g.matrix);
  }
}
