#include <gtest/gtest.h>

#include <random>
#include <set>

#include "stlyap/modular/todd_coxeter.hpp"
#include "stlyap/origami/quotients.hpp"
#include "stlyap/veech/veech.hpp"

using namespace stlyap;

namespace {

Origami relabel(const Origami& o, std::mt19937& rng) {
  std::vector<int> im(o.degree());
  std::iota(im.begin(), im.end(), 0);
  std::shuffle(im.begin(), im.end(), rng);
  Permutation s(im);
  return {conjugate(o.r, s), conjugate(o.u, s)};
}

std::vector<long long> widths(const ModularSubgroup& g) {
  std::vector<long long> w;
  for (const auto& c : g.cusps()) w.push_back(c.width);
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

TEST(Origami, Validate) {
  EXPECT_NO_THROW(validate(origamis::L22()));
  EXPECT_NO_THROW(validate(origamis::Qmod9()));
  try {
    validate(Origami(Permutation::identity(2), Permutation::identity(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotConnected);
  }
}

TEST(Origami, ParseText) {
  auto q = origamis::Qmod9();
  EXPECT_EQ(q.degree(), 9u);
  EXPECT_EQ(q.r.to_string(), "(1,4,7)(2,3,5,6,8,9)");
  EXPECT_EQ(q.u.to_string(), "(1,6,8,7,3,2)(4,9,5)");
  EXPECT_THROW(parse_origami_text("r=(1,2"), Error);
  EXPECT_THROW(parse_origami_text("u=(1,2)"), Error);
}

TEST(Stratum, Examples) {
  auto t = stratum(origamis::torus());
  EXPECT_EQ(t.genus, 1);
  EXPECT_TRUE(t.kappa.empty());
  auto l = stratum(origamis::L22());
  EXPECT_EQ(l.genus, 2);
  EXPECT_EQ(l.kappa, (std::vector<int>{2}));
  EXPECT_EQ(l.punctures, 1);
  auto q = stratum(origamis::Qmod9());
  EXPECT_EQ(q.genus, 4);
  EXPECT_EQ(q.kappa, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(q.punctures, 3);
}

TEST(Stratum, EulerIdentitiesOnRandomOrigamis) {
  std::mt19937 rng(41);
  int done = 0;
  while (done < 100) {
    std::size_t d = 1 + rng() % 9;
    std::vector<int> a(d), b(d);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Origami o{Permutation(a), Permutation(b)};
    if (!is_transitive({o.r, o.u})) continue;
    auto s = stratum(o);
    int sum = 0;
    for (int k : s.kappa) sum += k;
    EXPECT_EQ(sum, 2 * s.genus - 2);
    EXPECT_EQ(s.punctures - static_cast<int>(d), 2 - 2 * s.genus);
    ++done;
  }
}

TEST(Action, InversesUndo) {
  std::mt19937 rng(1);
  auto q = origamis::Qmod9();
  for (int g : {1, -1, 2, -2}) EXPECT_TRUE(equivalent(act_generator(-g, act_generator(g, q)), q));
}

TEST(Action, L22VeechMembership) {
  auto l = origamis::L22();
  EXPECT_FALSE(equivalent(act_generator(2, l), l));
  EXPECT_TRUE(equivalent(act_word(WordST::T_power(2), l), l));
  EXPECT_TRUE(equivalent(act_generator(1, l), l));
  auto tau = simultaneous_conjugacy(l.r, l.u, act_generator(1, l).r, act_generator(1, l).u);
  EXPECT_TRUE(tau.has_value());
}

TEST(Action, TorusFixed) {
  for (int g : {1, -1, 2, -2}) EXPECT_EQ(act_generator(g, origamis::torus()), origamis::torus());
}

TEST(Action, RelatorsActTrivially) {
  std::mt19937 rng(77);
  for (auto o : {origamis::L22(), origamis::Qmod9(), origamis::L_shape(3, 4)}) {
    auto s2 = act_word(WordST({1, 1}), o);
    EXPECT_TRUE(equivalent(minus_identity_action(o), s2));
    EXPECT_TRUE(equivalent(act_word(WordST({1, 1, 1, 1}), o), o));
    EXPECT_TRUE(equivalent(act_word(WordST({1, 2, 1, 2, 1, 2}), o), o) ||
                equivalent(act_word(WordST({1, 2, 1, 2, 1, 2}), o), s2));
  }
}

TEST(CanonicalForm, IdempotentAndRelabelingInvariant) {
  std::mt19937 rng(9);
  auto q = origamis::Qmod9();
  auto c = canonical_form(q);
  EXPECT_EQ(canonical_form(c), c);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(canonical_form(relabel(q, rng)), c);
  auto l = canonical_form(origamis::L22());
  EXPECT_EQ(l.degree(), 3u);
  EXPECT_EQ(canonical_form(relabel(origamis::L22(), rng)), l);
}

TEST(Quotients, TorusOnly) {
  auto t = quotient_covers(origamis::torus());
  ASSERT_EQ(t.size(), 1u);
  auto l = quotient_covers(origamis::L22());
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0].quotient.degree(), 1u);
}

TEST(Quotients, Qmod9HasTwoGenusTwoQuotients) {
  auto o = origamis::Qmod9();
  auto qs = quotient_covers(o);
  std::set<Origami> genus_two;
  for (const auto& q : qs) {
    for (std::size_t i = 0; i < o.degree(); ++i) {
      EXPECT_EQ(q.projection[o.r(static_cast<int>(i))], q.quotient.r(q.projection[i]));
      EXPECT_EQ(q.projection[o.u(static_cast<int>(i))], q.quotient.u(q.projection[i]));
    }
    if (q.quotient.degree() == 3 && stratum(q.quotient).genus == 2) genus_two.insert(canonical_form(q.quotient));
  }
  EXPECT_EQ(qs.back().quotient.degree(), 1u);
  int three_square = 0;
  for (const auto& q : qs) three_square += q.quotient.degree() == 3 && stratum(q.quotient).genus == 2;
  EXPECT_GE(three_square, 2);
}

TEST(Veech, Torus) {
  auto v = veech_group(origamis::torus());
  EXPECT_EQ(v.subgroup.index(), 1u);
}

TEST(Veech, L22IsTheta) {
  auto v = veech_group(origamis::L22());
  EXPECT_EQ(v.subgroup.index(), 3u);
  EXPECT_EQ(widths(v.subgroup), (std::vector<long long>{1, 2}));
  EXPECT_TRUE(v.subgroup.contains(Mat2Z::S()));
  EXPECT_TRUE(v.subgroup.contains(power(Mat2Z::T(), 2)));
  EXPECT_FALSE(v.subgroup.contains(Mat2Z::T()));
  EXPECT_TRUE(v.contains_minus_identity);
}

TEST(Veech, Qmod9IsTheta) {
  auto v = veech_group(origamis::Qmod9());
  EXPECT_EQ(v.subgroup.index(), 3u);
  EXPECT_EQ(widths(v.subgroup), (std::vector<long long>{1, 2}));
  EXPECT_EQ(v.subgroup, coset_enumerate({WordST::S(), WordST::T_power(2)}));
}

TEST(Veech, SchreierGeneratorsPreserveBase) {
  for (auto o : {origamis::L22(), origamis::Qmod9(), origamis::L_shape(3, 3), origamis::L_shape(2, 4)}) {
    auto v = veech_group(o);
    EXPECT_EQ(v.orbit.size(), v.subgroup.index());
    for (const auto& [w, m] : v.schreier_gens) {
      EXPECT_TRUE(in_veech_group(o, w));
      EXPECT_EQ(word_to_matrix(w), m);
    }
    std::vector<WordST> words;
    for (const auto& g : v.subgroup.schreier_generators()) words.push_back(g.word);
    if (!words.empty()) {
      EXPECT_EQ(coset_enumerate(words), v.subgroup);
    }
    long long total = 0;
    for (const auto& c : v.subgroup.cusps()) total += c.width;
    EXPECT_EQ(total, static_cast<long long>(v.subgroup.index()));
  }
}

TEST(Veech, OrbitOverflow) {
  try {
    veech_group(origamis::L_shape(3, 4), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrbitOverflow);
  }
}
