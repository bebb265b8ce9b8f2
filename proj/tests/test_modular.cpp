#include <gtest/gtest.h>

#include <random>

#include "stlyap/modular/todd_coxeter.hpp"

using namespace stlyap;

namespace {

ModularSubgroup theta() { return coset_enumerate({WordST::S(), WordST::T_power(2)}); }

ModularSubgroup gamma2() {
  return coset_enumerate({WordST::T_power(2), WordST::parse("S T^-2 S^-1")});
}

void expect_valid_table(const ModularSubgroup& g) {
  EXPECT_TRUE(compose(g.sigma_S(), g.sigma_S()).is_identity());
  EXPECT_TRUE(power(compose(g.sigma_T(), g.sigma_S()), 3).is_identity());
  EXPECT_TRUE(is_transitive({g.sigma_S(), g.sigma_T()}));
  long long total = 0;
  for (const auto& c : g.cusps()) total += c.width;
  EXPECT_EQ(total, static_cast<long long>(g.index()));
}

WordST random_word(std::mt19937& rng, std::size_t max_len) {
  std::vector<int> letters;
  std::size_t len = rng() % (max_len + 1);
  static const int alphabet[] = {1, -1, 2, -2};
  for (std::size_t i = 0; i < len; ++i) letters.push_back(alphabet[rng() % 4]);
  return WordST(letters);
}

}  // namespace

TEST(WordST, Evaluation) {
  EXPECT_EQ(word_to_matrix(WordST::T()), (Mat2Z{1, 1, 0, 1}));
  EXPECT_EQ(word_to_matrix(WordST{}), Mat2Z::identity());
  EXPECT_EQ(word_to_matrix(WordST::parse("SS")), Mat2Z::minus_identity());
}

TEST(WordST, ParseAndPrint) {
  auto w = WordST::parse("T^2 S^-1 t");
  EXPECT_EQ(w.to_string(), "T^2 S^-1 T^-1");
  EXPECT_EQ(WordST::parse("1").to_string(), "1");
  EXPECT_EQ(WordST::parse("T T t").to_string(), "T");
  EXPECT_THROW(WordST::parse("X"), Error);
}

TEST(MatrixToWord, Examples) {
  EXPECT_TRUE(matrix_to_word(Mat2Z::identity()).empty());
  EXPECT_EQ(matrix_to_word(Mat2Z::minus_identity()).to_string(), "S^2");
  Mat2Z m{2, -1, 1, 0};
  EXPECT_EQ(word_to_matrix(matrix_to_word(m)), m);
}

TEST(MatrixToWord, RoundTripOnRandomWords) {
  std::mt19937 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    Mat2Z m = word_to_matrix(random_word(rng, 30));
    EXPECT_EQ(word_to_matrix(matrix_to_word(m)), m);
  }
}

TEST(CosetEnumerate, FullGroup) {
  auto g = coset_enumerate({WordST::S(), WordST::T()});
  EXPECT_EQ(g.index(), 1u);
  auto cusps = g.cusps();
  ASSERT_EQ(cusps.size(), 1u);
  EXPECT_EQ(cusps[0].width, 1);
  EXPECT_EQ(cusps[0].parabolic, Mat2Z::T());
}

TEST(CosetEnumerate, ThetaGroup) {
  auto g = theta();
  EXPECT_EQ(g.index(), 3u);
  expect_valid_table(g);
  std::vector<long long> widths;
  for (const auto& c : g.cusps()) widths.push_back(c.width);
  std::sort(widths.begin(), widths.end());
  EXPECT_EQ(widths, (std::vector<long long>{1, 2}));
  // the width-1 cusp sits at 1 and its parabolic is conjugate to T
  for (const auto& c : g.cusps()) {
    if (c.width != 1) continue;
    ASSERT_FALSE(c.at_infinity);
    EXPECT_EQ(c.point, Rational(1));
    EXPECT_EQ(abs(c.parabolic.trace()), 2);
  }
}

TEST(CosetEnumerate, Gamma2) {
  auto g = gamma2();
  EXPECT_EQ(g.index(), 6u);
  expect_valid_table(g);
  auto cusps = g.cusps();
  ASSERT_EQ(cusps.size(), 3u);
  for (const auto& c : cusps) EXPECT_EQ(c.width, 2);
}

TEST(CosetEnumerate, ProjectiveIndexOfLevelTwoMatrices) {
  auto g = coset_enumerate({matrix_to_word(Mat2Z{1, 2, 0, 1}), matrix_to_word(Mat2Z{1, 0, 2, 1})});
  EXPECT_EQ(g.index(), 6u);
}

TEST(CosetEnumerate, OverflowOnInfiniteIndex) {
  try {
    coset_enumerate({WordST::T()}, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EnumerationOverflow);
  }
}

TEST(CosetEnumerate, Gamma0Five) {
  // Γ₀(5) has index 6
  auto g5 = coset_enumerate({WordST::T(), matrix_to_word(Mat2Z{1, 0, 5, 1}), matrix_to_word(Mat2Z{2, 1, 5, 3})});
  EXPECT_EQ(g5.index(), 6u);
  expect_valid_table(g5);
}

TEST(Contains, ThetaMembership) {
  auto g = theta();
  EXPECT_TRUE(g.contains(Mat2Z::S()));
  EXPECT_FALSE(g.contains(Mat2Z::T()));
  EXPECT_TRUE(g.contains(Mat2Z::identity()));
  EXPECT_TRUE(g.contains(Mat2Z::minus_identity()));
  EXPECT_TRUE(g.contains(word_to_matrix(WordST::parse("T^2 S"))));
}

TEST(Contains, AgreesWithCongruenceTest) {
  // Γ₀(5): lower-left entry divisible by 5
  auto g = coset_enumerate({WordST::T(), matrix_to_word(Mat2Z{1, 0, 5, 1}), matrix_to_word(Mat2Z{2, 1, 5, 3})});
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Mat2Z m = word_to_matrix(random_word(rng, 12));
    EXPECT_EQ(g.contains(m), m.c % 5 == 0);
  }
}

TEST(Rewrite, SchreierGeneratorsRewriteToThemselves) {
  for (const auto& g : {theta(), gamma2()}) {
    const auto& gens = g.schreier_generators();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto r = g.rewrite(gens[k].word);
      ASSERT_EQ(r.letters.size(), 1u);
      EXPECT_EQ(r.letters[0].first, static_cast<int>(k));
      EXPECT_TRUE(g.evaluate(r.letters).projectively_equal(gens[k].matrix));
    }
  }
}

TEST(Rewrite, RandomMembersMultiplyBack) {
  auto g = gamma2();
  std::mt19937 rng(8);
  int found = 0;
  while (found < 100) {
    Mat2Z m = word_to_matrix(random_word(rng, 20));
    if (!g.contains(m)) continue;
    auto r = g.rewrite(m);
    Mat2Z prod = g.evaluate(r.letters);
    EXPECT_EQ(prod, r.sign == 1 ? m : -m);
    ++found;
  }
}

TEST(Rewrite, CuspParabolicsAndNonMembers) {
  auto g = theta();
  auto r = g.rewrite(word_to_matrix(WordST::parse("T^2 S")));
  EXPECT_TRUE(g.evaluate(r.letters).projectively_equal(word_to_matrix(WordST::parse("T^2 S"))));
  for (const auto& c : g.cusps()) {
    auto rc = g.rewrite(c.parabolic);
    EXPECT_TRUE(g.evaluate(rc.letters).projectively_equal(c.parabolic));
  }
  try {
    g.rewrite(Mat2Z::T());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAMember);
  }
}

TEST(Rewrite, RelatorsAreTrivial) {
  for (const auto& g : {theta(), gamma2()})
    for (const auto& rel : g.relators()) EXPECT_TRUE(g.evaluate(rel).is_central());
}

TEST(Classify, Examples) {
  auto c = classify(word_to_matrix(WordST::parse("T^2 S")));
  auto p = std::get_if<Parabolic>(&c);
  ASSERT_TRUE(p);
  EXPECT_FALSE(p->at_infinity);
  EXPECT_EQ(p->fixed_point, Rational(1));
  auto e = classify(word_to_matrix(WordST::parse("T S^-1")));
  ASSERT_TRUE(std::holds_alternative<Elliptic>(e));
  EXPECT_EQ(std::get<Elliptic>(e).order, 3);
  EXPECT_TRUE(std::holds_alternative<Center>(classify(Mat2Z::minus_identity())));
  EXPECT_TRUE(std::holds_alternative<Hyperbolic>(classify(Mat2Z{2, 1, 1, 1})));
  EXPECT_EQ(std::get<Elliptic>(classify(Mat2Z::S())).order, 2);
}

TEST(TranslationExponent, Examples) {
  auto t3 = translation_exponent(power(Mat2Z::T(), 3));
  EXPECT_EQ(t3.g, Mat2Z::identity());
  EXPECT_EQ(t3.m, 3);
  auto neg = translation_exponent(-power(Mat2Z::T(), 5));
  EXPECT_EQ(neg.m, 5);
  Mat2Z p = word_to_matrix(WordST::parse("T^2 S"));
  auto d = translation_exponent(p);
  EXPECT_EQ(d.g.a, d.g.c);  // g·∞ = 1
  EXPECT_EQ(abs(d.m), 1);
  EXPECT_EQ(d.g.inverse() * p * d.g, d.sign == 1 ? power(Mat2Z::T(), static_cast<long long>(d.m))
                                                 : -power(Mat2Z::T(), static_cast<long long>(d.m)));
  try {
    translation_exponent(Mat2Z::S());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotParabolic);
  }
}

TEST(Intersect, Examples) {
  auto full = coset_enumerate({WordST::S(), WordST::T()});
  EXPECT_EQ(intersect(theta(), full), theta());
  EXPECT_EQ(intersect(theta(), theta()), theta());
  auto both = intersect(theta(), gamma2());
  EXPECT_EQ(18u % both.index(), 0u);
  expect_valid_table(both);
  for (const auto& s : both.schreier_generators()) {
    EXPECT_TRUE(theta().contains(s.matrix));
    EXPECT_TRUE(gamma2().contains(s.matrix));
  }
}

TEST(ModularSubgroup, TableFromEnumerationMatchesOwnSchreierGenerators) {
  auto g = gamma2();
  std::vector<WordST> words;
  for (const auto& s : g.schreier_generators()) words.push_back(s.word);
  EXPECT_EQ(coset_enumerate(words), g);
}
