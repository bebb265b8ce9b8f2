#include <gtest/gtest.h>

#include "stlyap/commensurability/commensurability.hpp"
#include "stlyap/modular/random_subgroup.hpp"

using namespace stlyap;

namespace {

const std::vector<WordST> theta_words{WordST::parse("T^2"), WordST::S()};

ModularEmbeddingData rho_L22() {
  return ModularEmbeddingData::from_generator_images(theta_words, {Mat2Z::T(), Mat2Z::S().inverse()});
}

ModularEmbeddingData rho_Qmod9() {
  return ModularEmbeddingData::from_generator_images(theta_words, {word_to_matrix(WordST::parse("T^-1 S")), Mat2Z::S().inverse()});
}

}  // namespace

TEST(Commensurable, Reflexive) {
  for (auto d : {rho_L22(), rho_Qmod9(), ModularEmbeddingData::inclusion(ModularSubgroup())})
    EXPECT_TRUE(commensurable(d, d).commensurable);
}

TEST(Commensurable, GoldensDiffer) {
  auto r = commensurable(rho_L22(), rho_Qmod9());
  EXPECT_FALSE(r.commensurable);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(std::holds_alternative<Parabolic>(classify(r.witness->first)));
  EXPECT_TRUE(std::holds_alternative<Elliptic>(classify(r.witness->second)));
  auto s = commensurable(rho_Qmod9(), rho_L22());
  EXPECT_FALSE(s.commensurable);
  EXPECT_EQ(s.witness->word, r.witness->word);
}

TEST(Commensurable, RestrictionChain) {
  auto d = rho_L22();
  std::mt19937_64 rng(5);
  auto h1 = intersect(d.domain(), random_subgroup(3, rng));
  auto h2 = intersect(h1, random_subgroup(2, rng));
  ASSERT_TRUE(is_subgroup_of(h2, h1));
  auto r1 = d.restrict_to(h1), r2 = r1.restrict_to(h2);
  EXPECT_TRUE(commensurable(d, r1).commensurable);
  EXPECT_TRUE(commensurable(r1, r2).commensurable);
  EXPECT_TRUE(commensurable(r2, d).commensurable);
  EXPECT_FALSE(commensurable(rho_Qmod9(), r2).commensurable);
}

TEST(Commensurable, TorsionOnlyDifference) {
  // trivial vs finite image: they agree on the kernel of the finite image
  ModularSubgroup full;
  auto triv = ModularEmbeddingData(full, std::vector<Mat2Z>(full.schreier_generators().size()));
  auto fin = ModularEmbeddingData::from_generator_images({WordST::S(), WordST::T()}, {Mat2Z::identity(), Mat2Z{0, -1, 1, 1}});
  auto r = commensurable(triv, fin);
  EXPECT_TRUE(r.commensurable);
  EXPECT_EQ(r.common.index(), 3u);
  // identity vs trivial never agree on a finite-index subgroup
  auto s = commensurable(ModularEmbeddingData::inclusion(full), triv);
  EXPECT_FALSE(s.commensurable);
  ASSERT_TRUE(s.witness);
}

TEST(WeakInvariants, Profiles) {
  auto a = weak_invariants(rho_L22()), b = weak_invariants(rho_Qmod9());
  EXPECT_EQ(a.report.lambda, make_rational(1, 3));
  EXPECT_EQ(b.report.lambda, make_rational(1, 3));
  std::map<std::string, int> expected{{"Elliptic(3)", 1}, {"Parabolic", 1}};
  EXPECT_EQ(a.cusp_image_profile, expected);
  EXPECT_EQ(b.cusp_image_profile, expected);
  EXPECT_EQ(weak_verdict(a, b), WeakVerdict::Undecided);
  auto id = weak_invariants(ModularEmbeddingData::inclusion(ModularSubgroup()));
  EXPECT_EQ(id.report.lambda, 1);
  EXPECT_EQ(id.cusp_image_profile, (std::map<std::string, int>{{"Parabolic", 1}}));
  EXPECT_EQ(weak_verdict(a, id), WeakVerdict::No);
}
