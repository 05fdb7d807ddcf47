#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "fixtures.hpp"
#include "sisframe/gram.hpp"

using namespace sisframe;
using sisframe::testing::kPi;
using sisframe::testing::wide_bump_family;

TEST(Gram, ReduceToFundamental) {
  EXPECT_DOUBLE_EQ(reduce_to_fundamental(0.5), 0.5);
  EXPECT_NEAR(reduce_to_fundamental(0.5 + 6.0 * kPi), 0.5, 1e-14);
  EXPECT_DOUBLE_EQ(reduce_to_fundamental(kPi), -kPi);
  EXPECT_NEAR(reduce_to_fundamental(-3.0 * kPi + 0.1), -kPi + 0.1, 1e-14);
}

TEST(Gram, PeriodizationRangeCoversSupports) {
  EXPECT_EQ(required_periodization_range(GeneratorSet::bump_family({0}, {})), 1);
  // Generator 4 lives on [-5 pi, -3 pi]: slots j = -2, -1 carry it, j = -3
  // touches it only at the endpoint.
  EXPECT_GE(required_periodization_range(GeneratorSet::bump_family({0, 4}, {})), 2);
  const auto gens = GeneratorSet::bump_family({0, 4}, {});
  EXPECT_THROW(periodized_matrix(gens, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(gram_matrix(gens, kPi), std::invalid_argument);
}

TEST(Gram, ClosedFormEntries) {
  // Generators 0 and 2 occupy disjoint periodization slots: G = I at 0.
  const auto gens = GeneratorSet::bump_family({0, 2}, {});
  const CMatrix g = gram_matrix(gens, 0.0);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_NEAR(std::abs(g(i, k) - (i == k ? 1.0 : 0.0)), 0.0, 1e-15);
    }
  }
  // Generators 0 and 1 overlap on [-pi+eps, -eps]: G = [[1,1],[1,1]] at -pi/2.
  const CMatrix h = gram_matrix(GeneratorSet::bump_family({0, 1}, {}), -kPi / 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(std::abs(h(i, k) - 1.0), 0.0, 1e-15);
  }
  const CMatrix a = periodized_matrix(gens, 0.3, 2);
  const CMatrix aah = a * a.adjoint();
  const CMatrix g3 = gram_matrix(gens, 0.3);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(std::abs(aah(i, k) - g3(i, k)), 0.0, 1e-15);
  }
}

TEST(RankProfile, AgreesWithSvdOfPeriodizedMatrix) {
  const auto gens = GeneratorSet::bump_family({0, 1, 3, 4}, {});
  const auto profile = rank_profile(gens, 256, 1e-8);
  const int J = required_periodization_range(gens);
  for (std::size_t k = 0; k < profile.xi.size(); k += 5) {
    const CMatrix a = periodized_matrix(gens, profile.xi[k], J);
    Eigen::MatrixXcd m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    }
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index s = 0; s < sv.size(); ++s) rank += sv(s) > 1e-8 * profile.sigma_max;
    EXPECT_EQ(rank, profile.rank[k]) << profile.xi[k];
  }
}

TEST(RankProfile, RejectsBadArguments) {
  const auto gens = GeneratorSet::bump_family({0}, {});
  EXPECT_THROW(rank_profile(gens, 16, 1e-8), std::invalid_argument);
  EXPECT_THROW(rank_profile(gens, 1024, 0.0), std::invalid_argument);
  EXPECT_THROW(rank_profile(gens, 1024, 1.0), std::invalid_argument);
}

TEST(Verdict, RieszFamilyIsPositive) {
  const auto v = frame_verdict(wide_bump_family(2));
  EXPECT_TRUE(v.constant_rank);
  EXPECT_TRUE(v.positive());
  EXPECT_EQ(v.rank_min, 2);
  EXPECT_TRUE(v.transitions.empty());
  EXPECT_TRUE(std::isfinite(v.c_estimate));
  EXPECT_GE(v.c_estimate, 1.0);
  EXPECT_DOUBLE_EQ(v.c_estimate, std::max(v.max_eig, 1.0 / v.min_nonzero_eig));
}

TEST(Verdict, PairZeroOneChangesRankTwice) {
  const auto v = frame_verdict(GeneratorSet::bump_family({0, 1}, {}));
  EXPECT_FALSE(v.constant_rank);
  EXPECT_FALSE(v.positive());
  EXPECT_EQ(v.c_estimate, kInfinity);
  ASSERT_EQ(v.transitions.size(), 2u);
  // Changes sit where generator 1 enters its support: near 0 and near pi.
  EXPECT_NEAR(v.transitions[0], 0.0, 0.02);
  EXPECT_NEAR(v.transitions[1], kPi, 0.02);
  const double sigma = v.sigma_max;
  EXPECT_EQ(rank_at(GeneratorSet::bump_family({0, 1}, {}), -kPi / 2, sigma, 1e-8), 1);
  EXPECT_EQ(rank_at(GeneratorSet::bump_family({0, 1}, {}), kPi / 2, sigma, 1e-8), 2);
}

TEST(Verdict, ZeroVectorAtPiForEvenIndices) {
  // theta vanishes at +-pi, so every even-index generator has a zero column
  // on the fiber xi = -pi.
  const auto gens = GeneratorSet::bump_family({0, 2}, {});
  const auto profile = rank_profile(gens, 1024, 1e-8);
  EXPECT_EQ(profile.rank.front(), 0);
  EXPECT_EQ(profile.rank[512], 2);
}

TEST(IndexSetCase, Classification) {
  const std::vector<int> gapped{0, 2, 5};
  const std::vector<int> completed{0, 1, 2};
  const std::vector<int> none{0, 1, 3, 4};
  EXPECT_EQ(index_set_case(gapped), "gapped");
  EXPECT_EQ(index_set_case(completed), "completed");
  EXPECT_EQ(index_set_case(none), "none");
}
