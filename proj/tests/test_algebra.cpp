#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "pervpn/algebra.hpp"

using namespace pervpn;

class AlgebraDims : public ::testing::TestWithParam<int> {};

TEST_P(AlgebraDims, MatchesPathEnumeration) {
  const int n = GetParam();
  auto alg = build_An(n);
  auto graded = oracle::graded_dims_by_enumeration(alg->quiver(), alg->relations(), 4 * n + 4);
  EXPECT_EQ(std::accumulate(graded.begin(), graded.end(), 0), alg->dim());
  EXPECT_EQ(alg->dim(), 4 * n + 1);
  for (int len = 0; len < static_cast<int>(graded.size()); ++len)
    EXPECT_EQ(static_cast<int>(alg->radical_power_basis(len).size()),
              std::accumulate(graded.begin() + len, graded.end(), 0));
}

TEST_P(AlgebraDims, ExtAlgebraMatchesPathEnumeration) {
  const int n = GetParam();
  auto en = build_En(n);
  auto graded = oracle::graded_dims_by_enumeration(en->quiver(), en->relations(), 4 * n + 4);
  EXPECT_EQ(std::accumulate(graded.begin(), graded.end(), 0), en->dim());
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l) {
      int total = 0;
      for (int r = 0; r <= 2 * n; ++r) total += static_cast<int>(en->slice(l, k, r).size());
      EXPECT_EQ(total, static_cast<int>(en->slice(l, k).size()));
    }
}

INSTANTIATE_TEST_SUITE_P(SmallN, AlgebraDims, ::testing::Values(1, 2, 3, 4));

TEST(Algebra, A1Basis) {
  auto alg = build_An(1);
  ASSERT_EQ(alg->dim(), 5);
  EXPECT_EQ(alg->slice(0, 0).size(), 2u);  // e_0 and the surviving loop
  EXPECT_EQ(alg->slice(1, 1).size(), 1u);
  EXPECT_EQ(alg->slice(1, 0).size(), 1u);
  EXPECT_EQ(alg->slice(0, 1).size(), 1u);
  EXPECT_EQ(alg->max_length(), 2);
}

TEST(Algebra, CartanMatrices) {
  EXPECT_EQ(build_An(1)->cartan_matrix(), (std::vector<std::vector<int>>{{2, 1}, {1, 1}}));
  EXPECT_EQ(build_An(2)->cartan_matrix(), (std::vector<std::vector<int>>{{2, 1, 0}, {1, 2, 1}, {0, 1, 1}}));
}

TEST(Algebra, RadicalPowers) {
  EXPECT_TRUE(build_An(1)->radical_power_basis(3).empty());
  EXPECT_EQ(build_An(2)->radical_power_basis(1).size(), 6u);
}

TEST(Algebra, RelationsVanish) {
  for (int n = 1; n <= 4; ++n) {
    auto alg = build_An(n);
    for (const auto& r : alg->relations()) EXPECT_TRUE(alg->evaluate(r).is_zero());
  }
}

TEST(Algebra, MultiplicationIsAssociative) {
  auto alg = build_An(3);
  for (int x = 0; x < alg->dim(); ++x)
    for (int y = 0; y < alg->dim(); ++y)
      for (int z = 0; z < alg->dim(); ++z) {
        auto X = AlgElem::basis(x), Y = AlgElem::basis(y), Z = AlgElem::basis(z);
        EXPECT_EQ(alg->mul(alg->mul(X, Y), Z), alg->mul(X, alg->mul(Y, Z)));
      }
}

TEST(Algebra, InvolutionReversesProducts) {
  auto alg = build_An(3);
  ASSERT_TRUE(alg->has_involution());
  for (int x = 0; x < alg->dim(); ++x)
    for (int y = 0; y < alg->dim(); ++y) {
      auto X = AlgElem::basis(x), Y = AlgElem::basis(y);
      EXPECT_EQ(alg->sigma(alg->mul(X, Y)), alg->mul(alg->sigma(Y), alg->sigma(X)));
      EXPECT_EQ(alg->sigma(alg->sigma(X)), X);
    }
}

TEST(Algebra, ProductConvention) {
  // traversal (b1, a1) is the loop at vertex 0
  auto alg = build_An(1);
  const auto& q = alg->quiver();
  auto loop = alg->reduce_path(0, {q.arrow_index("b1"), q.arrow_index("a1")});
  EXPECT_FALSE(loop.is_zero());
  auto a1 = AlgElem::basis(alg->arrow_basis(q.arrow_index("a1")));
  auto b1 = AlgElem::basis(alg->arrow_basis(q.arrow_index("b1")));
  EXPECT_EQ(alg->mul(a1, b1), loop);
  EXPECT_TRUE(alg->mul(b1, a1).is_zero());
}
