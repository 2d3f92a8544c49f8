#include <gtest/gtest.h>

#include "pervpn/matrix.hpp"

using namespace pervpn;

TEST(Scalar, ExactRationalArithmetic) {
  EXPECT_EQ(Scalar(1, 3) + Scalar(1, 6), Scalar(1, 2));
  EXPECT_EQ(Scalar(2) / Scalar(4), Scalar(1, 2));
  EXPECT_EQ(Scalar(-3, -6), Scalar(1, 2));
  EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
}

TEST(Scalar, LargeValuesPromote) {
  Scalar x(1LL << 62);
  Scalar y = x * x * x;
  EXPECT_FALSE(y.is_small());
  EXPECT_EQ(y / x / x, x);
  EXPECT_TRUE((y - y).is_zero());
}

TEST(Scalar, PrimeField) {
  FieldScope f(7);
  EXPECT_EQ(Scalar(3) * Scalar(5), Scalar(1));
  EXPECT_EQ(Scalar(1) / Scalar(3), Scalar(5));
  EXPECT_EQ(Scalar(-1), Scalar(6));
}

TEST(Scalar, RejectsNonPrime) {
  EXPECT_THROW(FieldScope f(4), std::invalid_argument);
  EXPECT_THROW(FieldScope f(1ULL << 31), std::invalid_argument);
  EXPECT_EQ(field_characteristic(), 0u);
}

TEST(Rref, HandExample) {
  auto r = rref(Matrix::from_rows({{2, 4}, {1, 2}}));
  EXPECT_EQ(r.reduced, Matrix::from_rows({{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
}

TEST(Rref, Identity) {
  auto r = rref(Matrix::identity(3));
  EXPECT_EQ(r.reduced, Matrix::identity(3));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Kernel, HandExample) {
  Matrix k = kernel_basis(Matrix::from_rows({{1, 1}}));
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k(0, 0), -k(1, 0));
  EXPECT_FALSE(k(0, 0).is_zero());
}

TEST(Kernel, ZeroMatrixKernelIsEverything) { EXPECT_EQ(kernel_basis(Matrix(2, 3)).cols(), 3u); }

TEST(Solve, HandExamples) {
  auto x = solve(Matrix::from_rows({{2}}), {Scalar(1)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Scalar(1, 2));
  EXPECT_FALSE(solve(Matrix::from_rows({{1, 1}, {1, 1}}), {Scalar(0), Scalar(1)}));
}

TEST(Determinant, HandExamples) {
  EXPECT_EQ(determinant(Matrix::from_rows({{1, 2}, {3, 4}})), Scalar(-2));
  EXPECT_TRUE(determinant(Matrix::from_rows({{1, 2}, {2, 4}})).is_zero());
  auto inv = inverse(Matrix::from_rows({{1, 2}, {3, 4}}));
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv * Matrix::from_rows({{1, 2}, {3, 4}}), Matrix::identity(2));
}

TEST(Spans, ExtendAndIntersect) {
  Matrix sub = Matrix::from_rows({{1}, {0}, {0}});
  auto idx = extend_basis(sub, Matrix::identity(3));
  EXPECT_EQ(idx.size(), 2u);
  Matrix a = Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}});
  Matrix b = Matrix::from_rows({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(intersect_spans(a, b).cols(), 1u);
  EXPECT_EQ(column_space(Matrix::from_rows({{1, 2, 3}, {2, 4, 6}})).cols(), 1u);
}
