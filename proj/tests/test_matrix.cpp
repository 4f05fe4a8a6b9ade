#include <gtest/gtest.h>

#include <random>

#include "magicspectra/linear_solve.hpp"
#include "magicspectra/matrix.hpp"

using namespace magicspectra;

TEST(Matrix, BasicOps) {
  DenseMatrix a(2, 3);
  a(0, 0) = 1;
  a(0, 2) = 2;
  a(1, 1) = -3;
  const DenseMatrix t = a.transposed();
  EXPECT_EQ(t.rows(), 3u);
  EXPECT_EQ(t(2, 0), 2.0);
  EXPECT_EQ(t(1, 1), -3.0);

  const DenseMatrix i3 = DenseMatrix::identity(3);
  EXPECT_EQ(a * i3, a);

  const DenseMatrix j3 = DenseMatrix::reverse_identity(3);
  DenseMatrix b(3, 1);
  b(0, 0) = 1;
  b(1, 0) = 2;
  b(2, 0) = 3;
  const DenseMatrix rb = j3 * b;
  EXPECT_EQ(rb(0, 0), 3.0);
  EXPECT_EQ(rb(2, 0), 1.0);
}

TEST(Matrix, Norms) {
  DenseMatrix a(2, 2);
  a(0, 0) = 3;
  a(1, 1) = 4;
  EXPECT_DOUBLE_EQ(frobenius_norm(a), 5.0);
  EXPECT_DOUBLE_EQ(max_abs(a), 4.0);
  EXPECT_DOUBLE_EQ(trace(a), 7.0);
}

TEST(SolveLinear, IdentitySolveReturnsRhs) {
  DenseMatrix b(4, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = static_cast<double>(3 * i + j);
  const DenseMatrix x = solve_linear(DenseMatrix::identity(4), b);
  EXPECT_EQ(x, b);
}

TEST(SolveLinear, DiagonalSolve) {
  DenseMatrix a(2, 2);
  a(0, 0) = 2;
  a(1, 1) = 4;
  DenseMatrix b(2, 1);
  b(0, 0) = 2;
  b(1, 0) = 8;
  const DenseMatrix x = solve_linear(a, b);
  EXPECT_DOUBLE_EQ(x(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(x(1, 0), 2.0);
}

TEST(SolveLinear, ResidualBoundOnRandomSystems) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-10, 10);
  for (int rep = 0; rep < 25; ++rep) {
    DenseMatrix a(6, 6), b(6, 3);
    for (auto& v : a.data()) v = dist(rng);
    for (auto& v : b.data()) v = dist(rng);
    DenseMatrix x;
    try {
      x = solve_linear(a, b);
    } catch (const SingularMatrixError&) {
      continue;  // random integer matrix happened to be singular
    }
    const DenseMatrix r = a * x - b;
    EXPECT_LE(frobenius_norm(r),
              1e-10 * frobenius_norm(a) * std::max(frobenius_norm(x), 1.0));
  }
}

TEST(SolveLinear, SingularMatrixThrows) {
  DenseMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  const DenseMatrix b = DenseMatrix::identity(2);
  EXPECT_THROW(solve_linear(a, b), SingularMatrixError);
}

TEST(SolveLinear, DimensionMismatchThrows) {
  EXPECT_THROW(solve_linear(DenseMatrix(2, 2), DenseMatrix(3, 1)),
               InvalidDimensionError);
  EXPECT_THROW(solve_linear(DenseMatrix(2, 3), DenseMatrix(2, 1)),
               InvalidDimensionError);
}

TEST(Determinant, MatchesCofactorExpansionOnSmallMatrices) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int rep = 0; rep < 50; ++rep) {
    DenseMatrix a(3, 3);
    for (auto& v : a.data()) v = dist(rng);
    const double expect =
        a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
        a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
        a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    EXPECT_NEAR(determinant(a), expect, 1e-9 * std::max(1.0, std::abs(expect)));
  }
}
