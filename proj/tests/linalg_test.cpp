#include <gtest/gtest.h>

#include <random>

#include "dkit/linalg.hpp"
#include "oracles.hpp"

using namespace dkit;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, bool complex = true) {
  std::uniform_int_distribution<int> d(-5, 5);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = GaussianRational(d(rng), complex ? d(rng) : 0);
  }
  return m;
}

std::vector<std::vector<GaussianRational>> rows_of(const Matrix& m) {
  std::vector<std::vector<GaussianRational>> out(m.rows(), std::vector<GaussianRational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

Vector times(const Matrix& m, const Vector& v) {
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

}  // namespace

TEST(Linalg, DeterminantMatchesLaplace) {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int t = 0; t < 20; ++t) {
      auto m = random_matrix(rng, n, n);
      EXPECT_EQ(determinant(m), oracle::laplace(rows_of(m)));
    }
  }
  Matrix singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  EXPECT_TRUE(determinant(singular).is_zero());
  EXPECT_THROW(determinant(Matrix(2, 3)), std::invalid_argument);
}

TEST(Linalg, NullSpaceIsExactAndComplete) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    // Rank-deficient by construction: product of 4x2 and 2x6.
    Matrix a = random_matrix(rng, 4, 2), b = random_matrix(rng, 2, 6);
    Matrix m(4, 6);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        for (std::size_t k = 0; k < 2; ++k) m(i, j) += a(i, k) * b(k, j);
      }
    }
    const std::size_t r = rank(m);
    auto ns = null_space(m);
    EXPECT_EQ(ns.size() + r, 6u);
    for (const auto& v : ns) {
      for (const auto& x : times(m, v)) EXPECT_TRUE(x.is_zero());
      std::size_t k = 0;
      while (v[k].is_zero()) ++k;
      EXPECT_TRUE(v[k].is_one());
    }
  }
}

TEST(Linalg, SolveConsistentAndInconsistent) {
  std::mt19937_64 rng(23);
  auto m = random_matrix(rng, 3, 3, false);
  Vector x{GaussianRational(1), GaussianRational(Rational(1, 2), 2), GaussianRational(-3)};
  auto b = times(m, x);
  auto s = solve(m, b);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(times(m, *s), b);

  Matrix z(2, 1);
  z(0, 0) = 1;
  z(1, 0) = 1;
  EXPECT_FALSE(solve(z, Vector{GaussianRational(1), GaussianRational(2)}).has_value());
}
