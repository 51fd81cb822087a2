#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "relkummer/fpmatrix.hpp"

using namespace relkummer;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::uint32_t p,
                       std::uint32_t zero_bias = 0) {
  FpMatrix m(rows, cols, p);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      // bias towards zeros so that rank-deficient cases are common
      if (uniform_below(rng, zero_bias + 1) != 0) continue;
      m(i, j) = static_cast<std::uint32_t>(uniform_below(rng, p));
    }
  }
  return m;
}

}  // namespace

TEST(FpMatrix, RankMatchesEnumeration) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + uniform_below(rng, 4), cols = 1 + uniform_below(rng, 4);
      const FpMatrix a = random_matrix(rng, rows, cols, p, trial % 3);
      EXPECT_EQ(fp::rank(a), oracle::rank_by_enumeration(a));
      EXPECT_EQ(fp::rank(a), fp::rank(a.transpose()));
    }
  }
}

TEST(FpMatrix, NullspaceIsKernel) {
  std::mt19937_64 rng(6);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const FpMatrix a = random_matrix(rng, 1 + uniform_below(rng, 5), 1 + uniform_below(rng, 6), p, 1);
      const auto basis = fp::nullspace(a);
      EXPECT_EQ(basis.size() + fp::rank(a), a.cols());
      for (const auto& v : basis) EXPECT_TRUE(fp::is_zero(fp::apply(a, v)));
      EXPECT_EQ(fp::span_rank(basis, a.cols(), p), basis.size());
    }
  }
}

TEST(FpMatrix, InverseAndSolve) {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 11u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + uniform_below(rng, 5);
      const FpMatrix a = random_matrix(rng, n, n, p);
      const auto inv = fp::inverse(a);
      EXPECT_EQ(inv.has_value(), fp::rank(a) == n);
      if (inv) {
        EXPECT_EQ(fp::multiply(a, *inv), FpMatrix::identity(n, p));
        EXPECT_EQ(fp::multiply(*inv, a), FpMatrix::identity(n, p));
      }
      FpVector b(n);
      for (auto& x : b) x = static_cast<std::uint32_t>(uniform_below(rng, p));
      const auto x = fp::solve(a, b);
      if (x) EXPECT_EQ(fp::apply(a, *x), b);
      if (inv) EXPECT_TRUE(x.has_value());
    }
  }
  EXPECT_EQ(fp::inverse(3, 7), 5u);
}

TEST(FpMatrix, ParallelMultiplyMatchesSerial) {
  std::mt19937_64 rng(8);
  for (std::size_t n : {1u, 7u, 40u, 130u}) {
    const FpMatrix a = random_matrix(rng, n, n + 3, 5), b = random_matrix(rng, n + 3, n, 5);
    EXPECT_EQ(fp::multiply(a, b), fp::multiply_serial(a, b));
  }
}

TEST(FpMatrix, PowerAndShapes) {
  FpMatrix shift(3, 3, 3);
  shift(1, 0) = 1;
  shift(2, 1) = 1;
  EXPECT_FALSE(fp::power(shift, 2).is_zero());
  EXPECT_TRUE(fp::power(shift, 3).is_zero());
  EXPECT_EQ(fp::power(shift, 0), FpMatrix::identity(3, 3));
  const FpMatrix empty = FpMatrix::from_columns({}, 4, 3);
  EXPECT_EQ(empty.rows(), 4u);
  EXPECT_EQ(empty.cols(), 0u);
  EXPECT_EQ(fp::rank(empty), 0u);
  EXPECT_EQ(fp::to_string(FpVector{1, 0, 2}), "(1,0,2)");
}
