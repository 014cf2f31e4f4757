#include <gtest/gtest.h>

#include <random>

#include "lqres/matrix.hpp"
#include "oracles.hpp"

using namespace lqres;
using Q = Rational;

namespace {

Matrix<Q> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int density) {
  Matrix<Q> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (static_cast<int>(rng() % 10) < density) m.at(i, j) = Q::from_int(static_cast<long>(rng() % 7) - 3);
  return m;
}

std::vector<std::vector<long long>> as_ints(const Matrix<Q>& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).value().get_num().get_si();
  return out;
}

}  // namespace

TEST(Matrix, IdentitySolveReturnsRightHandSide) {
  Matrix<Q> id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = Q::from_int(1);
  std::vector<Q> v{Q::from_int(4), Q::parse("-1/2"), Q::from_int(0)};
  auto x = solve(id, v);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, v);
}

TEST(Matrix, KernelOfOneByTwo) {
  auto m = matrix_from_rows<Q>({{Q::from_int(1), Q::from_int(1)}}, 2);
  auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  // span{(1,-1)}
  EXPECT_TRUE((k[0][0] + k[0][1]).is_zero());
  EXPECT_FALSE(k[0][0].is_zero());
}

TEST(Matrix, InconsistentSystemHasNoSolution) {
  auto m = matrix_from_rows<Q>({{Q::from_int(1), Q::from_int(1)}, {Q::from_int(2), Q::from_int(2)}}, 2);
  EXPECT_FALSE(solve(m, {Q::from_int(1), Q::from_int(3)}));
  auto x = solve(m, {Q::from_int(1), Q::from_int(2)});
  ASSERT_TRUE(x);
  // free variable set to zero
  EXPECT_EQ((*x)[0], Q::from_int(1));
  EXPECT_TRUE((*x)[1].is_zero());
}

TEST(Matrix, RankNullityAndOracleRank) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = rng() % 7, c = rng() % 7;
    auto m = random_matrix(rng, r, c, static_cast<int>(rng() % 10));
    const auto rk = rank(m);
    auto ker = kernel_basis(m);
    EXPECT_EQ(rk + ker.size(), c);
    for (const auto& v : ker) {
      Matrix<Q> col(c, 1);
      for (std::size_t j = 0; j < c; ++j) col.at(j, 0) = v[j];
      EXPECT_TRUE((m * col).is_zero());
    }
    if (r > 0 && c > 0) EXPECT_EQ(rk, oracle::rank_mod(as_ints(m)));
  }
}

TEST(Matrix, SolutionsSatisfyTheSystem) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    auto m = random_matrix(rng, 4, 5, 6);
    Matrix<Q> x0(5, 1);
    for (std::size_t j = 0; j < 5; ++j) x0.at(j, 0) = Q::from_int(static_cast<long>(rng() % 5) - 2);
    auto b = m * x0;
    std::vector<Q> bv(4);
    for (std::size_t i = 0; i < 4; ++i) bv[i] = b.at(i, 0);
    auto x = solve(m, bv);
    ASSERT_TRUE(x);
    Matrix<Q> xc(5, 1);
    for (std::size_t j = 0; j < 5; ++j) xc.at(j, 0) = (*x)[j];
    EXPECT_EQ(m * xc, b);
  }
}

TEST(Matrix, RowReduceIsDeterministic) {
  std::mt19937_64 rng(10);
  auto m = random_matrix(rng, 6, 6, 5);
  auto a = row_reduce(m), b = row_reduce(m);
  EXPECT_EQ(a.reduced, b.reduced);
  EXPECT_EQ(a.pivot_cols, b.pivot_cols);
}

TEST(Matrix, ModularRankBoundsRationalRank) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 1 + static_cast<int>(rng() % 3));
    auto r = modular_rank(m);
    ASSERT_TRUE(r);
    EXPECT_LE(*r, rank(m));
    EXPECT_EQ(rank(m), row_reduce(m).rank());
  }
  // entries that agree mod 2^31 - 1: rank drops
  Matrix<Q> m(2, 2);
  m.at(0, 0) = Q::from_int(1);
  m.at(0, 1) = Q::from_int(1);
  m.at(1, 0) = Q::from_int(1);
  m.at(1, 1) = Q::from_int(2147483648L);
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(modular_rank(m), std::optional<std::size_t>(1));
  m.at(1, 1) = Q::parse("1/2147483647");
  EXPECT_FALSE(modular_rank(m));
}
