#include <hermite/exactla.hpp>
#include <hermite/geometry.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support/oracles.hpp"

using namespace hermite;

namespace {

// Rows (1, x, y, x^2, xy, y^2) of six points on y = x^2.
Matrix parabola_rows() {
  Matrix m(0, 6);
  for (int t : {-2, -1, 0, 1, 2, 3}) {
    const Rational x = t, y = t * t;
    const Vector row{Rational(1), x, y, x * x, x * y, y * y};
    m.append_row(row);
  }
  return m;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational(" -10/5"), Rational(-2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("12/4")), "3");
}

TEST(Rational, ParseRejectsMalformed) {
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1//2"), std::invalid_argument);
}

TEST(Rank, Identity) {
  EXPECT_EQ(rank(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3u);
}

TEST(Rank, ProportionalRows) {
  EXPECT_EQ(rank(Matrix{{1, 2, 3}, {2, 4, 6}}), 1u);
}

TEST(Rank, SixPointsOnParabola) {
  const Matrix m = parabola_rows();
  ASSERT_EQ(oracle::gauss_rank(m), 5u);
  EXPECT_EQ(rank(m), 5u);
}

TEST(Rank, DegenerateShapes) {
  EXPECT_EQ(rank(Matrix(0, 4)), 0u);
  EXPECT_EQ(rank(Matrix(3, 0)), 0u);
  EXPECT_EQ(null_space(Matrix(0, 3)).size(), 3u);
  EXPECT_TRUE(null_space(Matrix(2, 0)).empty());
}

TEST(NullSpace, Identity) {
  EXPECT_TRUE(null_space(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).empty());
}

TEST(NullSpace, OneByTwo) {
  const auto basis = null_space(Matrix{{1, -1}});
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0][0], basis[0][1]);
  EXPECT_NE(sgn(basis[0][0]), 0);
}

TEST(NullSpace, FivePointsGeneralPosition) {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {0, 1}, {2, 3}, {-1, 5}};
  const Matrix m = veronese_matrix(pts);
  ASSERT_EQ(oracle::gauss_rank(m), 5u);
  const auto basis = null_space(m);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_TRUE(is_zero_vector(multiply(m, basis[0])));
}

TEST(Solve, Identity) {
  const Vector b{Rational(3), make_rational(-1, 2), Rational(7)};
  const auto x = solve(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(Solve, FreeVariablesAreZero) {
  const auto x = solve(Matrix{{1, 1}}, Vector{Rational(2)});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Vector{Rational(2), Rational(0)}));
}

TEST(Solve, Inconsistent) {
  EXPECT_FALSE(solve(Matrix{{1}, {1}}, Vector{Rational(0), Rational(1)}));
}

TEST(Solve, RejectsWrongLength) {
  EXPECT_THROW(solve(Matrix{{1, 1}}, Vector{Rational(1), Rational(2)}), std::invalid_argument);
}

// Randomized checks of the rank/kernel/solve contracts against the
// independent Gauss-Jordan oracle.
TEST(ExactLaProperties, RankNullityAndKernel) {
  oracle::Sampler s(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(s.uniform(0, 7));
    const std::size_t cols = static_cast<std::size_t>(s.uniform(0, 7));
    const Matrix m = trial % 3 == 0 && rows && cols
                         ? s.low_rank(rows, cols, static_cast<std::size_t>(s.uniform(1, 3)))
                         : s.matrix(rows, cols);
    const std::size_t rk = rank(m);
    EXPECT_EQ(rk, oracle::gauss_rank(m));
    EXPECT_EQ(rk, rank(m.transpose()));
    const auto kernel = null_space(m);
    EXPECT_EQ(cols, rk + kernel.size());
    for (const auto& v : kernel) EXPECT_TRUE(is_zero_vector(multiply(m, v)));
  }
}

TEST(ExactLaProperties, SolveMatchesAugmentedRank) {
  oracle::Sampler s(12);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(s.uniform(1, 6));
    const std::size_t cols = static_cast<std::size_t>(s.uniform(1, 6));
    const Matrix m = s.low_rank(rows, cols, static_cast<std::size_t>(s.uniform(1, 3)));
    Vector b(rows);
    if (trial % 2 == 0) {
      // Consistent by construction.
      Vector x0(cols);
      for (auto& v : x0) v = s.rational();
      b = multiply(m, x0);
    } else {
      for (auto& v : b) v = s.rational();
    }
    Matrix aug(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
      aug(r, cols) = b[r];
    }
    const auto x = solve(m, b);
    if (x) {
      EXPECT_EQ(multiply(m, *x), b);
      EXPECT_EQ(oracle::gauss_rank(aug), oracle::gauss_rank(m));
    } else {
      EXPECT_GT(oracle::gauss_rank(aug), oracle::gauss_rank(m));
    }
    if (trial % 2 == 0) {
      EXPECT_TRUE(x.has_value());
    }
  }
}

TEST(ExactLaProperties, RankInvariantUnderPermutationAndScaling) {
  oracle::Sampler s(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(s.uniform(1, 6));
    const std::size_t cols = static_cast<std::size_t>(s.uniform(1, 6));
    const Matrix m = trial % 2 ? s.matrix(rows, cols)
                               : s.low_rank(rows, cols, static_cast<std::size_t>(s.uniform(1, 3)));
    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), s.engine());
    std::shuffle(cp.begin(), cp.end(), s.engine());
    Matrix t(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Rational scale = s.nonzero();
      for (std::size_t c = 0; c < cols; ++c) t(r, c) = scale * m(rp[r], cp[c]);
    }
    EXPECT_EQ(rank(m), rank(t));
  }
}

TEST(ExactLaProperties, LargerCollocationSizedMatrixIsFast) {
  // 36 x 36 dense rational matrix (dim Pi_7) with moderately sized entries.
  oracle::Sampler s(14);
  const Matrix m = s.matrix(36, 36, 0);
  EXPECT_EQ(rank(m), oracle::gauss_rank(m));
}
