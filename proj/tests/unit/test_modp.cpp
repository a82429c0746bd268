#include <hermite/hermite.hpp>
#include <hermite/modp.hpp>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace hermite;

namespace {

std::vector<modp::Row> residues(const Matrix& m) {
  std::vector<modp::Row> out(m.rows(), modp::Row(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = *modp::reduce(m(r, c));
  }
  return out;
}

}  // namespace

TEST(ModP, FieldArithmetic) {
  oracle::Sampler s(41);
  for (int trial = 0; trial < 200; ++trial) {
    const modp::Residue a = modp::from_int(s.uniform(1, 1 << 30));
    EXPECT_EQ(modp::mul(a, modp::inverse(a)), 1u);
    EXPECT_EQ(modp::add(a, modp::sub(0, a)), 0u);
  }
  EXPECT_EQ(modp::from_int(-1), modp::kPrime - 1);
  EXPECT_EQ(*modp::reduce(Rational(Integer(1), Integer(2))), modp::inverse(2));
  const Integer p(std::to_string(modp::kPrime));
  EXPECT_EQ(modp::reduce(p), 0u);
  EXPECT_FALSE(modp::reduce(Rational(Integer(1), p)));
}

// Reduction can only lose rank, never gain it.
TEST(ModPProperties, RankNeverExceedsExactRank) {
  oracle::Sampler s(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(s.uniform(1, 7));
    const std::size_t cols = static_cast<std::size_t>(s.uniform(1, 7));
    const Matrix m = trial % 2 ? s.low_rank(rows, cols, static_cast<std::size_t>(s.uniform(1, 3)))
                               : s.matrix(rows, cols);
    EXPECT_LE(modp::rank(residues(m)), rank(m));
  }
}

TEST(ModPProperties, CorankOneKernelMatchesExactKernel) {
  oracle::Sampler s(43);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t cols = static_cast<std::size_t>(s.uniform(2, 7));
    const Matrix m = trial % 4 == 0 ? s.low_rank(cols - 1, cols, cols > 2 ? cols - 2 : 1)
                                    : s.matrix(cols - 1, cols);
    const auto v = modp::corank_one_kernel(residues(m));
    if (!v) continue;
    ++checked;
    const auto kernel = null_space(m);
    ASSERT_EQ(kernel.size(), 1u);
    Matrix k(0, cols);
    k.append_row(kernel[0]);
    const auto exact = residues(k)[0];
    std::size_t lead = 0;
    while ((*v)[lead] == 0) ++lead;
    ASSERT_NE(exact[lead], 0u);
    const modp::Residue scale = modp::mul((*v)[lead], modp::inverse(exact[lead]));
    for (std::size_t c = 0; c < cols; ++c) EXPECT_EQ((*v)[c], modp::mul(scale, exact[c]));
  }
  EXPECT_GT(checked, 100);
}

// The fast path inside is_solvable never changes the verdict of the exact rank.
TEST(ModPProperties, SolvabilityAgreesWithExactRank) {
  oracle::Sampler s(44);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = s.uniform(1, 4);
    const std::size_t count = static_cast<std::size_t>(s.uniform(1, 6));
    std::vector<int> mult;
    for (std::size_t k = 0; k < count; ++k) mult.push_back(s.uniform(0, 3));
    std::vector<Point> pts = s.distinct_points(count);
    if (trial % 3 == 0) {
      for (std::size_t k = 0; k < count; ++k) pts[k] = {Rational(static_cast<long>(k)), Rational(2 * static_cast<long>(k))};
    }
    const Problem p(Scheme(mult, n), pts);
    const std::size_t conds = static_cast<std::size_t>(n_sharp(p.scheme()));
    const bool exact = conds <= static_cast<std::size_t>(monomial_count(n)) && collocation_rank(p) == conds;
    EXPECT_EQ(is_solvable(p), exact) << to_string(p.scheme());
  }
}
