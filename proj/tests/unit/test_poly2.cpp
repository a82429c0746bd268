#include <hermite/poly2.hpp>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace hermite;

namespace {

Poly2 line_poly(Rational a, Rational b, Rational c) {
  Poly2 p(1);
  p.coeff(1, 0) = a;
  p.coeff(0, 1) = b;
  p.coeff(0, 0) = c;
  return p;
}

Poly2 random_poly(oracle::Sampler& s, int n) {
  Poly2 p(n);
  for (int d = 0; d <= n; ++d)
    for (int j = 0; j <= d; ++j) p.coeff(d - j, j) = s.rational(9, 3);
  return p;
}

}  // namespace

TEST(Poly2, LayoutAndDegree) {
  EXPECT_EQ(monomial_count(0), 1u);
  EXPECT_EQ(monomial_count(2), 6u);
  EXPECT_EQ(monomial_count(7), 36u);
  EXPECT_EQ(monomial_index(0, 0), 0u);
  EXPECT_EQ(monomial_index(1, 0), 1u);
  EXPECT_EQ(monomial_index(0, 1), 2u);
  EXPECT_EQ(monomial_index(2, 0), 3u);
  EXPECT_EQ(monomial_index(0, 2), 5u);
  Poly2 p(3);
  EXPECT_EQ(p.total_degree(), -1);
  p.coeff(1, 1) = 4;
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_THROW(Poly2(-1), std::invalid_argument);
}

TEST(Poly2, DerivativeAt) {
  // p = x^3 y + 2 y^2 ; D^{10} p = 3 x^2 y ; D^{11} p = 3 x^2 ; D^{02} p = 4.
  Poly2 p(4);
  p.coeff(3, 1) = 1;
  p.coeff(0, 2) = 2;
  const Point pt{2, 5};
  EXPECT_EQ(p(pt), 8 * 5 + 2 * 25);
  EXPECT_EQ(p.derivative_at(1, 0, pt), 3 * 4 * 5);
  EXPECT_EQ(p.derivative_at(1, 1, pt), 3 * 4);
  EXPECT_EQ(p.derivative_at(0, 2, pt), 4);
  EXPECT_EQ(p.derivative_at(4, 0, pt), 0);
}

TEST(Poly2, Formatting) {
  EXPECT_EQ(to_string(Poly2::from(Conic({1, 0, 0, 0, -1, 0}))), "x^2 - y");
  EXPECT_EQ(to_string(Poly2(2)), "0");
  Poly2 p(2);
  p.coeff(1, 1) = make_rational(-3, 2);
  p.coeff(0, 0) = 1;
  EXPECT_EQ(to_string(p), "-3/2*x*y + 1");
}

TEST(DivideExact, Examples) {
  const Poly2 f = line_poly(1, 1, 0);    // x + y
  const Poly2 g = line_poly(1, 0, -1);   // x - 1
  const auto q = divide_exact(f * g, f);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, g);
  EXPECT_EQ(q->degree_bound(), 1);

  const Poly2 parab = Poly2::from(Conic({1, 0, 0, 0, -1, 0}));
  EXPECT_FALSE(divide_exact(parab, line_poly(1, 0, 0)));
}

TEST(DivideExact, Errors) {
  EXPECT_THROW(divide_exact(Poly2(2), Poly2(1)), std::invalid_argument);
  Poly2 cubic(3);
  cubic.coeff(3, 0) = 1;
  EXPECT_THROW(divide_exact(Poly2(2), cubic), std::invalid_argument);
}

TEST(DivideExactProperties, ProductsDivideAndPerturbedDoNot) {
  oracle::Sampler s(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = s.uniform(1, 2);
    const int k = s.uniform(0, 3);
    Poly2 f = random_poly(s, m);
    if (f.total_degree() < 1) continue;
    const Poly2 q = random_poly(s, k);
    const Poly2 p = f * q;
    const auto back = divide_exact(p.widened(m + k), f);
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, q);
    if (f.total_degree() == m && m + k >= 1) {
      // Adding a nonzero constant keeps f | p false unless f is constant.
      Poly2 bumped = p;
      bumped.coeff(0, 0) += 1;
      const auto r = divide_exact(bumped, f);
      if (r) {
        EXPECT_EQ(f * *r, bumped);
      }
    }
  }
}

TEST(DivideExactProperties, ConicsWithFiveCommonPointsShareALine) {
  // Every conic through five collinear points contains that line as a factor.
  oracle::Sampler s(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pts = s.distinct_points(2);
    const Line l = line_through(pts[0], pts[1]);
    std::vector<Point> common;
    for (int t = 0; t < 5; ++t) {
      common.push_back({pts[0].x + t * (pts[1].x - pts[0].x), pts[0].y + t * (pts[1].y - pts[0].y)});
    }
    const auto family = conics_through(common);
    ASSERT_EQ(family.size(), 3u);
    for (const auto& q : family) EXPECT_TRUE(divide_exact(Poly2::from(q), Poly2::from(l)));
  }
}
