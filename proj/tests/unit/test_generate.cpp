#include <hermite/certifier.hpp>
#include <hermite/generate.hpp>
#include <hermite/hermite.hpp>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace hermite;

namespace {

ConfigRequest request(ConfigKind kind, std::uint64_t seed, std::optional<int> w = {},
                      std::optional<int> w2 = {}) {
  ConfigRequest r;
  r.kind = kind;
  r.seed = seed;
  r.weight = w;
  r.second_weight = w2;
  return r;
}

bool general_position(const std::vector<Point>& pts) {
  const std::size_t s = pts.size();
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      for (std::size_t c = b + 1; c < s; ++c)
        if (oracle::collinear(pts[a], pts[b], pts[c])) return false;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    if (__builtin_popcount(mask) != 6) continue;
    std::vector<Point> six;
    for (std::size_t k = 0; k < s; ++k) {
      if (mask >> k & 1) six.push_back(pts[k]);
    }
    if (oracle::veronese_rank(six) < 6) return false;
  }
  return true;
}

}  // namespace

TEST(GenerateConfig, DeterministicFromSeed) {
  const Scheme s({2, 2, 1, 1, 1}, 3);
  for (auto kind : {ConfigKind::general, ConfigKind::collinear_loaded, ConfigKind::coconic,
                    ConfigKind::near_degenerate}) {
    EXPECT_EQ(generate_config(s, request(kind, 5, 4)), generate_config(s, request(kind, 5, 4)));
    EXPECT_FALSE(generate_config(s, request(kind, 5, 4)) == generate_config(s, request(kind, 6, 4)));
  }
}

TEST(GenerateConfig, GeneralPositionIsChecked) {
  const Scheme s({1, 1, 1, 1, 1, 1, 1, 1}, 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SamplingBounds tight{6, 2, 10'000};  // small grid: rejections do happen
    ConfigRequest r = request(ConfigKind::general, seed);
    r.bounds = tight;
    const Problem p = generate_config(s, r);
    EXPECT_TRUE(general_position(p.nodes()));
  }
}

TEST(GenerateConfig, GeneralPositionFailsLoudly) {
  // Coordinates in {-1, 0, 1} leave room for 9 distinct points only.
  ConfigRequest r = request(ConfigKind::general, 1);
  r.bounds = {1, 1, 50};
  EXPECT_THROW(generate_config(Scheme({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 3), r), GenerationError);
}

TEST(GenerateConfig, CollinearLoadedPlacesExactWeight) {
  const Scheme s({2, 2, 1, 1, 1}, 3);
  for (int w : {2, 3, 4, 5, 6, 7}) {
    const Problem p = generate_config(s, request(ConfigKind::collinear_loaded, 9, w));
    EXPECT_EQ(max_line_weight(p).weight, std::max(w, 4)) << "w=" << w;
    EXPECT_EQ(oracle::brute_max_line_weight(p), max_line_weight(p).weight);
  }
  // n + 2 = 5 on a line: not solvable.
  const Problem over = generate_config(s, request(ConfigKind::collinear_loaded, 3, 5));
  EXPECT_FALSE(is_solvable(over));
}

TEST(GenerateConfig, CoconicPlacesNodesOnParabola) {
  const Scheme s({1, 1, 1, 1, 1, 1}, 2);
  const Problem p = generate_config(s, request(ConfigKind::coconic, 4));
  for (const auto& q : p.nodes()) EXPECT_EQ(q.y, q.x * q.x);
  EXPECT_FALSE(is_solvable(p));  // 2n + 2 on one conic
  EXPECT_EQ(max_conic_weight(p).weight, 6);
}

TEST(GenerateConfig, LinePairLoadsBothLines) {
  const Scheme s({1, 1, 1, 1, 1, 1, 1, 1}, 3);
  const Problem p = generate_config(s, request(ConfigKind::line_pair, 8, 4, 4));
  EXPECT_EQ(max_line_weight(p).weight, 4);
  EXPECT_EQ(max_conic_weight(p).weight, 8);
  EXPECT_EQ(oracle::brute_max_conic_weight(p), 8);
  EXPECT_FALSE(is_solvable(p));
}

TEST(GenerateConfig, NearDegenerateIsCloseButExactlyOffTheLine) {
  const Scheme s({1, 1, 1, 1, 1}, 3);
  ConfigRequest degenerate = request(ConfigKind::collinear_loaded, 12);
  ConfigRequest near = request(ConfigKind::near_degenerate, 12);
  const Problem a = generate_config(s, degenerate);
  const Problem b = generate_config(s, near);
  const Rational eps = make_rational(1, 1'000'000'000);
  for (std::size_t k = 0; k < s.size(); ++k) {
    EXPECT_LE(abs(a.nodes()[k].x - b.nodes()[k].x), eps);
    EXPECT_LE(abs(a.nodes()[k].y - b.nodes()[k].y), eps);
  }
  EXPECT_EQ(max_line_weight(a).weight, 5);
  EXPECT_FALSE(is_solvable(a));
}

TEST(GenerateConfig, UnsatisfiableRequests) {
  const Scheme s({3, 3}, 4);
  EXPECT_THROW(generate_config(s, request(ConfigKind::collinear_loaded, 1, 4)), GenerationError);
  EXPECT_THROW(generate_config(s, request(ConfigKind::coconic, 1, 7)), GenerationError);
  EXPECT_THROW(generate_config(s, request(ConfigKind::line_pair, 1, 3)), GenerationError);
  EXPECT_THROW(generate_config(s, request(ConfigKind::line_pair, 1, 3, 6)), GenerationError);
  ConfigRequest bad_base = request(ConfigKind::near_degenerate, 1);
  bad_base.base = ConfigKind::general;
  EXPECT_THROW(generate_config(s, bad_base), GenerationError);
  EXPECT_THROW(generate_config(Scheme({}, 2), request(ConfigKind::general, 1)), GenerationError);
}

// Anchors tied to the theorems: a generic node set for a scheme inside both
// conditions is solvable; loading one line or one conic past its bound is not.
TEST(GenerateConfig, TheoremExamples) {
  const Scheme fits({2, 2, 1, 1}, 3);  // n1 + n2 = 4 = n + 1, total 6 <= 2n + 2
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_TRUE(is_solvable(generate_config(fits, request(ConfigKind::general, seed))));
  }
  const Scheme eight({2, 1, 1, 1, 1, 1, 1}, 3);  // total 8 = 2n + 2, not over
  ASSERT_TRUE(is_le(eight));
  EXPECT_FALSE(is_solvable(generate_config(eight, request(ConfigKind::coconic, 2, 8))));
  EXPECT_FALSE(is_solvable(generate_config(eight, request(ConfigKind::collinear_loaded, 2, 5))));
}
