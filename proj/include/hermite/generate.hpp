#pragma once

// Seeded node-set generators: generic layouts and the degenerate layouts that
// stress the line and conic conditions.
//
//   general           no 3 nodes collinear, no 6 on one conic
//   collinear_loaded  a subset of prescribed total weight on a random line
//   coconic           a subset of prescribed total weight on y = x^2
//   line_pair         two disjoint subsets of prescribed weights on two lines
//   near_degenerate   a collinear_loaded or coconic layout, every coordinate
//                     then moved by a rational of magnitude <= 1e-9
//
// Nodes outside the loaded subsets are drawn at random and kept off the
// loaded curves. Output is a pure function of (scheme, request).

#include <hermite/geometry.hpp>
#include <hermite/modp.hpp>
#include <hermite/scheme.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermite {

enum class ConfigKind { general, collinear_loaded, coconic, line_pair, near_degenerate };

inline std::string to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::general: return "general";
    case ConfigKind::collinear_loaded: return "collinear_loaded";
    case ConfigKind::coconic: return "coconic";
    case ConfigKind::line_pair: return "line_pair";
    case ConfigKind::near_degenerate: return "near_degenerate";
  }
  return "?";
}

struct SamplingBounds {
  long max_num = 10'000;
  long max_den = 1'000;
  int retries = 1'000;
};

struct ConfigRequest {
  ConfigKind kind = ConfigKind::general;
  std::uint64_t seed = 0;
  // Weight on the loaded curve (first line for line_pair). Defaults to the
  // total multiplicity.
  std::optional<int> weight;
  std::optional<int> second_weight;  // line_pair only; required there
  // Layout perturbed by near_degenerate: collinear_loaded or coconic.
  ConfigKind base = ConfigKind::collinear_loaded;
  SamplingBounds bounds;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

class Draw {
 public:
  Draw(std::uint64_t seed, const SamplingBounds& b) : rng_(seed), b_(b) {}

  Rational rational() { return rational(b_.max_num, b_.max_den); }

  Rational rational(long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    const long p = num(rng_);
    const long q = den(rng_);
    Rational r{Integer(p), Integer(q)};
    r.canonicalize();
    return r;
  }

  Point point() {
    Rational x = rational();
    Rational y = rational();
    return {std::move(x), std::move(y)};
  }

  // Magnitude <= 1e-9: a / (1e9 b) with |a| <= b.
  Rational tiny() {
    std::uniform_int_distribution<long> den(1, 1000);
    const long b = den(rng_);
    std::uniform_int_distribution<long> num(-b, b);
    const long a = num(rng_);
    Rational r{Integer(a), Integer(b) * Integer(1'000'000'000)};
    r.canonicalize();
    return r;
  }

  std::mt19937_64& engine() { return rng_; }
  const SamplingBounds& bounds() const { return b_; }

 private:
  std::mt19937_64 rng_;
  SamplingBounds b_;
};

inline bool collinear3(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) == 0;
}

inline std::optional<modp::Row> veronese_residue(const Point& p) {
  const auto x = modp::reduce(p.x), y = modp::reduce(p.y);
  if (!x || !y) return std::nullopt;
  return modp::Row{modp::mul(*x, *x), modp::mul(*x, *y), modp::mul(*y, *y), *x, *y, 1};
}

inline bool coconic6(const std::vector<Point>& six) {
  std::vector<modp::Row> rows;
  for (const auto& p : six) {
    auto r = veronese_residue(p);
    if (!r) break;
    rows.push_back(std::move(*r));
  }
  if (rows.size() == 6 && modp::rank(rows) == 6) return false;
  return rank(veronese_matrix(six)) < 6;
}

// Would adding q to pts create 3 collinear or 6 co-conic points?
inline bool breaks_general_position(const std::vector<Point>& pts, const Point& q) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == q) return true;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (collinear3(pts[i], pts[j], q)) return true;
    }
  }
  if (pts.size() < 5) return false;
  std::vector<Point> six(6);
  six[5] = q;
  bool bad = false;
  std::vector<std::size_t> idx(5);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t s = pts.size();
  while (!bad) {
    for (std::size_t t = 0; t < 5; ++t) six[t] = pts[idx[t]];
    bad = coconic6(six);
    std::size_t t = 5;
    while (t > 0 && idx[t - 1] == s - 5 + t - 1) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t u = t; u < 5; ++u) idx[u] = idx[u - 1] + 1;
  }
  return bad;
}

inline std::vector<Point> general_position(Draw& draw, std::size_t count) {
  std::vector<Point> pts;
  int failures = 0;
  while (pts.size() < count) {
    Point q = draw.point();
    if (breaks_general_position(pts, q)) {
      if (++failures > draw.bounds().retries) {
        throw GenerationError("general position: retry budget exhausted after " +
                              std::to_string(failures - 1) + " rejections");
      }
      continue;
    }
    pts.push_back(std::move(q));
  }
  return pts;
}

// Indices of a subset of mult with total exactly `target`, searched in a
// seeded random order; nullopt if none.
inline std::optional<std::vector<std::size_t>> pick_subset(const std::vector<int>& mult,
                                                           const std::vector<bool>& taken,
                                                           int target, std::mt19937_64& rng) {
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < mult.size(); ++k) {
    if (!taken[k]) order.push_back(k);
  }
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, int)> dfs = [&](std::size_t pos, int left) -> bool {
    if (left == 0) return true;
    if (left <= 0 || pos == order.size()) return false;
    chosen.push_back(order[pos]);
    if (dfs(pos + 1, left - mult[order[pos]])) return true;
    chosen.pop_back();
    return dfs(pos + 1, left);
  };
  if (target < 0 || !dfs(0, target)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

inline Line random_line(Draw& draw) {
  while (true) {
    const Point a = draw.point(), b = draw.point();
    if (!(a == b)) return line_through(a, b);
  }
}

// A random point on l, by its free coordinate.
inline Point point_on(Draw& draw, const Line& l) {
  const Rational t = draw.rational();
  if (sgn(l.b()) != 0) return {t, -(l.a() * t + l.c()) / l.b()};
  return {-(l.c()) / l.a(), t};
}

inline bool on_parabola(const Point& p) { return p.y == p.x * p.x; }

class Layout {
 public:
  Layout(Draw& draw, std::size_t count) : draw_(draw), pts_(count), placed_(count, false) {}

  void place(std::size_t k, Point p) {
    pts_[k] = std::move(p);
    placed_[k] = true;
  }

  bool used(const Point& p) const {
    for (std::size_t k = 0; k < pts_.size(); ++k) {
      if (placed_[k] && pts_[k] == p) return true;
    }
    return false;
  }

  template <typename Gen>
  void place_fresh(std::size_t k, Gen&& gen) {
    for (int tries = 0; tries <= draw_.bounds().retries; ++tries) {
      Point p = gen();
      if (!used(p)) {
        place(k, std::move(p));
        return;
      }
    }
    throw GenerationError("could not place a distinct node");
  }

  // Remaining nodes: random, distinct, avoiding every curve in `avoid`.
  template <typename Avoid>
  void fill(Avoid&& avoid) {
    for (std::size_t k = 0; k < pts_.size(); ++k) {
      if (placed_[k]) continue;
      place_fresh(k, [&] {
        Point p = draw_.point();
        while (avoid(p)) p = draw_.point();
        return p;
      });
    }
  }

  std::vector<Point> points() const { return pts_; }

 private:
  Draw& draw_;
  std::vector<Point> pts_;
  std::vector<bool> placed_;
};

inline std::vector<Point> loaded_line(Draw& draw, const Scheme& s, int weight) {
  std::vector<bool> taken(s.size(), false);
  const auto subset = pick_subset(s.multiplicities(), taken, weight, draw.engine());
  if (!subset) {
    throw GenerationError("no node subset of " + to_string(s) + " has weight " +
                          std::to_string(weight));
  }
  const Line l = random_line(draw);
  Layout layout(draw, s.size());
  for (auto k : *subset) layout.place_fresh(k, [&] { return point_on(draw, l); });
  layout.fill([&](const Point& p) { return l.contains(p); });
  return layout.points();
}

inline std::vector<Point> loaded_parabola(Draw& draw, const Scheme& s, int weight) {
  std::vector<bool> taken(s.size(), false);
  const auto subset = pick_subset(s.multiplicities(), taken, weight, draw.engine());
  if (!subset) {
    throw GenerationError("no node subset of " + to_string(s) + " has weight " +
                          std::to_string(weight));
  }
  Layout layout(draw, s.size());
  // Parameters are kept small so powers stay short.
  for (auto k : *subset) {
    layout.place_fresh(k, [&] {
      Rational t = draw.rational(100, 10);
      Rational t2 = t * t;
      return Point{std::move(t), std::move(t2)};
    });
  }
  layout.fill(on_parabola);
  return layout.points();
}

inline std::vector<Point> loaded_line_pair(Draw& draw, const Scheme& s, int w1, int w2) {
  std::vector<bool> taken(s.size(), false);
  const auto first = pick_subset(s.multiplicities(), taken, w1, draw.engine());
  if (!first) {
    throw GenerationError("no node subset of " + to_string(s) + " has weight " +
                          std::to_string(w1));
  }
  for (auto k : *first) taken[k] = true;
  const auto second = pick_subset(s.multiplicities(), taken, w2, draw.engine());
  if (!second) {
    throw GenerationError("no node subset of " + to_string(s) + " disjoint from the first has weight " +
                          std::to_string(w2));
  }
  const Line l1 = random_line(draw);
  Line l2 = random_line(draw);
  while (l2 == l1) l2 = random_line(draw);
  Layout layout(draw, s.size());
  // Nodes on one line stay off the other.
  for (auto k : *first) {
    layout.place_fresh(k, [&] {
      Point p = point_on(draw, l1);
      while (l2.contains(p)) p = point_on(draw, l1);
      return p;
    });
  }
  for (auto k : *second) {
    layout.place_fresh(k, [&] {
      Point p = point_on(draw, l2);
      while (l1.contains(p)) p = point_on(draw, l2);
      return p;
    });
  }
  layout.fill([&](const Point& p) { return l1.contains(p) || l2.contains(p); });
  return layout.points();
}

}  // namespace detail

inline Problem generate_config(const Scheme& scheme, const ConfigRequest& req) {
  if (scheme.size() == 0) throw GenerationError("empty scheme");
  detail::Draw draw(req.seed, req.bounds);
  const int total = scheme.total_multiplicity();
  const int weight = req.weight.value_or(total);

  std::vector<Point> pts;
  switch (req.kind) {
    case ConfigKind::general:
      pts = detail::general_position(draw, scheme.size());
      break;
    case ConfigKind::collinear_loaded:
      pts = detail::loaded_line(draw, scheme, weight);
      break;
    case ConfigKind::coconic:
      pts = detail::loaded_parabola(draw, scheme, weight);
      break;
    case ConfigKind::line_pair:
      if (!req.second_weight) throw GenerationError("line_pair needs a second weight");
      pts = detail::loaded_line_pair(draw, scheme, weight, *req.second_weight);
      break;
    case ConfigKind::near_degenerate: {
      if (req.base == ConfigKind::collinear_loaded) {
        pts = detail::loaded_line(draw, scheme, weight);
      } else if (req.base == ConfigKind::coconic) {
        pts = detail::loaded_parabola(draw, scheme, weight);
      } else {
        throw GenerationError("near_degenerate base must be collinear_loaded or coconic");
      }
      std::vector<Point> moved;
      for (const auto& p : pts) {
        Point q;
        int tries = 0;
        do {
          if (tries++ > req.bounds.retries) throw GenerationError("perturbation collided");
          q = {p.x + draw.tiny(), p.y + draw.tiny()};
        } while (std::find(moved.begin(), moved.end(), q) != moved.end());
        moved.push_back(std::move(q));
      }
      pts = std::move(moved);
      break;
    }
  }
  return Problem(scheme, std::move(pts));
}

}  // namespace hermite
