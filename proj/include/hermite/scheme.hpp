#pragma once

// Multiplicity schemes {n_1, ..., n_s; n}, interpolation problems (scheme +
// nodes) and the counting identities around them.

#include <hermite/poly2.hpp>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hermite {

// 1 + 2 + ... + k: the number of conditions carried by a node of
// multiplicity k.
constexpr int bar(int k) {
  if (k < 0) throw std::invalid_argument("bar: negative argument");
  return k * (k + 1) / 2;
}

// N_n - N_{n-k} = k (2n + 3 - k) / 2, the largest weight a degree-k curve can
// carry in a solvable problem of degree n.
constexpr int d(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("d(n, k): k outside [0, n]");
  return k * (2 * n + 3 - k) / 2;
}

class Scheme {
 public:
  Scheme() = default;

  // Keeps the given order (positions correspond to nodes).
  Scheme(std::vector<int> multiplicities, int degree)
      : m_(std::move(multiplicities)), n_(degree) {
    if (n_ < 0) throw std::invalid_argument("Scheme: negative degree");
    for (int v : m_) {
      if (v < 0) throw std::invalid_argument("Scheme: negative multiplicity");
    }
  }

  // Sorted non-increasing.
  static Scheme canonical(std::vector<int> multiplicities, int degree) {
    std::sort(multiplicities.begin(), multiplicities.end(), std::greater<>());
    return Scheme(std::move(multiplicities), degree);
  }

  const std::vector<int>& multiplicities() const { return m_; }
  int degree() const { return n_; }
  std::size_t size() const { return m_.size(); }
  int operator[](std::size_t k) const { return m_[k]; }

  int total_multiplicity() const {
    int s = 0;
    for (int v : m_) s += v;
    return s;
  }

  bool is_non_increasing() const {
    return std::is_sorted(m_.begin(), m_.end(), std::greater<>());
  }

  // Two largest multiplicities summed (0 / n_1 for fewer nodes).
  int top_two_sum() const {
    std::vector<int> v = m_;
    std::sort(v.begin(), v.end(), std::greater<>());
    return (v.size() > 0 ? v[0] : 0) + (v.size() > 1 ? v[1] : 0);
  }

  friend bool operator==(const Scheme&, const Scheme&) = default;

 private:
  std::vector<int> m_;
  int n_ = 0;
};

inline std::string to_string(const Scheme& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s[k]);
  }
  out += "; " + std::to_string(s.degree()) + "}";
  return out;
}

// Total number of interpolation conditions.
inline int n_sharp(const Scheme& s) {
  int total = 0;
  for (int v : s.multiplicities()) total += bar(v);
  return total;
}

enum class SchemeClass { less, exact, over };

inline SchemeClass classify(const Scheme& s) {
  const int conds = n_sharp(s);
  const int dim = bar(s.degree() + 1);
  if (conds < dim) return SchemeClass::less;
  if (conds == dim) return SchemeClass::exact;
  return SchemeClass::over;
}

// The (<=) class: less or exact.
inline bool is_le(const Scheme& s) { return classify(s) != SchemeClass::over; }

inline const char* to_string(SchemeClass c) {
  switch (c) {
    case SchemeClass::less: return "less";
    case SchemeClass::exact: return "exact";
    case SchemeClass::over: return "over";
  }
  return "?";
}

// Number of simple nodes that complete a (<=) scheme to an exact one.
inline int hat_deficit(const Scheme& s) {
  if (classify(s) == SchemeClass::over) {
    throw std::invalid_argument("hat_deficit: over-determined scheme " + to_string(s));
  }
  return bar(s.degree() + 1) - n_sharp(s);
}

class Problem {
 public:
  Problem(Scheme scheme, std::vector<Point> nodes)
      : scheme_(std::move(scheme)), nodes_(std::move(nodes)) {
    if (scheme_.size() != nodes_.size()) {
      throw std::invalid_argument("Problem: scheme and node list differ in length");
    }
    std::set<Point, PointLess> seen;
    for (const auto& p : nodes_) {
      if (!seen.insert(p).second) {
        throw std::invalid_argument("Problem: duplicate node " + to_string(p));
      }
    }
  }

  const Scheme& scheme() const { return scheme_; }
  const std::vector<Point>& nodes() const { return nodes_; }
  int degree() const { return scheme_.degree(); }
  std::size_t size() const { return nodes_.size(); }

  std::vector<WeightedNode> weighted_nodes() const {
    std::vector<WeightedNode> out;
    out.reserve(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) out.push_back({nodes_[k], scheme_[k]});
    return out;
  }

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  Scheme scheme_;
  std::vector<Point> nodes_;
};

template <typename C>
concept PlaneCurve = requires(const C& c, const Point& p) {
  { c.contains(p) } -> std::convertible_to<bool>;
};

inline int curve_degree(const Line&) { return 1; }
inline int curve_degree(const Conic&) { return 2; }
inline int curve_degree(const Poly2& p) { return p.total_degree(); }

// Sum of multiplicities of the nodes lying on f.
template <PlaneCurve C>
int curve_weight(const Problem& problem, const C& f) {
  int w = 0;
  for (std::size_t k = 0; k < problem.size(); ++k) {
    if (f.contains(problem.nodes()[k])) w += problem.scheme()[k];
  }
  return w;
}

// N - Delta^f_X: lowers every node on f by one and the degree by deg f. The
// result keeps node positions (it is not re-sorted).
template <PlaneCurve C>
Scheme subtract_curve(const Scheme& s, std::span<const Point> nodes, const C& f) {
  if (nodes.size() != s.size()) {
    throw std::invalid_argument("subtract_curve: node count mismatch");
  }
  const int m = curve_degree(f);
  if (m > s.degree()) throw std::invalid_argument("subtract_curve: degree underflow");
  std::vector<int> out = s.multiplicities();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!f.contains(nodes[k])) continue;
    if (out[k] == 0) {
      throw std::invalid_argument("subtract_curve: node of multiplicity 0 lies on the curve");
    }
    --out[k];
  }
  return Scheme(std::move(out), s.degree() - m);
}

// Every non-increasing sequence of positive multiplicities with sum <= sum_cap
// and n_1 <= n + 1, in lexicographic order; restricted to (<=) schemes when
// require_le is set.
inline std::vector<Scheme> enumerate_schemes(int n, int sum_cap, bool require_le) {
  if (n < 1) throw std::invalid_argument("enumerate_schemes: n must be >= 1");
  std::vector<Scheme> out;
  const int dim = bar(n + 1);
  std::vector<int> cur;
  std::function<void(int, int, int)> extend = [&](int max_part, int remaining, int conds) {
    for (int v = 1; v <= std::min(max_part, remaining); ++v) {
      const int c = conds + bar(v);
      // Appending parts only adds conditions, so an over prefix stays over.
      if (require_le && c > dim) break;
      cur.push_back(v);
      out.emplace_back(cur, n);
      extend(v, remaining - v, c);
      cur.pop_back();
    }
  };
  extend(n + 1, sum_cap, 0);
  return out;
}

}  // namespace hermite
