#pragma once

// The algebraic side: the collocation system of a Hermite problem and every
// decision that follows from its rank.
//
// Condition (k, i, j) asks for D^{ij} p at node k, for i + j <= n_k - 1. Rows
// are ordered by node, then by (i, j) in the same graded order as Poly2's
// monomials: (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...

#include <hermite/modp.hpp>
#include <hermite/scheme.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace hermite {

struct Condition {
  std::size_t node;
  int i;
  int j;

  friend bool operator==(const Condition&, const Condition&) = default;
};

inline std::vector<Condition> conditions(const Scheme& s) {
  std::vector<Condition> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (int d = 0; d < s[k]; ++d) {
      for (int j = 0; j <= d; ++j) out.push_back({k, d - j, j});
    }
  }
  return out;
}

// Row of condition (node, i, j): sum of bar(n_k) over earlier nodes plus the
// graded index of (i, j).
inline std::size_t condition_row(const Scheme& s, const Condition& c) {
  if (c.node >= s.size() || c.i < 0 || c.j < 0 || c.i + c.j >= s[c.node]) {
    throw std::out_of_range("condition index outside the scheme");
  }
  std::size_t row = 0;
  for (std::size_t k = 0; k < c.node; ++k) row += static_cast<std::size_t>(bar(s[k]));
  return row + monomial_index(c.i, c.j);
}

// n_sharp rows, dim Pi_n columns. Entry (k,i,j ; x^a y^b) is
//   a!/(a-i)! * b!/(b-j)! * x_k^(a-i) * y_k^(b-j),   zero unless a >= i, b >= j.
inline Matrix collocation_matrix(const Problem& problem) {
  const int n = problem.degree();
  const std::size_t cols = monomial_count(n);
  const auto conds = conditions(problem.scheme());
  Matrix m(conds.size(), cols);

  for (std::size_t r = 0; r < conds.size(); ++r) {
    const auto& c = conds[r];
    const Point& pt = problem.nodes()[c.node];
    // Powers of the node coordinates, reused across the row.
    std::vector<Rational> px(static_cast<std::size_t>(n) + 1), py(static_cast<std::size_t>(n) + 1);
    px[0] = 1;
    py[0] = 1;
    for (int t = 1; t <= n; ++t) {
      px[t] = px[t - 1] * pt.x;
      py[t] = py[t - 1] * pt.y;
    }
    for (int deg = c.i + c.j; deg <= n; ++deg) {
      for (int b = c.j; b <= deg - c.i; ++b) {
        const int a = deg - b;
        m(r, monomial_index(a, b)) = Rational(falling_factorial(a, c.i) * falling_factorial(b, c.j)) *
                                     px[a - c.i] * py[b - c.j];
      }
    }
  }
  return m;
}

inline std::size_t collocation_rank(const Problem& problem) {
  return rank(collocation_matrix(problem));
}

namespace detail {

// The collocation matrix mod p; nullopt when p divides a denominator.
inline std::optional<std::vector<modp::Row>> collocation_residues(const Problem& problem) {
  const int n = problem.degree();
  const std::size_t cols = monomial_count(n);
  std::vector<modp::Row> rows;
  for (const auto& c : conditions(problem.scheme())) {
    const Point& pt = problem.nodes()[c.node];
    const auto x = modp::reduce(pt.x), y = modp::reduce(pt.y);
    if (!x || !y) return std::nullopt;
    modp::Row px(static_cast<std::size_t>(n) + 1, 1), py(static_cast<std::size_t>(n) + 1, 1);
    for (int t = 1; t <= n; ++t) {
      px[t] = modp::mul(px[t - 1], *x);
      py[t] = modp::mul(py[t - 1], *y);
    }
    modp::Row row(cols, 0);
    for (int deg = c.i + c.j; deg <= n; ++deg) {
      for (int b = c.j; b <= deg - c.i; ++b) {
        const int a = deg - b;
        modp::Residue f = 1;
        for (int t = 0; t < c.i; ++t) f = modp::mul(f, static_cast<modp::Residue>(a - t));
        for (int t = 0; t < c.j; ++t) f = modp::mul(f, static_cast<modp::Residue>(b - t));
        row[monomial_index(a, b)] = modp::mul(f, modp::mul(px[a - c.i], py[b - c.j]));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

// Every data assignment has an interpolant (full row rank). Full rank mod p
// settles it; otherwise the exact rank decides.
inline bool is_solvable(const Problem& problem) {
  const auto conds = static_cast<std::size_t>(n_sharp(problem.scheme()));
  if (conds > monomial_count(problem.degree())) return false;
  if (const auto rows = detail::collocation_residues(problem); rows && modp::rank(*rows) == conds) {
    return true;
  }
  return collocation_rank(problem) == conds;
}

// Every data assignment has exactly one interpolant.
inline bool is_correct(const Problem& problem) {
  return classify(problem.scheme()) == SchemeClass::exact && is_solvable(problem);
}

// Basis of {p in Pi_n : every condition of the problem vanishes on p}.
inline std::vector<Poly2> kernel_polys(const Problem& problem) {
  std::vector<Poly2> out;
  for (auto& v : null_space(collocation_matrix(problem))) {
    out.emplace_back(problem.degree(), std::move(v));
  }
  return out;
}

// Data for a problem: values[k] lists c_k^{ij} in graded (i, j) order, so it
// has bar(n_k) entries.
struct HermiteData {
  std::vector<std::vector<Rational>> values;
};

inline void check_shape(const Scheme& s, const HermiteData& data) {
  if (data.values.size() != s.size()) {
    throw std::invalid_argument("HermiteData: node count does not match the scheme");
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (data.values[k].size() != static_cast<std::size_t>(bar(s[k]))) {
      throw std::invalid_argument("HermiteData: node " + std::to_string(k) +
                                  " has the wrong number of values");
    }
  }
}

inline Vector flatten(const HermiteData& data) {
  Vector out;
  for (const auto& node : data.values) out.insert(out.end(), node.begin(), node.end());
  return out;
}

// Residual of every condition: D^{ij} p(A_k) - c_k^{ij}.
inline Vector residuals(const Problem& problem, const HermiteData& data, const Poly2& p) {
  check_shape(problem.scheme(), data);
  Vector out;
  for (const auto& c : conditions(problem.scheme())) {
    out.push_back(p.derivative_at(c.i, c.j, problem.nodes()[c.node]) -
                  data.values[c.node][monomial_index(c.i, c.j)]);
  }
  return out;
}

// An interpolant in Pi_n, or nullopt when the data is inconsistent. Among
// several interpolants the one returned by `solve` (free coefficients zero) is
// chosen.
inline std::optional<Poly2> interpolate(const Problem& problem, const HermiteData& data) {
  check_shape(problem.scheme(), data);
  const Vector rhs = flatten(data);
  auto x = solve(collocation_matrix(problem), rhs);
  if (!x) return std::nullopt;
  return Poly2(problem.degree(), std::move(*x));
}

// Fundamental polynomial of parameter (node, i, j): that condition equals 1,
// all others 0. nullopt when the parameter has none.
inline std::optional<Poly2> fundamental_poly(const Problem& problem, std::size_t node, int i,
                                             int j) {
  const std::size_t row = condition_row(problem.scheme(), {node, i, j});
  Vector rhs(static_cast<std::size_t>(n_sharp(problem.scheme())), Rational(0));
  rhs[row] = 1;
  auto x = solve(collocation_matrix(problem), rhs);
  if (!x) return std::nullopt;
  return Poly2(problem.degree(), std::move(*x));
}

// q with p = f q (f a line, conic or general polynomial), or nullopt.
template <typename Curve>
std::optional<Poly2> divide_by_curve(const Poly2& p, const Curve& f) {
  if constexpr (std::is_same_v<Curve, Poly2>) {
    return divide_exact(p, f);
  } else {
    return divide_exact(p, Poly2::from(f));
  }
}

// Infinite deterministic stream of candidate points.
using PointStream = std::function<Point()>;

// Integer points by increasing |x| + |y|: (0,0), then (1,0), (0,1), (-1,0),
// (0,-1), then (2,0), (1,1), (0,2), (-1,1), ... counter-clockwise per ring.
inline PointStream integer_spiral() {
  struct State {
    long r = 0;
    long step = 0;  // position within ring r, 0 .. 4r - 1
  };
  return [st = State{}]() mutable {
    Point out;
    if (st.r == 0) {
      out = {Rational(0), Rational(0)};
      st.r = 1;
      st.step = 0;
      return out;
    }
    const long r = st.r, t = st.step;
    long x, y;
    if (t < r) {  // (r,0) -> (0,r)
      x = r - t;
      y = t;
    } else if (t < 2 * r) {  // (0,r) -> (-r,0)
      x = -(t - r);
      y = r - (t - r);
    } else if (t < 3 * r) {  // (-r,0) -> (0,-r)
      x = -r + (t - 2 * r);
      y = -(t - 2 * r);
    } else {  // (0,-r) -> (r,0)
      x = t - 3 * r;
      y = -r + (t - 3 * r);
    }
    if (++st.step == 4 * r) {
      ++st.r;
      st.step = 0;
    }
    return Point{Rational(x), Rational(y)};
  };
}

struct Completion {
  Problem problem;
  std::vector<Point> added;
};

// Appends hat_deficit simple nodes so the problem becomes n-correct. Each new
// node is the first stream point, distinct from all current nodes, at which
// some polynomial of the current kernel does not vanish; that polynomial is
// then a fundamental polynomial of the new node, so solvability is kept.
inline Completion complete_to_correct(const Problem& problem,
                                      PointStream stream = integer_spiral(),
                                      std::size_t budget = 1'000'000) {
  if (classify(problem.scheme()) == SchemeClass::over) {
    throw std::invalid_argument("complete_to_correct: over-determined scheme");
  }
  if (!is_solvable(problem)) {
    throw std::invalid_argument("complete_to_correct: problem is not solvable");
  }
  std::vector<int> mult = problem.scheme().multiplicities();
  std::vector<Point> nodes = problem.nodes();
  std::set<Point, PointLess> used(nodes.begin(), nodes.end());
  std::vector<Point> added;
  const int missing = hat_deficit(problem.scheme());

  std::size_t drawn = 0;
  for (int step = 0; step < missing; ++step) {
    const auto kernel = kernel_polys(Problem(Scheme(mult, problem.degree()), nodes));
    bool placed = false;
    while (!placed) {
      if (drawn++ >= budget) {
        throw std::runtime_error("complete_to_correct: point stream exhausted");
      }
      Point cand = stream();
      if (used.count(cand)) continue;
      for (const auto& p : kernel) {
        if (!p.contains(cand)) {
          placed = true;
          break;
        }
      }
      if (placed) {
        used.insert(cand);
        nodes.push_back(cand);
        mult.push_back(1);
        added.push_back(cand);
      }
    }
  }
  return {Problem(Scheme(std::move(mult), problem.degree()), std::move(nodes)), std::move(added)};
}

}  // namespace hermite
