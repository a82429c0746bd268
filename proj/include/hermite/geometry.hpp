#pragma once

// Points, lines and conics over the rationals.

#include <hermite/exactla.hpp>

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hermite {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

// Lexicographic (x, then y); used for deduplication in sets and maps.
struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

inline std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

namespace detail {

// Scales so the first nonzero coefficient is 1. Returns false for the zero
// vector.
template <std::size_t K>
bool normalize_leading(std::array<Rational, K>& c) {
  for (std::size_t i = 0; i < K; ++i) {
    if (sgn(c[i]) != 0) {
      const Rational lead = c[i];
      for (auto& v : c) v /= lead;
      return true;
    }
  }
  return false;
}

struct Term {
  Rational coeff;
  std::string monomial;  // empty for the constant term
};

inline std::string format_terms(const std::vector<Term>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (sgn(t.coeff) == 0) continue;
    Rational mag = abs(t.coeff);
    if (out.empty()) {
      if (sgn(t.coeff) < 0) out += "-";
    } else {
      out += sgn(t.coeff) < 0 ? " - " : " + ";
    }
    if (t.monomial.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += t.monomial;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

// a x + b y + c = 0 with (a, b) != (0, 0), scaled so the first nonzero of
// (a, b, c) is 1.
class Line {
 public:
  Line(Rational a, Rational b, Rational c) : c_{std::move(a), std::move(b), std::move(c)} {
    if (sgn(c_[0]) == 0 && sgn(c_[1]) == 0) {
      throw std::invalid_argument("Line: (a, b) must not both vanish");
    }
    detail::normalize_leading(c_);
  }

  const Rational& a() const { return c_[0]; }
  const Rational& b() const { return c_[1]; }
  const Rational& c() const { return c_[2]; }
  const std::array<Rational, 3>& coefficients() const { return c_; }

  Rational operator()(const Point& p) const { return c_[0] * p.x + c_[1] * p.y + c_[2]; }
  bool contains(const Point& p) const { return sgn((*this)(p)) == 0; }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  std::array<Rational, 3> c_;
};

inline std::string to_string(const Line& l) {
  return detail::format_terms({{l.a(), "x"}, {l.b(), "y"}, {l.c(), ""}}) + " = 0";
}

// a x^2 + b xy + c y^2 + d x + e y + f = 0, not all zero, scaled so the
// first nonzero coefficient is 1. A "conic" with a = b = c = 0 is a line
// counted as a degenerate member of a conic family.
class Conic {
 public:
  explicit Conic(std::array<Rational, 6> coefficients) : c_(std::move(coefficients)) {
    if (!detail::normalize_leading(c_)) {
      throw std::invalid_argument("Conic: all coefficients vanish");
    }
  }

  static Conic from_span(std::span<const Rational> v) {
    if (v.size() != 6) throw std::invalid_argument("Conic: need 6 coefficients");
    return Conic({v[0], v[1], v[2], v[3], v[4], v[5]});
  }

  // The product l1 * l2.
  static Conic product(const Line& l1, const Line& l2) {
    const auto& p = l1.coefficients();
    const auto& q = l2.coefficients();
    return Conic({p[0] * q[0], p[0] * q[1] + p[1] * q[0], p[1] * q[1],
                  p[0] * q[2] + p[2] * q[0], p[1] * q[2] + p[2] * q[1], p[2] * q[2]});
  }

  const std::array<Rational, 6>& coefficients() const { return c_; }

  Rational operator()(const Point& p) const {
    return c_[0] * p.x * p.x + c_[1] * p.x * p.y + c_[2] * p.y * p.y + c_[3] * p.x +
           c_[4] * p.y + c_[5];
  }
  bool contains(const Point& p) const { return sgn((*this)(p)) == 0; }

  friend bool operator==(const Conic&, const Conic&) = default;

 private:
  std::array<Rational, 6> c_;
};

struct ConicLess {
  bool operator()(const Conic& a, const Conic& b) const {
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    for (std::size_t i = 0; i < 6; ++i) {
      if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
  }
};

inline std::string to_string(const Conic& q) {
  const auto& c = q.coefficients();
  return detail::format_terms({{c[0], "x^2"},
                               {c[1], "x*y"},
                               {c[2], "y^2"},
                               {c[3], "x"},
                               {c[4], "y"},
                               {c[5], ""}}) +
         " = 0";
}

inline Line line_through(const Point& a, const Point& b) {
  if (a == b) throw std::invalid_argument("line_through: coincident points");
  // (y_b - y_a) x - (x_b - x_a) y + (x_b y_a - x_a y_b) = 0
  return Line(b.y - a.y, a.x - b.x, b.x * a.y - a.x * b.y);
}

// (x^2, xy, y^2, x, y, 1): dotting a conic's coefficients with this row
// evaluates the conic at p.
inline std::array<Rational, 6> veronese_row(const Point& p) {
  return {p.x * p.x, p.x * p.y, p.y * p.y, p.x, p.y, Rational(1)};
}

inline Matrix veronese_matrix(std::span<const Point> points) {
  Matrix m(0, 6);
  for (const auto& p : points) {
    const auto row = veronese_row(p);
    m.append_row(row);
  }
  return m;
}

// Basis of the linear family of conics through every point.
inline std::vector<Conic> conics_through(std::span<const Point> points) {
  std::vector<Conic> family;
  for (const auto& v : null_space(veronese_matrix(points))) {
    family.push_back(Conic::from_span(v));
  }
  return family;
}

// Determinant of the symmetric matrix of the quadratic form.
inline Rational conic_discriminant(const Conic& q) {
  const auto& c = q.coefficients();
  const Rational a = c[0], b = c[1] / 2, cc = c[2], d = c[3] / 2, e = c[4] / 2, f = c[5];
  return a * (cc * f - e * e) - b * (b * f - e * d) + d * (b * e - cc * d);
}

// True iff q splits into two (possibly equal or complex conjugate) linear
// factors.
inline bool is_reducible(const Conic& q) { return sgn(conic_discriminant(q)) == 0; }

struct WeightedNode {
  Point point;
  int multiplicity = 0;
};

struct WeightedConic {
  Conic conic;
  int weight = 0;
};

// Heaviest member of a family spanned by one conic or a pencil of two.
//
// In a pencil lambda q1 + mu q2 a node with q1(A) = q2(A) = 0 lies on every
// member; any other node lies on exactly the member q2(A) q1 - q1(A) q2. Nodes
// are grouped by the projective ratio (q1(A) : q2(A)) and the best group wins;
// ties go to the smallest ratio, finite ratios ascending before (0 : 1).
inline WeightedConic max_weight_member(std::span<const Conic> family,
                                       std::span<const WeightedNode> nodes) {
  if (family.empty()) throw std::invalid_argument("max_weight_member: empty family");
  if (family.size() > 2) {
    throw std::invalid_argument("max_weight_member: family larger than a pencil");
  }
  if (family.size() == 1) {
    int w = 0;
    for (const auto& n : nodes) {
      if (family[0].contains(n.point)) w += n.multiplicity;
    }
    return {family[0], w};
  }

  const Conic& q1 = family[0];
  const Conic& q2 = family[1];
  // Key: (false, t) for ratio (1 : t); (true, 0) for (0 : 1).
  using Key = std::pair<bool, Rational>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.first != b.first) return !a.first;
      return a.second < b.second;
    }
  };
  std::map<Key, int, KeyLess> classes;
  int base = 0;
  for (const auto& n : nodes) {
    const Rational v1 = q1(n.point);
    const Rational v2 = q2(n.point);
    if (sgn(v1) == 0 && sgn(v2) == 0) {
      base += n.multiplicity;
    } else if (sgn(v1) == 0) {
      classes[{true, Rational(0)}] += n.multiplicity;
    } else {
      classes[{false, v2 / v1}] += n.multiplicity;
    }
  }
  if (classes.empty()) return {q1, base};

  auto best = classes.begin();
  for (auto it = classes.begin(); it != classes.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  // Member vanishing at ratio (p : q): q * q1 - p * q2.
  const Rational p = best->first.first ? Rational(0) : Rational(1);
  const Rational q = best->first.first ? Rational(1) : best->first.second;
  std::array<Rational, 6> coeffs;
  for (std::size_t i = 0; i < 6; ++i) {
    coeffs[i] = q * q1.coefficients()[i] - p * q2.coefficients()[i];
  }
  return {Conic(coeffs), base + best->second};
}

// x -> A x + t with A invertible.
struct AffineMap {
  Rational a11 = 1, a12 = 0, a21 = 0, a22 = 1, t1 = 0, t2 = 0;

  Point operator()(const Point& p) const {
    return {a11 * p.x + a12 * p.y + t1, a21 * p.x + a22 * p.y + t2};
  }
  Rational determinant() const { return a11 * a22 - a12 * a21; }
};

}  // namespace hermite
