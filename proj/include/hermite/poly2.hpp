#pragma once

// Dense bivariate polynomials of bounded total degree.
//
// Coefficients are stored in graded order: degree blocks 0, 1, ..., n and,
// inside block d, x^d, x^(d-1) y, ..., y^d. So x^i y^j sits at
//   (i + j)(i + j + 1) / 2 + j.

#include <hermite/geometry.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hermite {

// dim Pi_n = (n + 1)(n + 2) / 2.
constexpr std::size_t monomial_count(int n) {
  return n < 0 ? 0 : static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

constexpr std::size_t monomial_index(int i, int j) {
  const auto d = static_cast<std::size_t>(i + j);
  return d * (d + 1) / 2 + static_cast<std::size_t>(j);
}

// a! / (a - i)!, zero when i > a.
inline Integer falling_factorial(int a, int i) {
  if (i > a) return 0;
  Integer out = 1;
  for (int t = 0; t < i; ++t) out *= a - t;
  return out;
}

class Poly2 {
 public:
  explicit Poly2(int degree_bound = 0)
      : n_(check_bound(degree_bound)), c_(monomial_count(degree_bound)) {}

  Poly2(int degree_bound, std::vector<Rational> coefficients)
      : n_(check_bound(degree_bound)), c_(std::move(coefficients)) {
    if (c_.size() != monomial_count(n_)) {
      throw std::invalid_argument("Poly2: coefficient count does not match degree bound");
    }
  }

  static Poly2 from(const Line& l) {
    Poly2 p(1);
    p.coeff(0, 0) = l.c();
    p.coeff(1, 0) = l.a();
    p.coeff(0, 1) = l.b();
    return p;
  }

  static Poly2 from(const Conic& q) {
    const auto& c = q.coefficients();
    Poly2 p(2);
    p.coeff(2, 0) = c[0];
    p.coeff(1, 1) = c[1];
    p.coeff(0, 2) = c[2];
    p.coeff(1, 0) = c[3];
    p.coeff(0, 1) = c[4];
    p.coeff(0, 0) = c[5];
    return p;
  }

  int degree_bound() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational& coeff(int i, int j) { return c_.at(monomial_index(i, j)); }
  const Rational& coeff(int i, int j) const { return c_.at(monomial_index(i, j)); }

  bool is_zero() const {
    for (const auto& v : c_) {
      if (sgn(v) != 0) return false;
    }
    return true;
  }

  // Actual total degree; -1 for the zero polynomial.
  int total_degree() const {
    for (int d = n_; d >= 0; --d) {
      for (int j = 0; j <= d; ++j) {
        if (sgn(coeff(d - j, j)) != 0) return d;
      }
    }
    return -1;
  }

  // D^{ij} p evaluated at pt.
  Rational derivative_at(int di, int dj, const Point& pt) const {
    Rational acc = 0;
    for (int d = di + dj; d <= n_; ++d) {
      for (int j = dj; j <= d - di; ++j) {
        const int i = d - j;
        const Rational& c = coeff(i, j);
        if (sgn(c) == 0) continue;
        Rational term = c * Rational(falling_factorial(i, di) * falling_factorial(j, dj));
        for (int t = 0; t < i - di; ++t) term *= pt.x;
        for (int t = 0; t < j - dj; ++t) term *= pt.y;
        acc += term;
      }
    }
    return acc;
  }

  Rational operator()(const Point& pt) const { return derivative_at(0, 0, pt); }
  bool contains(const Point& pt) const { return sgn((*this)(pt)) == 0; }

  // Same polynomial with a larger (or equal) degree bound.
  Poly2 widened(int degree_bound) const {
    if (degree_bound < n_) throw std::invalid_argument("Poly2::widened: bound shrinks");
    Poly2 out(degree_bound);
    for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k];
    return out;
  }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out(a.n_ + b.n_);
    for (int da = 0; da <= a.n_; ++da) {
      for (int ja = 0; ja <= da; ++ja) {
        const Rational& ca = a.coeff(da - ja, ja);
        if (sgn(ca) == 0) continue;
        for (int db = 0; db <= b.n_; ++db) {
          for (int jb = 0; jb <= db; ++jb) {
            const Rational& cb = b.coeff(db - jb, jb);
            if (sgn(cb) == 0) continue;
            out.coeff(da - ja + db - jb, ja + jb) += ca * cb;
          }
        }
      }
    }
    return out;
  }

  friend Poly2 operator-(const Poly2& a, const Poly2& b) {
    const int n = std::max(a.n_, b.n_);
    Poly2 out = a.widened(n);
    for (std::size_t k = 0; k < b.c_.size(); ++k) out.c_[k] -= b.c_[k];
    return out;
  }

  friend Poly2 operator*(const Rational& s, const Poly2& p) {
    Poly2 out = p;
    for (auto& v : out.c_) v *= s;
    return out;
  }

  // Equal as polynomials, regardless of degree bound.
  friend bool operator==(const Poly2& a, const Poly2& b) {
    const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    for (std::size_t k = 0; k < big.size(); ++k) {
      const bool eq = k < small.size() ? big[k] == small[k] : sgn(big[k]) == 0;
      if (!eq) return false;
    }
    return true;
  }

 private:
  static int check_bound(int n) {
    if (n < 0) throw std::invalid_argument("Poly2: negative degree bound");
    return n;
  }

  int n_;
  std::vector<Rational> c_;
};

// Highest degree first; inside a degree, higher powers of x first.
inline std::string to_string(const Poly2& p) {
  std::vector<detail::Term> terms;
  for (int d = p.degree_bound(); d >= 0; --d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      std::string mono;
      auto power = [](const char* v, int e) {
        if (e == 0) return std::string();
        return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
      };
      mono = power("x", i);
      if (j > 0) mono += (mono.empty() ? "" : "*") + power("y", j);
      terms.push_back({p.coeff(i, j), mono});
    }
  }
  return detail::format_terms(terms);
}

// q with p = f q, or nullopt when f does not divide p.
//
// Reduction by the leading term of f in graded-lex order (x > y). With a
// single divisor the remainder is zero iff f | p, and a term that cannot be
// reduced never cancels later, so the first such term decides.
inline std::optional<Poly2> divide_exact(const Poly2& p, const Poly2& f) {
  const int m = f.total_degree();
  if (m < 0) throw std::invalid_argument("divide_exact: zero divisor");
  if (m > p.degree_bound()) {
    throw std::invalid_argument("divide_exact: divisor degree exceeds degree bound");
  }
  int lead_i = -1, lead_j = -1;
  for (int j = 0; j <= m; ++j) {
    if (sgn(f.coeff(m - j, j)) != 0) {
      lead_i = m - j;
      lead_j = j;
      break;
    }
  }
  const Rational lead = f.coeff(lead_i, lead_j);

  Poly2 rem = p;
  Poly2 quot(p.degree_bound() - m);
  for (int d = p.degree_bound(); d >= 0; --d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      if (sgn(rem.coeff(i, j)) == 0) continue;
      if (i < lead_i || j < lead_j) return std::nullopt;
      const Rational t = rem.coeff(i, j) / lead;
      const int qi = i - lead_i, qj = j - lead_j;
      quot.coeff(qi, qj) += t;
      for (int fd = 0; fd <= m; ++fd) {
        for (int fj = 0; fj <= fd; ++fj) {
          const Rational& fc = f.coeff(fd - fj, fj);
          if (sgn(fc) != 0) rem.coeff(qi + fd - fj, qj + fj) -= t * fc;
        }
      }
    }
  }
  return quot;
}

}  // namespace hermite
