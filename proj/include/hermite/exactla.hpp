#pragma once

// Exact dense linear algebra over the rationals.
//
// All routines reduce each row to integers (multiplying by the lcm of its
// denominators) and run fraction-free Bareiss elimination on the integer
// matrix. Every intermediate entry is then a minor of the scaled input, so
// growth stays polynomial and each division is exact.
//
// Pivoting: columns are scanned left to right; within a column the first
// row (top-down, among the rows not yet used) holding a nonzero entry becomes
// the pivot row. Any pivot rule yields the same rank and kernel dimension;
// the rule only matters for which particular solution `solve` returns.

#include <hermite/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hermite {

using Vector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw std::invalid_argument("Matrix: entry count does not match shape");
    }
  }

  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw std::invalid_argument("Matrix: ragged initializer");
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }

  const std::vector<Rational>& entries() const { return entries_; }

  void append_row(std::span<const Rational> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) {
      throw std::invalid_argument("Matrix: appended row has wrong length");
    }
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

inline Vector multiply(const Matrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) {
    throw std::invalid_argument("multiply: vector length mismatch");
  }
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(v[c]) != 0 && sgn(m(r, c)) != 0) acc += m(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

namespace detail {

using IntRow = std::vector<Integer>;

// Multiplies a rational row (and its optional right-hand side) by the lcm of
// its denominators.
inline IntRow integer_row(std::span<const Rational> row,
                          const Rational* rhs = nullptr) {
  Integer lcm = 1;
  for (const auto& q : row) {
    if (q.get_den() != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  if (rhs && rhs->get_den() != 1) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs->get_den_mpz_t());
  }
  IntRow out;
  out.reserve(row.size() + (rhs ? 1 : 0));
  for (const auto& q : row) {
    Integer v = q.get_num();
    if (q.get_den() != 1 || lcm != 1) {
      Integer scale;
      mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
      v *= scale;
    }
    out.push_back(std::move(v));
  }
  if (rhs) {
    Integer scale;
    mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), rhs->get_den_mpz_t());
    out.push_back(rhs->get_num() * scale);
  }
  return out;
}

struct Echelon {
  std::vector<IntRow> rows;              // reordered and reduced rows
  std::vector<std::size_t> pivot_cols;   // pivot column of row k, increasing
};

// Fraction-free forward elimination. Pivots are only taken from columns
// [0, pivot_limit); any further columns (an augmented right-hand side) are
// carried along.
inline Echelon fraction_free_echelon(std::vector<IntRow> a, std::size_t pivot_limit) {
  Echelon out;
  const std::size_t n_rows = a.size();
  const std::size_t width = n_rows == 0 ? 0 : a.front().size();
  Integer prev = 1;
  Integer t1, t2;
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_limit && r < n_rows; ++col) {
    std::size_t p = r;
    while (p < n_rows && sgn(a[p][col]) == 0) ++p;
    if (p == n_rows) continue;
    if (p != r) std::swap(a[p], a[r]);
    const Integer& piv = a[r][col];
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      const bool below_zero = sgn(a[i][col]) == 0;
      for (std::size_t j = col + 1; j < width; ++j) {
        // a[i][j] = (piv * a[i][j] - a[i][col] * a[r][j]) / prev
        mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), a[i][j].get_mpz_t());
        if (!below_zero) {
          mpz_mul(t2.get_mpz_t(), a[i][col].get_mpz_t(), a[r][j].get_mpz_t());
          mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        }
        mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

inline Echelon echelon_of(const Matrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(integer_row(m.row(r)));
  return fraction_free_echelon(std::move(rows), m.cols());
}

// Back substitution on the echelon rows. `rhs` supplies the right-hand side
// of pivot row k; `free_values` the value of every non-pivot column.
inline Vector back_substitute(const Echelon& e, std::size_t cols,
                              std::span<const Integer> rhs,
                              const Vector& free_values) {
  Vector x = free_values;
  for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
    const std::size_t pc = e.pivot_cols[k];
    const IntRow& row = e.rows[k];
    Rational acc(rhs[k]);
    for (std::size_t j = pc + 1; j < cols; ++j) {
      if (sgn(row[j]) != 0 && sgn(x[j]) != 0) acc -= Rational(row[j]) * x[j];
    }
    acc /= Rational(row[pc]);
    x[pc] = std::move(acc);
  }
  return x;
}

}  // namespace detail

// Exact rank over the rationals.
inline std::size_t rank(const Matrix& m) {
  return detail::echelon_of(m).pivot_cols.size();
}

// Basis of the right kernel {v : m v = 0}. One vector per non-pivot column c,
// with v[c] = 1 and every other free coordinate 0; ordered by c.
inline std::vector<Vector> null_space(const Matrix& m) {
  const auto e = detail::echelon_of(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto pc : e.pivot_cols) is_pivot[pc] = true;
  const std::vector<Integer> zeros(e.pivot_cols.size(), Integer(0));
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vector seed(m.cols(), Rational(0));
    seed[c] = 1;
    basis.push_back(detail::back_substitute(e, m.cols(), zeros, seed));
  }
  return basis;
}

// Some x with m x = b, or nullopt when the system is inconsistent. Free
// variables (non-pivot columns) are set to zero.
inline std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("solve: right-hand side length mismatch");
  }
  std::vector<detail::IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(detail::integer_row(m.row(r), &b[r]));
  }
  const auto e = detail::fraction_free_echelon(std::move(rows), m.cols());
  const std::size_t rk = e.pivot_cols.size();
  for (std::size_t r = rk; r < e.rows.size(); ++r) {
    if (sgn(e.rows[r][m.cols()]) != 0) return std::nullopt;
  }
  std::vector<Integer> rhs;
  rhs.reserve(rk);
  for (std::size_t k = 0; k < rk; ++k) rhs.push_back(e.rows[k][m.cols()]);
  return detail::back_substitute(e, m.cols(), rhs, Vector(m.cols(), Rational(0)));
}

}  // namespace hermite
