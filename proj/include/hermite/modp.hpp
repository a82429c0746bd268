#pragma once

// Arithmetic modulo the prime 2^61 - 1, used only as a one-sided filter: a
// rational matrix whose reduction has full rank mod p has full rank over Q,
// and a nonzero residue certifies a nonzero rational. A zero residue proves
// nothing and callers fall back to exact arithmetic.

#include <hermite/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hermite::modp {

using Residue = std::uint64_t;

inline constexpr Residue kPrime = (Residue{1} << 61) - 1;

inline Residue add(Residue a, Residue b) {
  Residue s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

inline Residue sub(Residue a, Residue b) { return a >= b ? a - b : a + kPrime - b; }

inline Residue mul(Residue a, Residue b) {
  const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  Residue s = static_cast<Residue>(t & kPrime) + static_cast<Residue>(t >> 61);
  while (s >= kPrime) s -= kPrime;
  return s;
}

inline Residue power(Residue a, Residue e) {
  Residue r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

inline Residue inverse(Residue a) { return power(a, kPrime - 2); }

inline Residue reduce(const Integer& z) {
  const Integer r = ((z % Integer(kPrime)) + Integer(kPrime)) % Integer(kPrime);
  return static_cast<Residue>(r.get_ui());
}

// nullopt when p divides the denominator.
inline std::optional<Residue> reduce(const Rational& q) {
  const Residue den = reduce(q.get_den());
  if (den == 0) return std::nullopt;
  return mul(reduce(q.get_num()), inverse(den));
}

inline Residue from_int(long long v) {
  return v >= 0 ? static_cast<Residue>(v) % kPrime
                : sub(0, static_cast<Residue>(-(v + 1)) % kPrime + 1);
}

using Row = std::vector<Residue>;

// Gaussian elimination in place; returns the rank.
inline std::size_t rank(std::vector<Row> a) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
    std::size_t piv = rk;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rk], a[piv]);
    const Residue inv = inverse(a[rk][c]);
    for (std::size_t r = rk + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const Residue f = mul(a[r][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[r][j] = sub(a[r][j], mul(f, a[rk][j]));
    }
    ++rk;
  }
  return rk;
}

// A nonzero vector spanning the kernel of a (cols - 1) x cols matrix of
// full rank mod p, or nullopt when the rank is lower.
inline std::optional<Row> corank_one_kernel(std::vector<Row> a) {
  if (a.empty()) return std::nullopt;
  const std::size_t cols = a[0].size();
  if (a.size() + 1 != cols) return std::nullopt;
  std::vector<std::size_t> pivot_col;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
    std::size_t piv = rk;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rk], a[piv]);
    const Residue inv = inverse(a[rk][c]);
    for (std::size_t j = c; j < cols; ++j) a[rk][j] = mul(a[rk][j], inv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rk || a[r][c] == 0) continue;
      const Residue f = a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] = sub(a[r][j], mul(f, a[rk][j]));
    }
    pivot_col.push_back(c);
    ++rk;
  }
  if (rk != a.size()) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t t = 0; free_col < cols && t < pivot_col.size() && pivot_col[t] == free_col; ++t) {
    ++free_col;
  }
  Row v(cols, 0);
  v[free_col] = 1;
  for (std::size_t r = 0; r < rk; ++r) v[pivot_col[r]] = sub(0, a[r][free_col]);
  return v;
}

inline Residue dot(const Row& a, const Row& b) {
  Residue s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s = add(s, mul(a[k], b[k]));
  return s;
}

}  // namespace hermite::modp
