#pragma once

// Exact rational scalars. Backed by GMP's mpq_class, which keeps every value
// in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hermite {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace; q must be
// nonzero. The result is canonicalized.
inline Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw std::invalid_argument("empty rational literal");
  }
  std::string s(text.substr(first, last - first + 1));
  auto slash = s.find('/');
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer p(num, 10);
  Integer q(den, 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace hermite
