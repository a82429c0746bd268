#pragma once

// Full report on one problem: scheme class, sizes, rank, the algebraic
// verdicts and the geometric verdict with its witness.

#include <hermite/certifier.hpp>
#include <hermite/hermite.hpp>

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>

namespace hermite {

struct Analysis {
  SchemeClass scheme_class = SchemeClass::exact;
  int n_sharp = 0;
  std::size_t dim = 0;
  std::size_t rank = 0;
  bool solvable = false;
  bool correct = false;
  std::optional<GeomVerdict> geometry;  // absent above 64 nodes
};

inline Analysis analyze(const Problem& problem) {
  Analysis a;
  a.scheme_class = classify(problem.scheme());
  a.n_sharp = n_sharp(problem.scheme());
  a.dim = monomial_count(problem.degree());
  a.rank = collocation_rank(problem);
  a.solvable = a.rank == static_cast<std::size_t>(a.n_sharp);
  a.correct = a.scheme_class == SchemeClass::exact && a.rank == a.dim;
  if (problem.size() <= 64) a.geometry = geometric_verdict(problem);
  return a;
}

inline std::string condition_line(bool ok, int weight, int bound) {
  return ok ? "ok (max weight " + std::to_string(weight) + " <= " + std::to_string(bound) + ")"
            : "violated (max weight " + std::to_string(weight) + " > " + std::to_string(bound) + ")";
}

// "correct", "solvable", or "not solvable" with the geometric witness when
// there is one.
inline std::string verdict_line(const Analysis& a) {
  if (a.correct) return "correct";
  if (a.solvable) return "solvable";
  std::string out = "not solvable";
  if (a.geometry && a.geometry->witness) out += "; witness " + to_string(*a.geometry->witness);
  return out;
}

inline std::string format_geometry(const GeomVerdict& g, int n) {
  std::ostringstream out;
  out << "line condition: " << condition_line(g.line_ok, g.line.weight, n + 1) << "\n";
  if (g.line.line) out << "  heaviest line: " << to_string(*g.line.line) << "\n";
  out << "conic condition: " << condition_line(g.conic_ok, g.conic.weight, 2 * n + 1) << "\n";
  out << "  heaviest conic: " << to_string(g.conic.conic) << "\n";
  return out.str();
}

inline std::string format_analysis(const Problem& problem, const Analysis& a) {
  std::ostringstream out;
  out << "scheme: " << to_string(problem.scheme()) << "\n"
      << "class: " << to_string(a.scheme_class) << "\n"
      << "conditions: " << a.n_sharp << "\n"
      << "dim: " << a.dim << "\n"
      << "rank: " << a.rank << "\n"
      << "solvable: " << (a.solvable ? "yes" : "no") << "\n"
      << "correct: " << (a.correct ? "yes" : "no") << "\n";
  if (a.geometry) {
    out << format_geometry(*a.geometry, problem.degree());
  } else {
    out << "geometry: skipped (more than 64 nodes)\n";
  }
  out << "verdict: " << verdict_line(a) << "\n";
  return out.str();
}

}  // namespace hermite
