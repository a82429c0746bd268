#pragma once

// The geometric side: the heaviest line and the heaviest conic through the
// nodes of a problem (weights counted with multiplicity), and the resulting
// verdict on the line condition (weight <= n + 1) and the conic condition
// (weight <= 2n + 1).
//
// Candidate conics, in tie-break order:
//   (a) s <= 5: a conic through every node;
//   (b) the unique conic of each 5-subset whose Veronese rows have rank 5;
//   (c) the best member of the pencil of each rank-4 5-subset;
//   (d) the product of any two lines through node pairs;
//   (e) a node-pair line times a line through the heaviest node off it;
//   (f) a conic through the five heaviest nodes.
// An irreducible conic through >= 5 nodes is fixed by any five of them (b);
// one through <= 4 nodes is dominated by (f); a reducible one is a line pair
// or double line, covered by (d), (e) and (f).

#include <hermite/modp.hpp>
#include <hermite/scheme.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hermite {

struct LineWitness {
  std::optional<Line> line;  // absent only for an empty node set
  int weight = 0;
};

struct ConicWitness {
  Conic conic;
  int weight = 0;
};

namespace detail {

using NodeMask = std::uint64_t;

template <PlaneCurve C>
NodeMask incidence_mask(const Problem& problem, const C& f) {
  NodeMask mask = 0;
  for (std::size_t k = 0; k < problem.size(); ++k) {
    if (f.contains(problem.nodes()[k])) mask |= NodeMask{1} << k;
  }
  return mask;
}

inline int mask_weight(const Problem& problem, NodeMask mask) {
  int w = 0;
  for (std::size_t k = 0; k < problem.size(); ++k) {
    if (mask >> k & 1) w += problem.scheme()[k];
  }
  return w;
}

inline void check_mask_capacity(const Problem& problem) {
  if (problem.size() > 64) {
    throw std::invalid_argument("certifier: more than 64 nodes is not supported");
  }
}

// Calls visit(indices) for every k-subset of {0..s-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t s, std::size_t k, Visit&& visit) {
  if (k > s) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t t = 0; t < k; ++t) idx[t] = t;
  while (true) {
    visit(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == s - k + t - 1) --t;
    if (t == 0) return;
    ++idx[t - 1];
    for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

struct PairLine {
  Line line;
  NodeMask mask;
};

// Distinct lines through node pairs, in order of first occurrence.
inline std::vector<PairLine> node_pair_lines(const Problem& problem) {
  std::vector<PairLine> out;
  const auto& x = problem.nodes();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      Line l = line_through(x[i], x[j]);
      const bool seen = std::any_of(out.begin(), out.end(),
                                    [&](const PairLine& pl) { return pl.line == l; });
      if (!seen) {
        const NodeMask mask = incidence_mask(problem, l);
        out.push_back({std::move(l), mask});
      }
    }
  }
  return out;
}

}  // namespace detail

// Heaviest line: the best node-pair line, or a line through the single node
// when there is only one.
inline LineWitness max_line_weight(const Problem& problem) {
  const auto& x = problem.nodes();
  if (x.empty()) return {};
  if (x.size() == 1) return {Line(0, 1, -x[0].y), problem.scheme()[0]};
  LineWitness best;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      Line l = line_through(x[i], x[j]);
      const int w = curve_weight(problem, l);
      if (!best.line || w > best.weight) best = {std::move(l), w};
    }
  }
  return best;
}

// Heaviest conic over all conics, reducible ones included.
inline ConicWitness max_conic_weight(const Problem& problem) {
  detail::check_mask_capacity(problem);
  const auto& x = problem.nodes();
  const std::size_t s = x.size();

  if (s <= 5) {  // (a)
    const auto family = conics_through(x);
    return {family.front(), curve_weight(problem, family.front())};
  }

  std::optional<ConicWitness> best;
  auto offer = [&](const Conic& q, int w) {
    if (!best || w > best->weight) best = ConicWitness{q, w};
  };

  // (b), collecting the pencils for (c). A 5-subset of full rank mod p has a
  // unique conic whose residue vector rejects most non-incident nodes
  // without exact arithmetic; the exact conic is built only on improvement.
  std::vector<modp::Row> residues;
  for (const auto& pt : x) {
    const Rational row[6] = {pt.x * pt.x, pt.x * pt.y, pt.y * pt.y, pt.x, pt.y, Rational(1)};
    modp::Row r;
    for (const auto& v : row) {
      const auto red = modp::reduce(v);
      if (!red) break;
      r.push_back(*red);
    }
    if (r.size() != 6) {
      residues.clear();
      break;
    }
    residues.push_back(std::move(r));
  }

  std::set<Conic, ConicLess> seen;
  std::vector<std::vector<Conic>> pencils;
  std::vector<Point> five(5);
  detail::for_each_subset(s, 5, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t t = 0; t < 5; ++t) five[t] = x[idx[t]];
    if (!residues.empty()) {
      std::vector<modp::Row> rows;
      for (auto k : idx) rows.push_back(residues[k]);
      if (const auto q = modp::corank_one_kernel(std::move(rows))) {
        std::optional<Conic> exact;
        int w = 0;
        for (std::size_t k = 0, t = 0; k < s; ++k) {
          if (t < 5 && idx[t] == k) {
            w += problem.scheme()[k];
            ++t;
          } else if (modp::dot(*q, residues[k]) == 0) {
            if (!exact) exact = conics_through(five).front();
            if (exact->contains(x[k])) w += problem.scheme()[k];
          }
        }
        if (!best || w > best->weight) {
          if (!exact) exact = conics_through(five).front();
          offer(*exact, w);
        }
        return;
      }
    }
    auto family = conics_through(five);
    if (family.size() == 1) {
      if (seen.insert(family.front()).second) {
        offer(family.front(), curve_weight(problem, family.front()));
      }
    } else if (family.size() == 2) {
      pencils.push_back(std::move(family));
    }
  });

  // (c)
  if (!pencils.empty()) {
    const auto weighted = problem.weighted_nodes();
    for (const auto& family : pencils) {
      const auto member = max_weight_member(family, weighted);
      offer(member.conic, member.weight);
    }
  }

  // (d)
  const auto lines = detail::node_pair_lines(problem);
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a; b < lines.size(); ++b) {
      const int w = detail::mask_weight(problem, lines[a].mask | lines[b].mask);
      if (!best || w > best->weight) offer(Conic::product(lines[a].line, lines[b].line), w);
    }
  }

  // (e)
  for (const auto& pl : lines) {
    std::optional<std::size_t> heavy;
    for (std::size_t k = 0; k < s; ++k) {
      if (pl.mask >> k & 1) continue;
      if (!heavy || problem.scheme()[k] > problem.scheme()[*heavy]) heavy = k;
    }
    if (!heavy) continue;
    const Conic q = Conic::product(pl.line, Line(0, 1, -x[*heavy].y));
    offer(q, curve_weight(problem, q));
  }

  // (f)
  std::vector<std::size_t> order(s);
  for (std::size_t k = 0; k < s; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return problem.scheme()[a] > problem.scheme()[b];
  });
  for (std::size_t t = 0; t < 5; ++t) five[t] = x[order[t]];
  const Conic floor_conic = conics_through(five).front();
  offer(floor_conic, curve_weight(problem, floor_conic));

  return *best;
}

struct Witness {
  std::variant<Line, Conic> curve;
  int weight = 0;
  int bound = 0;
};

inline std::string to_string(const Witness& w) {
  const std::string curve = std::visit([](const auto& c) { return to_string(c); }, w.curve);
  const char* kind = std::holds_alternative<Line>(w.curve) ? "line" : "conic";
  return std::string(kind) + " " + curve + "; weight " + std::to_string(w.weight) + " > " +
         std::to_string(w.bound);
}

struct GeomVerdict {
  bool line_ok = true;
  bool conic_ok = true;
  LineWitness line;
  ConicWitness conic;
  std::optional<Witness> witness;  // the first violated condition

  bool ok() const { return line_ok && conic_ok; }
};

inline GeomVerdict geometric_verdict(const Problem& problem) {
  const int n = problem.degree();
  GeomVerdict v{true, true, max_line_weight(problem), max_conic_weight(problem), std::nullopt};
  v.line_ok = v.line.weight <= n + 1;
  v.conic_ok = v.conic.weight <= 2 * n + 1;
  if (!v.line_ok) {
    v.witness = Witness{*v.line.line, v.line.weight, n + 1};
  } else if (!v.conic_ok) {
    v.witness = Witness{v.conic.conic, v.conic.weight, 2 * n + 1};
  }
  return v;
}

}  // namespace hermite
