#pragma once

// Theorem-verification campaigns. Every scheme admitted by a theorem's
// hypotheses is paired with seeded generic and degenerate node sets, and the
// theorem's claim is checked on each resulting problem:
//
//   severi        total multiplicity <= n + 1            => solvable
//   t2n1          total <= 2n + 1:   solvable  <=> line condition
//                 plus: n1 + n2 <= n + 1 and total <= 2n + 1 => not over
//   t2n2          not-over schemes, total <= 2n + 2:
//                 solvable  <=>  line condition and conic condition
//   fn1n2_k12     solvable => line weight <= n + 1, conic weight <= 2n + 1
//   divisibility  kernels of line-loaded and conic-loaded problems are
//                 multiples of that line or conic; two parabola families of
//                 exact schemes are correct
//
// Trial seeds derive from (master seed, group, trial, variant), so a report
// depends only on the options; jobs > 1 changes nothing but the wall time.

#include <hermite/analysis.hpp>
#include <hermite/generate.hpp>
#include <hermite/problem_file.hpp>

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace hermite {

enum class Theorem { severi, t2n1, t2n2, fn1n2_k12, divisibility };

inline const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::severi: return "severi";
    case Theorem::t2n1: return "t2n1";
    case Theorem::t2n2: return "t2n2";
    case Theorem::fn1n2_k12: return "fn1n2_k12";
    case Theorem::divisibility: return "divisibility";
  }
  return "?";
}

inline std::optional<Theorem> parse_theorem(const std::string& s) {
  for (Theorem t : {Theorem::severi, Theorem::t2n1, Theorem::t2n2, Theorem::fn1n2_k12,
                    Theorem::divisibility}) {
    if (s == to_string(t)) return t;
  }
  return std::nullopt;
}

struct CampaignOptions {
  Theorem which = Theorem::t2n2;
  int n_min = 1;
  int n_max = 3;
  int trials = 10;       // generic configurations per scheme
  int adversarial = 1;   // repetitions of each degenerate variant per scheme
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::size_t witness_samples = 10;
  SamplingBounds bounds;
};

// One scheme (or one instance family) of the campaign.
struct GroupTally {
  std::string label;
  int degree = 0;
  std::size_t problems = 0;
  std::size_t agreements = 0;
  std::size_t solvable = 0;
  std::size_t unsolvable = 0;
  std::size_t unsatisfiable = 0;  // degenerate variants the scheme cannot host
};

struct Disagreement {
  std::string group;
  std::string variant;
  std::uint64_t seed = 0;
  std::string detail;
  bool algebraic = false;  // is_solvable (or the checked algebraic claim)
  bool geometric = false;  // the geometric side being compared
  std::string problem;     // canonical problem file
};

struct WitnessSample {
  std::string group;
  std::string variant;
  std::string witness;
};

struct CampaignReport {
  CampaignOptions options;
  std::map<int, std::size_t> schemes_per_degree;
  std::vector<std::string> notes;
  std::vector<GroupTally> groups;
  std::size_t problems = 0;
  std::size_t agreements = 0;
  std::vector<Disagreement> disagreements;
  std::vector<WitnessSample> witnesses;
  double elapsed_seconds = 0;

  bool ok() const { return disagreements.empty(); }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t master, std::size_t group, std::size_t trial,
                                std::size_t variant) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ group);
  h = splitmix64(h ^ trial);
  return splitmix64(h ^ variant);
}

enum class Family { theorem, prop_line, prop_conic, exact_on_parabola };

struct Group {
  std::string label;
  Scheme scheme;
  Family family = Family::theorem;
};

struct Variant {
  std::string name;
  ConfigRequest request;  // seed filled per trial
};

struct WorkItem {
  std::size_t group;
  std::size_t variant;
  std::size_t trial;
};

struct Outcome {
  bool generated = false;
  bool agree = true;
  bool solvable = false;
  std::optional<std::string> witness;
  std::optional<Disagreement> disagreement;
};

inline Variant make_variant(std::string name, ConfigKind kind, std::optional<int> w = {},
                            std::optional<int> w2 = {},
                            ConfigKind base = ConfigKind::collinear_loaded) {
  ConfigRequest r;
  r.kind = kind;
  r.weight = w;
  r.second_weight = w2;
  r.base = base;
  return {std::move(name), r};
}

// Degenerate variants hosted by a scheme of total multiplicity `total`.
inline std::vector<Variant> adversarial_variants(Theorem which, int n, int total) {
  std::vector<Variant> out;
  auto line = [&](int w) {
    if (w <= total) out.push_back(make_variant("line " + std::to_string(w), ConfigKind::collinear_loaded, w));
  };
  auto conic = [&](int w) {
    if (w <= total) out.push_back(make_variant("conic " + std::to_string(w), ConfigKind::coconic, w));
  };
  auto pair = [&](int w1, int w2) {
    if (w1 + w2 <= total) {
      out.push_back(make_variant("lines " + std::to_string(w1) + "+" + std::to_string(w2),
                                 ConfigKind::line_pair, w1, w2));
    }
  };
  auto near = [&](ConfigKind base, int w) {
    if (w <= total) {
      out.push_back(make_variant(std::string("near ") +
                                     (base == ConfigKind::coconic ? "conic " : "line ") +
                                     std::to_string(w),
                                 ConfigKind::near_degenerate, w, std::nullopt, base));
    }
  };
  switch (which) {
    case Theorem::severi:
      line(total);
      conic(total);
      near(ConfigKind::collinear_loaded, total);
      break;
    case Theorem::t2n1:
      line(n + 1);
      line(n + 2);
      conic(total);
      near(ConfigKind::collinear_loaded, n + 2);
      break;
    case Theorem::t2n2:
    case Theorem::fn1n2_k12:
      line(n + 1);
      line(n + 2);
      conic(2 * n + 1);
      conic(2 * n + 2);
      pair(n + 1, n + 1);
      pair(n + 1, n);
      near(ConfigKind::collinear_loaded, n + 2);
      near(ConfigKind::coconic, 2 * n + 2);
      break;
    case Theorem::divisibility:
      break;
  }
  return out;
}

inline AffineMap seeded_affine(std::uint64_t seed) {
  Draw draw(seed, {});
  AffineMap t;
  do {
    t = {draw.rational(20, 5), draw.rational(20, 5), draw.rational(20, 5),
         draw.rational(20, 5), draw.rational(100, 7), draw.rational(100, 7)};
  } while (sgn(t.determinant()) == 0);
  return t;
}

class Campaign {
 public:
  explicit Campaign(const CampaignOptions& o) : o_(o) {}

  CampaignReport run() {
    const auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.options = o_;
    build_groups(report);

    std::vector<WorkItem> items;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      for (std::size_t v = 0; v < variants_[g].size(); ++v) {
        const int reps = v == 0 ? o_.trials : o_.adversarial;
        for (int t = 0; t < reps; ++t) items.push_back({g, v, static_cast<std::size_t>(t)});
      }
    }

    std::vector<Outcome> outcomes(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k = next++; k < items.size(); k = next++) outcomes[k] = evaluate(items[k]);
    };
    const unsigned jobs = std::max(1u, o_.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    for (std::size_t g = 0; g < groups_.size(); ++g) {
      report.groups.push_back({groups_[g].label, groups_[g].scheme.degree()});
    }
    for (std::size_t k = 0; k < items.size(); ++k) {
      auto& tally = report.groups[items[k].group];
      auto& out = outcomes[k];
      if (!out.generated) {
        ++tally.unsatisfiable;
        if (out.disagreement) report.disagreements.push_back(std::move(*out.disagreement));
        continue;
      }
      ++tally.problems;
      ++report.problems;
      (out.solvable ? tally.solvable : tally.unsolvable)++;
      if (out.agree) {
        ++tally.agreements;
        ++report.agreements;
      } else {
        report.disagreements.push_back(std::move(*out.disagreement));
      }
      if (out.witness && report.witnesses.size() < o_.witness_samples) {
        report.witnesses.push_back(
            {tally.label, variants_[items[k].group][items[k].variant].name, *out.witness});
      }
    }
    for (auto& d : scheme_level_) report.disagreements.push_back(std::move(d));
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

 private:
  void add_group(Group g, std::vector<Variant> v) {
    groups_.push_back(std::move(g));
    variants_.push_back(std::move(v));
  }

  void build_groups(CampaignReport& report) {
    for (int n = o_.n_min; n <= o_.n_max; ++n) {
      if (o_.which == Theorem::divisibility) {
        build_divisibility_groups(report, n);
        continue;
      }
      int cap = 0;
      bool require_le = false;
      switch (o_.which) {
        case Theorem::severi: cap = n + 1; break;
        case Theorem::t2n1: cap = 2 * n + 1; break;
        case Theorem::t2n2: cap = 2 * n + 2; require_le = true; break;
        case Theorem::fn1n2_k12: cap = 2 * n + 3; require_le = true; break;
        case Theorem::divisibility: break;
      }
      const auto schemes = enumerate_schemes(n, cap, require_le);
      report.schemes_per_degree[n] = schemes.size();
      bool reaches_cap = false;
      for (const auto& s : schemes) {
        reaches_cap = reaches_cap || s.total_multiplicity() == cap;
        if (o_.which == Theorem::t2n1 && s.size() >= 2 && s[0] + s[1] <= n + 1 && !is_le(s)) {
          scheme_level_.push_back({to_string(s), "scheme", 0,
                                   "top two multiplicities fit the line bound but the scheme is over",
                                   false, true, ""});
        }
        std::vector<Variant> v{make_variant("general", ConfigKind::general)};
        for (auto& a : adversarial_variants(o_.which, n, s.total_multiplicity())) {
          v.push_back(std::move(a));
        }
        add_group({to_string(s), s}, std::move(v));
      }
      if (!reaches_cap) {
        report.notes.push_back("n=" + std::to_string(n) + ": no admissible scheme has total " +
                               std::to_string(cap) + " (vacuous at that total)");
      }
    }
  }

  void build_divisibility_groups(CampaignReport& report, int n) {
    std::size_t count = 0;
    // Any scheme of total n + 1 on one line.
    for (const auto& s : enumerate_schemes(n, n + 1, false)) {
      if (s.total_multiplicity() != n + 1) continue;
      add_group({"line " + to_string(s), s, Family::prop_line},
                {make_variant("on a line", ConfigKind::collinear_loaded)});
      ++count;
    }
    // n1 + n2 <= n + 1, total 2n + 1, at least five nodes, on a conic.
    for (const auto& s : enumerate_schemes(n, 2 * n + 1, false)) {
      if (s.total_multiplicity() != 2 * n + 1 || s.size() < 5 || s[0] + s[1] > n + 1) continue;
      add_group({"conic " + to_string(s), s, Family::prop_conic},
                {make_variant("on a conic", ConfigKind::coconic)});
      ++count;
    }
    // {m,m,m,m-1; 2m-1} and {m+1,m,m,m; 2m} on parabola nodes.
    if (n % 2 == 1) {
      const int m = (n + 1) / 2;
      const Scheme s({m, m, m, m - 1}, n);
      add_group({"exact " + to_string(s), s, Family::exact_on_parabola},
                {make_variant("on the parabola", ConfigKind::coconic, 4 * m - 1)});
      ++count;
    } else {
      const int m = n / 2;
      const Scheme s({m + 1, m, m, m}, n);
      add_group({"exact " + to_string(s), s, Family::exact_on_parabola},
                {make_variant("on the parabola", ConfigKind::coconic)});
      ++count;
    }
    report.schemes_per_degree[n] = count;
  }

  Outcome evaluate(const WorkItem& item) const {
    const Group& g = groups_[item.group];
    const Variant& v = variants_[item.group][item.variant];
    ConfigRequest req = v.request;
    req.bounds = o_.bounds;
    req.seed = trial_seed(o_.seed, item.group, item.trial, item.variant);

    Outcome out;
    std::optional<Problem> problem;
    try {
      problem = generate_config(g.scheme, req);
    } catch (const GenerationError& e) {
      // A degenerate variant the scheme cannot host is skipped; generic
      // sampling must never fail quietly.
      if (req.kind == ConfigKind::general) {
        out.agree = false;
        out.disagreement = Disagreement{g.label, v.name, req.seed,
                                        std::string("sampling failed: ") + e.what(), false, false,
                                        ""};
      }
      return out;
    }
    std::optional<Conic> target_conic;
    if (g.family == Family::prop_conic) {
      // Move the parabola nodes by a seeded affine map.
      const AffineMap t = seeded_affine(req.seed);
      std::vector<Point> moved;
      for (const auto& p : problem->nodes()) moved.push_back(t(p));
      std::vector<Point> five(moved.begin(), moved.begin() + 5);
      target_conic = conics_through(five).front();
      problem.emplace(g.scheme, std::move(moved));
    }
    out.generated = true;
    const Problem& p = *problem;
    const int n = p.degree();

    auto disagree = [&](std::string detail, bool alg, bool geo) {
      out.agree = false;
      out.disagreement = Disagreement{g.label, v.name, req.seed, std::move(detail), alg, geo,
                                      write_problem(p)};
    };

    switch (o_.which) {
      case Theorem::severi: {
        out.solvable = is_solvable(p);
        if (!out.solvable) disagree("not solvable", false, true);
        break;
      }
      case Theorem::t2n1: {
        out.solvable = is_solvable(p);
        const auto line = max_line_weight(p);
        const bool line_ok = line.weight <= n + 1;
        if (!line_ok) out.witness = to_string(Witness{*line.line, line.weight, n + 1});
        if (out.solvable != line_ok) disagree("solvability differs from the line condition",
                                              out.solvable, line_ok);
        break;
      }
      case Theorem::t2n2: {
        out.solvable = is_solvable(p);
        const auto verdict = geometric_verdict(p);
        if (verdict.witness) out.witness = to_string(*verdict.witness);
        if (out.solvable != verdict.ok()) {
          disagree("solvability differs from the line and conic conditions", out.solvable,
                   verdict.ok());
        }
        break;
      }
      case Theorem::fn1n2_k12: {
        out.solvable = is_solvable(p);
        if (out.solvable) {
          const auto verdict = geometric_verdict(p);
          if (!verdict.ok()) {
            disagree("solvable but " + to_string(*verdict.witness), true, false);
          }
        }
        break;
      }
      case Theorem::divisibility: {
        out.solvable = is_solvable(p);
        if (g.family == Family::exact_on_parabola) {
          if (!is_correct(p)) disagree("exact scheme on parabola nodes is not correct", false, true);
          break;
        }
        std::optional<Line> line;
        if (g.family == Family::prop_line) {
          line = p.size() >= 2 ? line_through(p.nodes()[0], p.nodes()[1]) : max_line_weight(p).line;
        }
        for (const auto& k : kernel_polys(p)) {
          const bool divides = line ? divide_by_curve(k, *line).has_value()
                                    : divide_by_curve(k, *target_conic).has_value();
          if (!divides) {
            disagree("kernel polynomial " + to_string(k) + " is not a multiple of " +
                         (line ? to_string(*line) : to_string(*target_conic)),
                     false, true);
            break;
          }
        }
        break;
      }
    }
    return out;
  }

  CampaignOptions o_;
  std::vector<Group> groups_;
  std::vector<std::vector<Variant>> variants_;
  std::vector<Disagreement> scheme_level_;
};

}  // namespace detail

inline CampaignReport verify_theorem(const CampaignOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("verify_theorem: trials must be >= 1");
  if (options.n_min < 1 || options.n_max < options.n_min) {
    throw std::invalid_argument("verify_theorem: bad degree range");
  }
  return detail::Campaign(options).run();
}

inline nlohmann::json to_json(const CampaignReport& r, bool with_timing = true) {
  nlohmann::json j;
  j["theorem"] = to_string(r.options.which);
  j["options"] = {{"n_min", r.options.n_min},   {"n_max", r.options.n_max},
                  {"trials", r.options.trials}, {"adversarial", r.options.adversarial},
                  {"seed", r.options.seed},     {"max_num", r.options.bounds.max_num},
                  {"max_den", r.options.bounds.max_den}};
  j["census"] = nlohmann::json::object();
  for (const auto& [n, c] : r.schemes_per_degree) j["census"][std::to_string(n)] = c;
  j["notes"] = r.notes;
  j["groups"] = nlohmann::json::array();
  for (const auto& g : r.groups) {
    j["groups"].push_back({{"label", g.label},
                           {"degree", g.degree},
                           {"problems", g.problems},
                           {"agreements", g.agreements},
                           {"solvable", g.solvable},
                           {"unsolvable", g.unsolvable},
                           {"unsatisfiable", g.unsatisfiable}});
  }
  j["problems"] = r.problems;
  j["agreements"] = r.agreements;
  j["disagreements"] = nlohmann::json::array();
  for (const auto& d : r.disagreements) {
    j["disagreements"].push_back({{"group", d.group},
                                  {"variant", d.variant},
                                  {"seed", d.seed},
                                  {"detail", d.detail},
                                  {"algebraic", d.algebraic},
                                  {"geometric", d.geometric},
                                  {"problem", d.problem}});
  }
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    j["witnesses"].push_back({{"group", w.group}, {"variant", w.variant}, {"witness", w.witness}});
  }
  if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

inline std::string format_text(const CampaignReport& r) {
  std::ostringstream out;
  out << "theorem: " << to_string(r.options.which) << "\n"
      << "degrees: " << r.options.n_min << ".." << r.options.n_max << ", trials " << r.options.trials
      << ", adversarial " << r.options.adversarial << ", seed " << r.options.seed << "\n";
  out << "census:";
  for (const auto& [n, c] : r.schemes_per_degree) out << " n=" << n << ":" << c;
  out << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  for (const auto& g : r.groups) {
    out << "  " << g.label << "  problems " << g.problems << "  agree " << g.agreements
        << "  solvable " << g.solvable << "  unsolvable " << g.unsolvable;
    if (g.unsatisfiable) out << "  unsatisfiable " << g.unsatisfiable;
    out << "\n";
  }
  for (const auto& w : r.witnesses) {
    out << "witness: " << w.group << " [" << w.variant << "] " << w.witness << "\n";
  }
  for (const auto& d : r.disagreements) {
    out << "DISAGREEMENT: " << d.group << " [" << d.variant << "] seed " << d.seed << ": "
        << d.detail << "\n"
        << d.problem;
  }
  out << "problems: " << r.problems << "\n"
      << "agreements: " << r.agreements << "\n"
      << "disagreements: " << r.disagreements.size() << "\n"
      << "elapsed: " << r.elapsed_seconds << " s\n";
  return out.str();
}

}  // namespace hermite
