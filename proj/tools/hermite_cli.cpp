// hermite: analyze, solve, certify and complete bivariate Hermite problems;
// run theorem-verification campaigns; draw problems as SVG.
//
// Exit codes: 0 verdict computed, 1 campaign disagreement, 2 input error.

#include <hermite/analysis.hpp>
#include <hermite/campaign.hpp>
#include <hermite/problem_file.hpp>
#include <hermite/svg.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kDisagreement = 1;
constexpr int kInputError = 2;

using namespace hermite;

int cmd_analyze(const std::string& path) {
  const auto file = read_problem_file(path);
  std::cout << format_analysis(file.problem, analyze(file.problem));
  return kOk;
}

int cmd_certify(const std::string& path) {
  const auto file = read_problem_file(path);
  const auto& p = file.problem;
  if (p.size() > 64) throw InputError("certify supports at most 64 nodes");
  const auto g = geometric_verdict(p);
  std::cout << "scheme: " << to_string(p.scheme()) << "\n" << format_geometry(g, p.degree());
  std::cout << "geometric verdict: " << (g.ok() ? "both conditions hold" : "violated");
  if (g.witness) std::cout << "; witness " << to_string(*g.witness);
  std::cout << "\n";
  return kOk;
}

int cmd_solve(const std::string& path) {
  const auto file = read_problem_file(path);
  if (file.data.empty()) throw InputError("solve needs a \"data\" block");
  const HermiteData data = hermite_data(file);
  const auto p = interpolate(file.problem, data);
  if (!p) {
    std::cout << "no interpolant: the data is inconsistent for this node set\n";
    return kOk;
  }
  const bool unique = is_correct(file.problem);
  std::cout << "p(x, y) = " << to_string(*p) << "\n"
            << "interpolant: " << (unique ? "unique" : "one of several (free coefficients set to 0)")
            << "\n";
  return kOk;
}

int cmd_complete(const std::string& path, const std::string& out_path) {
  const auto file = read_problem_file(path);
  const auto& p = file.problem;
  if (!is_le(p.scheme())) throw InputError("the scheme has more conditions than dim Pi_n");
  if (!is_solvable(p)) throw InputError("the problem is not solvable, so it has no completion");
  const auto c = complete_to_correct(p);
  std::cerr << "added " << c.added.size() << " simple node(s)";
  for (const auto& a : c.added) std::cerr << " " << to_string(a);
  std::cerr << "\n";
  const std::string text = write_problem(c.problem);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
  }
  return kOk;
}

int cmd_plot(const std::string& path, const std::string& out_path, bool with_witness) {
  const auto file = read_problem_file(path);
  std::optional<Witness> witness;
  if (with_witness && file.problem.size() <= 64) witness = geometric_verdict(file.problem).witness;
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << render_svg(file.problem, witness);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvability and correctness of bivariate Hermite interpolation problems"};
  app.require_subcommand(1);

  std::string file, out_path;
  bool with_witness = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Scheme class, rank, verdicts, witness");
  analyze_cmd->add_option("file", file, "Problem file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Interpolant for the file's data block");
  solve_cmd->add_option("file", file, "Problem file")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Line and conic conditions only");
  certify_cmd->add_option("file", file, "Problem file")->required();

  auto* complete_cmd = app.add_subcommand("complete", "Add simple nodes until the problem is correct");
  complete_cmd->add_option("file", file, "Problem file")->required();
  complete_cmd->add_option("-o,--output", out_path, "Write the completed problem here");

  auto* plot_cmd = app.add_subcommand("plot", "Static SVG of the nodes");
  plot_cmd->add_option("file", file, "Problem file")->required();
  plot_cmd->add_option("-o,--output", out_path, "SVG output path")->required();
  plot_cmd->add_flag("--witness", with_witness, "Draw the offending line or conic, if any");

  std::string theorem;
  CampaignOptions opts;
  bool as_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Theorem-verification campaign");
  verify_cmd->add_option("theorem", theorem, "severi | t2n1 | t2n2 | fn1n2_k12 | divisibility")
      ->required();
  verify_cmd->add_option("--n-min", opts.n_min, "Smallest degree")->check(CLI::Range(1, 12));
  verify_cmd->add_option("--n-max", opts.n_max, "Largest degree")->check(CLI::Range(1, 12));
  verify_cmd->add_option("--trials", opts.trials, "Generic configurations per scheme")
      ->check(CLI::Range(1, 1'000'000));
  verify_cmd->add_option("--adversarial", opts.adversarial, "Repetitions of each degenerate variant")
      ->check(CLI::Range(0, 1'000'000));
  verify_cmd->add_option("--seed", opts.seed, "Master seed");
  verify_cmd->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  verify_cmd->add_option("--max-num", opts.bounds.max_num, "Largest |numerator| of random rationals")
      ->check(CLI::Range(1L, 1'000'000'000L));
  verify_cmd->add_option("--max-den", opts.bounds.max_den, "Largest denominator of random rationals")
      ->check(CLI::Range(1L, 1'000'000'000L));
  verify_cmd->add_option("--retries", opts.bounds.retries, "General-position rejection budget")
      ->check(CLI::Range(1, 1'000'000'000));
  verify_cmd->add_flag("--json", as_json, "Print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(file);
    if (*solve_cmd) return cmd_solve(file);
    if (*certify_cmd) return cmd_certify(file);
    if (*complete_cmd) return cmd_complete(file, out_path);
    if (*plot_cmd) return cmd_plot(file, out_path, with_witness);
    if (*verify_cmd) {
      const auto which = parse_theorem(theorem);
      if (!which) throw InputError("unknown theorem \"" + theorem + "\"");
      if (opts.n_max < opts.n_min) throw InputError("--n-max is below --n-min");
      opts.which = *which;
      const auto report = verify_theorem(opts);
      if (as_json) {
        std::cout << to_json(report).dump(2) << "\n";
      } else {
        std::cout << format_text(report);
      }
      return report.ok() ? kOk : kDisagreement;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
