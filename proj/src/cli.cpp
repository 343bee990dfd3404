#include "bgal/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <regex>

#include "bgal/error.hpp"
#include "bgal/presets.hpp"
#include "bgal/problem_file.hpp"
#include "bgal/report.hpp"
#include "bgal/solver.hpp"

namespace bgal {

namespace {

constexpr int kOk = 0;
constexpr int kSolverFailure = 1;
constexpr int kUsage = 2;

struct SolveOptions {
  std::string file;
  std::string preset;
  std::optional<int> degree;
  std::string sweep;
  double tol_picard = 1e-10;
  double tol_degree = 1e-8;
  std::optional<int> fixed_iters;
  std::optional<int> quad_order;
  int grid = 101;
  int max_iters = 50;
  std::string format = "table";
  std::string out;
};

struct ReduceOptions {
  std::string file;
  std::string out;
};

// Output goes to --out when given, else to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ArgumentError(fmt::format("cannot write output file '{}'", path));
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::pair<int, int> parse_sweep(const std::string& text) {
  static const std::regex pattern(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw ArgumentError(fmt::format("--sweep expects MIN..MAX, got '{}'", text));
  }
  return {std::stoi(m[1]), std::stoi(m[2])};
}

int run_solve(const SolveOptions& opt, std::ostream& out) {
  if (opt.file.empty() == opt.preset.empty()) {
    throw ArgumentError("solve needs exactly one of a problem file or --preset NAME");
  }
  if (opt.format != "table" && opt.format != "csv") {
    throw ArgumentError(fmt::format("unknown format '{}'", opt.format));
  }
  const ProblemFile problem = opt.preset.empty() ? load_problem(opt.file) : preset(opt.preset);
  const std::string label = opt.preset.empty() ? opt.file : opt.preset;

  SolverConfig config;
  config.picard_tol = opt.tol_picard;
  config.degree_tol = opt.tol_degree;
  config.fixed_iters = opt.fixed_iters;
  config.quad_order = opt.quad_order;
  config.grid_points = opt.grid;
  config.max_picard_iters = opt.max_iters;
  if (!opt.sweep.empty()) {
    std::tie(config.min_degree, config.max_degree) = parse_sweep(opt.sweep);
  }
  config.validate();
  Sink sink(opt.out, out);
  std::ostream& os = sink.stream();

  if (!opt.sweep.empty()) {
    const auto solutions = solve_all_degrees(problem.spec, config);
    const auto refined = select_by_degree_tol(solutions, config);
    if (opt.format == "csv") {
      os << format_sweep_csv(solutions, refined, problem.exact);
    } else {
      os << fmt::format("problem: {}  degrees: {}..{}\n", label, config.min_degree,
                        config.max_degree);
      os << format_sweep_table(solutions, refined, problem.exact);
      os << "\n" << format_table(make_error_table(refined.solution, problem.exact));
    }
    return refined.converged ? kOk : kSolverFailure;
  }

  const int degree = opt.degree.value_or(5);
  const Solution sol = picard_solve(problem.spec, degree, config);
  const ErrorTable table = make_error_table(sol, problem.exact);
  if (opt.format == "csv") {
    os << format_csv(table);
    return kOk;
  }
  os << fmt::format("problem: {}  degree: {}  quadrature points: {}\n", label, degree,
                    config.quadrature_order_for(degree));
  if (problem.spec.is_linear()) {
    os << "linear problem: single solve\n";
  } else {
    os << fmt::format("picard: {} iterations{}, last distance {:.3e}, {}\n", sol.iterations_used,
                      opt.fixed_iters ? " (fixed)" : "", sol.picard_distances.back(),
                      sol.converged ? "converged" : "not converged");
  }
  os << format_table(table);
  if (table.has_exact_p || table.has_exact_q) {
    os << fmt::format("max |p err| = {:.6e}   max |q err| = {:.6e}\n", table.max_error(Which::P),
                      table.max_error(Which::Q));
  }
  return kOk;
}

int run_reduce(const ReduceOptions& opt, std::ostream& out) {
  const SixthOrderFile six = load_sixth_order(opt.file);
  Sink sink(opt.out, out);
  sink.stream() << write_problem(reduce_file(six));
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galerkin solver for coupled third-order boundary value problems with Bernstein trial functions"};
  app.name("bgal");
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem file or a preset");
  solve_cmd->add_option("file", solve.file, "Problem file (coupled or sixth-order)");
  solve_cmd->add_option("--preset", solve.preset, "example1 | example2 | example3 | example4");
  auto* degree_opt = solve_cmd->add_option("--degree", solve.degree, "Bernstein degree n (default 5)");
  auto* sweep_opt = solve_cmd->add_option("--sweep", solve.sweep, "Degree range MIN..MAX");
  degree_opt->excludes(sweep_opt);
  solve_cmd->add_option("--tol-picard", solve.tol_picard, "Picard tolerance (default 1e-10)");
  solve_cmd->add_option("--tol-degree", solve.tol_degree, "Degree-refinement tolerance (default 1e-8)");
  solve_cmd->add_option("--fixed-iters", solve.fixed_iters, "Run exactly K Picard updates");
  solve_cmd->add_option("--max-iters", solve.max_iters, "Picard iteration limit (default 50)");
  solve_cmd->add_option("--quad-order", solve.quad_order, "Gauss-Legendre points (default max(24, 2n))");
  solve_cmd->add_option("--grid", solve.grid, "Grid points for convergence distances (default 101)");
  solve_cmd->add_option("--format", solve.format, "table | csv")
      ->check(CLI::IsMember({"table", "csv"}));
  solve_cmd->add_option("--out", solve.out, "Write output to PATH");

  ReduceOptions reduce_opts;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a sixth-order problem file to a coupled system");
  reduce_cmd->add_option("file", reduce_opts.file, "Sixth-order problem file")->required();
  reduce_cmd->add_option("--out", reduce_opts.out, "Write output to PATH");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve, out);
    return run_reduce(reduce_opts, out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "solver error: " << e.what() << "\n";
    return kSolverFailure;
  }
}

}  // namespace bgal
