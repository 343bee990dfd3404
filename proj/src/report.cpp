#include "bgal/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace bgal {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string csv_number(double v) { return std::isnan(v) ? "" : fmt::format("{:.17g}", v); }

std::string table_number(double v, const char* spec) {
  return std::isnan(v) ? std::string("-") : fmt::format(fmt::runtime(spec), v);
}

}  // namespace

double ErrorTable::max_error(Which which) const {
  if (which == Which::P ? !has_exact_p : !has_exact_q) return kNaN;
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, which == Which::P ? r.p_abs_err : r.q_abs_err);
  return m;
}

ErrorTable make_error_table(const Solution& sol, const ExactSolutions& exact) {
  ErrorTable t;
  t.has_exact_p = exact.p.has_value();
  t.has_exact_q = exact.q.has_value();
  const double a = sol.basis.a();
  const double b = sol.basis.b();
  for (int k = 1; k <= 9; ++k) {
    ErrorRow r;
    r.x = a + k * (b - a) / 10.0;
    r.p_approx = sol.eval(r.x, Which::P);
    r.q_approx = sol.eval(r.x, Which::Q);
    r.p_exact = exact.p ? exact.p->evaluate_at(r.x) : kNaN;
    r.q_exact = exact.q ? exact.q->evaluate_at(r.x) : kNaN;
    r.p_abs_err = exact.p ? std::abs(r.p_exact - r.p_approx) : kNaN;
    r.q_abs_err = exact.q ? std::abs(r.q_exact - r.q_approx) : kNaN;
    t.rows.push_back(r);
  }
  return t;
}

double max_grid_error(const Solution& sol, Which which, const Expr& exact,
                      const std::vector<double>& grid) {
  double m = 0.0;
  for (double x : grid) m = std::max(m, std::abs(sol.eval(x, which) - exact.evaluate_at(x)));
  return m;
}

std::string format_csv(const ErrorTable& table) {
  std::string out = "x,p_exact,p_approx,p_abs_err,q_exact,q_approx,q_abs_err\n";
  for (const auto& r : table.rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", csv_number(r.x), csv_number(r.p_exact),
                       csv_number(r.p_approx), csv_number(r.p_abs_err), csv_number(r.q_exact),
                       csv_number(r.q_approx), csv_number(r.q_abs_err));
  }
  return out;
}

std::string format_table(const ErrorTable& table) {
  std::string out = fmt::format("{:>6}  {:>14} {:>14} {:>12}  {:>14} {:>14} {:>12}\n", "x",
                                "p exact", "p approx", "|p err|", "q exact", "q approx",
                                "|q err|");
  for (const auto& r : table.rows) {
    out += fmt::format("{:>6.3f}  {:>14} {:>14} {:>12}  {:>14} {:>14} {:>12}\n", r.x,
                       table_number(r.p_exact, "{:.8f}"), table_number(r.p_approx, "{:.8f}"),
                       table_number(r.p_abs_err, "{:.6e}"), table_number(r.q_exact, "{:.8f}"),
                       table_number(r.q_approx, "{:.8f}"), table_number(r.q_abs_err, "{:.6e}"));
  }
  return out;
}

std::string format_sweep_csv(const std::vector<Solution>& solutions, const RefineResult& refined,
                             const ExactSolutions& exact) {
  std::string out = "degree,iterations,converged,distance,p_max_err,q_max_err\n";
  for (std::size_t s = 0; s < solutions.size(); ++s) {
    const auto table = make_error_table(solutions[s], exact);
    const double dist = s < refined.history.size() ? refined.history[s].distance : kNaN;
    out += fmt::format("{},{},{},{},{},{}\n", solutions[s].basis.degree(),
                       solutions[s].iterations_used, solutions[s].converged ? 1 : 0,
                       csv_number(dist), csv_number(table.max_error(Which::P)),
                       csv_number(table.max_error(Which::Q)));
  }
  return out;
}

std::string format_sweep_table(const std::vector<Solution>& solutions, const RefineResult& refined,
                               const ExactSolutions& exact) {
  std::string out = fmt::format("{:>6} {:>10} {:>14} {:>14} {:>14}\n", "degree", "iterations",
                                "distance", "max |p err|", "max |q err|");
  for (std::size_t s = 0; s < solutions.size(); ++s) {
    const auto table = make_error_table(solutions[s], exact);
    const double dist = s < refined.history.size() ? refined.history[s].distance : kNaN;
    out += fmt::format("{:>6} {:>10} {:>14} {:>14} {:>14}\n", solutions[s].basis.degree(),
                       solutions[s].iterations_used, table_number(dist, "{:.6e}"),
                       table_number(table.max_error(Which::P), "{:.6e}"),
                       table_number(table.max_error(Which::Q), "{:.6e}"));
  }
  out += fmt::format("degree tolerance {} at degree {}\n",
                     refined.converged ? "met" : "NOT met", refined.solution.basis.degree());
  return out;
}

}  // namespace bgal
