#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgal/problem_file.hpp"
#include "bgal/solution.hpp"
#include "bgal/solver.hpp"

namespace bgal {

/// One sample point. Exact values and errors are NaN when no exact solution
/// is known.
struct ErrorRow {
  double x = 0.0;
  double p_exact = 0.0;
  double p_approx = 0.0;
  double p_abs_err = 0.0;
  double q_exact = 0.0;
  double q_approx = 0.0;
  double q_abs_err = 0.0;
};

/// Rows at x = a + k (b - a) / 10 for k = 1..9.
struct ErrorTable {
  std::vector<ErrorRow> rows;
  bool has_exact_p = false;
  bool has_exact_q = false;

  /// Largest absolute error over the rows; NaN without an exact solution.
  double max_error(Which which) const;
};

ErrorTable make_error_table(const Solution& sol, const ExactSolutions& exact);

/// max over `grid` of |u~ - u| for one function.
double max_grid_error(const Solution& sol, Which which, const Expr& exact,
                      const std::vector<double>& grid);

/// Header `x,p_exact,p_approx,p_abs_err,q_exact,q_approx,q_abs_err`; numbers
/// with 17 significant digits, unknown values left empty.
std::string format_csv(const ErrorTable& table);

/// Aligned human-readable table.
std::string format_table(const ErrorTable& table);

std::string format_sweep_csv(const std::vector<Solution>& solutions, const RefineResult& refined,
                             const ExactSolutions& exact);
std::string format_sweep_table(const std::vector<Solution>& solutions, const RefineResult& refined,
                               const ExactSolutions& exact);

}  // namespace bgal
