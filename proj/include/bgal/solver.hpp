#pragma once

#include <optional>
#include <vector>

#include "bgal/problem.hpp"
#include "bgal/quadrature.hpp"
#include "bgal/solution.hpp"

namespace bgal {

struct SolverConfig {
  /// Sup-distance between consecutive Picard iterates that counts as converged.
  double picard_tol = 1e-10;
  int max_picard_iters = 50;
  /// Replication mode: exactly this many Picard updates after the bootstrap
  /// solve, regardless of picard_tol.
  std::optional<int> fixed_iters;
  /// Sup-distance between consecutive-degree solutions that ends a refinement.
  double degree_tol = 1e-8;
  int grid_points = 101;
  int min_degree = 3;
  int max_degree = 12;
  /// Gauss-Legendre points; max(24, 2n) when unset.
  std::optional<int> quad_order;

  /// Throws ArgumentError on non-positive tolerances or iteration counts.
  void validate() const;
  int quadrature_order_for(int degree) const;
};

/// Bootstrap with the nonlinear terms dropped, then iterate
///   K c^k = rhs + N(c^{k-1})
/// until the grid sup-distance between iterates drops below picard_tol (or for
/// exactly fixed_iters updates). Linear problems return after the bootstrap.
///
/// Throws NonConvergenceError after max_picard_iters updates and
/// DivergenceError when the distance grows tenfold over five updates.
Solution picard_solve(const ProblemSpec& spec, int degree, const SolverConfig& config);

/// Same with explicit offsets; any offsets matching the endpoint values span
/// the same trial space.
Solution picard_solve(const ProblemSpec& spec, int degree, const SolverConfig& config,
                      const Offsets& offsets);

struct DegreeStep {
  int degree = 0;
  int iterations = 0;
  /// Sup-distance to the previous degree's solution; NaN for the first degree.
  double distance = 0.0;
};

struct RefineResult {
  Solution solution;
  std::vector<DegreeStep> history;
  bool converged = false;
};

/// Solves at min_degree, min_degree + 1, ... and stops once consecutive-degree
/// solutions are within degree_tol, or at max_degree (flagged unconverged).
RefineResult refine_solve(const ProblemSpec& spec, const SolverConfig& config);

/// Solves every degree in [min_degree, max_degree] concurrently. Results are
/// in degree order and independent of the thread count. The first failing
/// degree's exception is rethrown.
std::vector<Solution> solve_all_degrees(const ProblemSpec& spec, const SolverConfig& config);

/// Applies the degree_tol stopping rule to already computed, degree-ordered
/// solutions. Agrees with refine_solve.
RefineResult select_by_degree_tol(const std::vector<Solution>& solutions,
                                  const SolverConfig& config);

}  // namespace bgal
