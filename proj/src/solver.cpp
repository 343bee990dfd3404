#include "bgal/solver.hpp"

#include <fmt/format.h>

#include <cmath>
#include <exception>
#include <limits>

#include "bgal/assembly.hpp"
#include "bgal/error.hpp"
#include "bgal/linalg.hpp"

namespace bgal {

void SolverConfig::validate() const {
  if (!(picard_tol > 0.0) || !(degree_tol > 0.0)) {
    throw ArgumentError("tolerances must be positive");
  }
  if (max_picard_iters < 1) throw ArgumentError("max Picard iterations must be >= 1");
  if (fixed_iters && *fixed_iters < 1) throw ArgumentError("fixed iterations must be >= 1");
  if (grid_points < 2) throw ArgumentError("grid needs at least two points");
  if (min_degree < 3 || max_degree < min_degree) {
    throw ArgumentError(fmt::format("invalid degree range {}..{}", min_degree, max_degree));
  }
  if (quad_order && (*quad_order < 1 || *quad_order > kMaxQuadratureOrder)) {
    throw ArgumentError(fmt::format("quadrature order must lie in 1..{}", kMaxQuadratureOrder));
  }
}

int SolverConfig::quadrature_order_for(int degree) const {
  return quad_order.value_or(default_quadrature_order(degree));
}

Solution picard_solve(const ProblemSpec& spec, int degree, const SolverConfig& config) {
  return picard_solve(spec, degree, config, build_offsets(spec));
}

Solution picard_solve(const ProblemSpec& spec, int degree, const SolverConfig& config,
                      const Offsets& offsets) {
  config.validate();
  const BernsteinBasis basis(degree, spec.a, spec.b);
  const QuadratureRule rule =
      gauss_legendre(config.quadrature_order_for(degree), spec.a, spec.b);
  const AssembledSystem sys = assemble_linear(spec, basis, rule, offsets);

  Solution current = Solution::from_stacked(basis, offsets, solve_dense(sys.k, sys.rhs));
  if (spec.is_linear()) {
    current.converged = true;
    return current;
  }

  const auto grid = uniform_grid(spec.a, spec.b, config.grid_points);
  const int limit = config.fixed_iters.value_or(config.max_picard_iters);
  std::vector<double> distances;

  for (int k = 1; k <= limit; ++k) {
    const auto nl = assemble_nonlinear_rhs(spec, basis, rule, current);
    std::vector<double> rhs = sys.rhs;
    for (std::size_t r = 0; r < rhs.size(); ++r) rhs[r] += nl[r];

    Solution next = Solution::from_stacked(basis, offsets, solve_dense(sys.k, rhs));
    const double dist = sup_distance(current, next, grid);
    distances.push_back(dist);
    next.iterations_used = k;
    next.picard_distances = distances;
    current = std::move(next);

    if (!std::isfinite(dist)) {
      throw DivergenceError(fmt::format("Picard iteration {} produced a non-finite iterate", k));
    }
    if (!config.fixed_iters && dist < config.picard_tol) {
      current.converged = true;
      return current;
    }
    if (distances.size() >= 6) {
      const std::size_t last = distances.size() - 1;
      bool growing = true;
      for (std::size_t s = last - 4; s <= last; ++s) growing = growing && distances[s] > distances[s - 1];
      if (growing && distances[last] > 10.0 * distances[last - 5]) {
        throw DivergenceError(fmt::format(
            "Picard iteration diverging: distance grew from {:.3e} to {:.3e} over 5 iterations",
            distances[last - 5], distances[last]));
      }
    }
  }

  if (config.fixed_iters) {
    current.converged = distances.back() < config.picard_tol;
    return current;
  }
  const double prev = distances.size() >= 2 ? distances[distances.size() - 2]
                                            : std::numeric_limits<double>::quiet_NaN();
  throw NonConvergenceError(
      fmt::format("Picard iteration did not reach {:.1e} in {} iterations (last distances {:.3e}, {:.3e})",
                  config.picard_tol, limit, prev, distances.back()),
      prev, distances.back());
}

RefineResult select_by_degree_tol(const std::vector<Solution>& solutions,
                                  const SolverConfig& config) {
  if (solutions.empty()) throw ArgumentError("no solutions to select from");
  const auto grid = uniform_grid(solutions.front().basis.a(), solutions.front().basis.b(),
                                 config.grid_points);
  std::vector<DegreeStep> history;
  history.push_back({solutions[0].basis.degree(), solutions[0].iterations_used,
                     std::numeric_limits<double>::quiet_NaN()});
  for (std::size_t s = 1; s < solutions.size(); ++s) {
    const double dist = sup_distance(solutions[s - 1], solutions[s], grid);
    history.push_back({solutions[s].basis.degree(), solutions[s].iterations_used, dist});
    if (dist < config.degree_tol) return {solutions[s], history, true};
  }
  return {solutions.back(), history, false};
}

RefineResult refine_solve(const ProblemSpec& spec, const SolverConfig& config) {
  config.validate();
  std::vector<Solution> solved;
  const auto grid = uniform_grid(spec.a, spec.b, config.grid_points);
  for (int n = config.min_degree; n <= config.max_degree; ++n) {
    solved.push_back(picard_solve(spec, n, config));
    if (solved.size() >= 2 &&
        sup_distance(solved[solved.size() - 2], solved.back(), grid) < config.degree_tol) {
      break;
    }
  }
  return select_by_degree_tol(solved, config);
}

std::vector<Solution> solve_all_degrees(const ProblemSpec& spec, const SolverConfig& config) {
  config.validate();
  const int count = config.max_degree - config.min_degree + 1;
  std::vector<std::optional<Solution>> slots(count);
  std::vector<std::exception_ptr> errors(count);

#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s < count; ++s) {
    try {
      slots[s] = picard_solve(spec, config.min_degree + s, config);
    } catch (...) {
      errors[s] = std::current_exception();
    }
  }

  std::vector<Solution> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    if (errors[s]) std::rethrow_exception(errors[s]);
    out.push_back(std::move(*slots[s]));
  }
  return out;
}

}  // namespace bgal
