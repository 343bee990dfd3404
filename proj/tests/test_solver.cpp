#include <doctest.h>

#include <cmath>

#include "bgal/assembly.hpp"
#include "bgal/error.hpp"
#include "bgal/presets.hpp"
#include "bgal/problem_file.hpp"
#include "bgal/report.hpp"
#include "bgal/solver.hpp"
#include "problems.hpp"

using namespace bgal;

namespace {

double max_error(const Solution& sol, Which which, const Expr& exact) {
  return max_grid_error(sol, which, exact, uniform_grid(sol.basis.a(), sol.basis.b(), 101));
}

}  // namespace

TEST_CASE("first example, degree 3: p coefficients and midpoint error") {
  const auto file = preset("example1");
  const Solution sol = picard_solve(file.spec, 3, SolverConfig{});
  REQUIRE(sol.converged);
  // printed as 0.00054548 x(1-x)^2 + 2.99843577 x^2(1-x); phi_1 = 3x(1-x)^2, phi_2 = 3x^2(1-x)
  CHECK(std::abs(3 * sol.coeffs_p[0] - 0.00054548) <= 5e-5);
  CHECK(std::abs(3 * sol.coeffs_p[1] - 2.99843577) <= 5e-5);
  const double err = std::abs(sol.eval(0.5, Which::P) - file.exact.p->evaluate_at(0.5));
  CHECK(err == doctest::Approx(1.273431e-4).epsilon(0.02));
  CHECK(sol.eval(0.0, Which::P) == 0.0);
  CHECK(sol.eval(0.0, Which::Q) == 0.0);
}

TEST_CASE("first example, degree 3: five lagged updates reproduce the printed polynomials") {
  SolverConfig config;
  config.fixed_iters = 5;
  const Solution sol = picard_solve(preset("example1").spec, 3, config);
  CHECK(sol.iterations_used == 5);
  CHECK(std::abs(3 * sol.coeffs_p[0] - 0.00054548) <= 1e-7);
  CHECK(std::abs(3 * sol.coeffs_p[1] - 2.99843577) <= 1e-7);
  CHECK(std::abs(3 * sol.coeffs_q[0] - 0.39311569) <= 1e-7);
  CHECK(std::abs(3 * sol.coeffs_q[1] + 2.07669616) <= 1e-7);
}

TEST_CASE("second example, degree 3: values of the converged polynomial") {
  const auto file = preset("example2");
  const Solution sol = picard_solve(file.spec, 3, SolverConfig{});
  REQUIRE(sol.converged);
  const double err = std::abs(sol.eval(0.5, Which::P) - 0.0625);
  CHECK(err == doctest::Approx(5.93e-3).epsilon(0.05));
  CHECK(std::abs(sol.eval(1.0, Which::P) - 1.0) <= 1e-7);
}

TEST_CASE("linear problems return after the bootstrap solve") {
  const auto zero = parse_problem(testdata::kZero).spec;
  const Solution z = picard_solve(zero, 4, SolverConfig{});
  CHECK(z.converged);
  CHECK(z.iterations_used == 0);
  for (double c : z.stacked()) CHECK(c == 0.0);

  const auto right = parse_problem(testdata::kRightDerivative);
  for (int n : {3, 5}) {
    const Solution s = picard_solve(right.spec, n, SolverConfig{});
    for (double x : uniform_grid(0, 2, 21)) {
      CHECK(std::abs(s.eval(x, Which::P) - x * x * x) <= 1e-11);
      CHECK(std::abs(s.eval(x, Which::Q) - (x * x + 1)) <= 1e-11);
      CHECK(std::abs(s.eval(x, Which::P, 1) - 3 * x * x) <= 1e-10);
      CHECK(std::abs(s.eval(x, Which::Q, 2) - 2.0) <= 1e-9);
    }
  }
}

TEST_CASE("solution evaluation outside the domain") {
  const Solution sol = picard_solve(preset("example1").spec, 3, SolverConfig{});
  CHECK_THROWS_AS(sol.eval(1.5, Which::P), DomainError);
  CHECK_THROWS_AS(sol.eval(-0.1, Which::Q, 1), DomainError);
}

TEST_CASE("every returned solution honours the endpoint values") {
  for (const auto name : preset_names()) {
    const auto file = preset(name);
    for (int n : {3, 5, 8}) {
      const Solution sol = picard_solve(file.spec, n, SolverConfig{});
      CHECK(std::abs(sol.eval(file.spec.a, Which::P) - file.spec.bc_p.value_a) <= 1e-12);
      CHECK(std::abs(sol.eval(file.spec.b, Which::P) - file.spec.bc_p.value_b) <= 1e-12);
      CHECK(std::abs(sol.eval(file.spec.a, Which::Q) - file.spec.bc_q.value_a) <= 1e-12);
      CHECK(std::abs(sol.eval(file.spec.b, Which::Q) - file.spec.bc_q.value_b) <= 1e-12);
    }
  }
}

TEST_CASE("converged solutions are fixed points of the discrete equations") {
  for (const auto name : preset_names()) {
    const auto spec = preset(name).spec;
    for (int n = 3; n <= 9; ++n) {
      const Solution sol = picard_solve(spec, n, SolverConfig{});
      REQUIRE(sol.converged);
      CHECK(residual_norm(spec, sol, gauss_legendre(default_quadrature_order(n), spec.a, spec.b)) <= 1e-8);
    }
  }
}

TEST_CASE("first example is reproduced exactly once the trial space contains it") {
  const auto file = preset("example1");
  for (int n : {4, 5, 6}) {
    const Solution sol = picard_solve(file.spec, n, SolverConfig{});
    CHECK(max_error(sol, Which::P, *file.exact.p) <= 1e-8);
    CHECK(max_error(sol, Which::Q, *file.exact.q) <= 1e-8);
  }
}

TEST_CASE("the converged trial function does not depend on the offset") {
  const auto spec = preset("example2").spec;
  const Offsets quadratic{AffineOffset({0, 0, 1}), AffineOffset({0, 0, 1})};
  const auto grid = uniform_grid(0, 1, 101);
  for (int n = 3; n <= 6; ++n) {
    const Solution linear = picard_solve(spec, n, SolverConfig{});
    const Solution other = picard_solve(spec, n, SolverConfig{}, quadratic);
    CHECK(sup_distance(linear, other, grid) <= 1e-9);
    CHECK(std::abs(linear.coeffs_p[0] - other.coeffs_p[0]) > 1e-3);
  }
}

TEST_CASE("degree refinement") {
  const auto spec = preset("example1").spec;
  SolverConfig config;
  config.min_degree = 3;
  config.max_degree = 4;
  config.degree_tol = 1e-12;
  const auto r34 = refine_solve(spec, config);
  REQUIRE(r34.history.size() == 2);
  CHECK(std::isnan(r34.history[0].distance));
  // degree-4 solution is exact, so the distance is the degree-3 error
  CHECK(r34.history[1].distance > 1e-4);
  CHECK(r34.history[1].distance < 4e-2);
  CHECK_FALSE(r34.converged);

  config.min_degree = 4;
  config.max_degree = 8;
  config.degree_tol = 1e-8;
  const auto r4 = refine_solve(spec, config);
  CHECK(r4.converged);
  CHECK(r4.history.size() == 2);
  CHECK(r4.history[1].distance <= 1e-8);
  CHECK(r4.solution.basis.degree() == 5);

  config.min_degree = config.max_degree = 5;
  const auto single = refine_solve(spec, config);
  CHECK(single.history.size() == 1);
  CHECK(single.solution.basis.degree() == 5);
}

TEST_CASE("parallel degree sweep matches sequential solves") {
  for (const char* name : {"example2", "example3"}) {
    const auto spec = preset(name).spec;
    SolverConfig config;
    config.min_degree = 3;
    config.max_degree = 9;
    const auto all = solve_all_degrees(spec, config);
    REQUIRE(all.size() == 7);
    for (int n = 3; n <= 9; ++n) {
      const Solution seq = picard_solve(spec, n, config);
      CHECK(all[n - 3].basis.degree() == n);
      CHECK(all[n - 3].stacked() == seq.stacked());
    }
    const auto selected = select_by_degree_tol(all, config);
    const auto refined = refine_solve(spec, config);
    CHECK(selected.solution.basis.degree() == refined.solution.basis.degree());
    CHECK(selected.converged == refined.converged);
  }
}

TEST_CASE("errors converge monotonically across degrees") {
  for (const auto name : preset_names()) {
    const auto file = preset(name);
    double prev = INFINITY;
    for (int n = 3; n <= 11; ++n) {
      const Solution sol = picard_solve(file.spec, n, SolverConfig{});
      const double err = std::max(max_error(sol, Which::P, *file.exact.p), max_error(sol, Which::Q, *file.exact.q));
      // below ~1e-10 the error is roundoff and no longer ordered
      if (prev > 1e-10 && err > 1e-10) CHECK_MESSAGE(err <= prev, name << " degree " << n);
      prev = err;
    }
  }
}

TEST_CASE("iteration limits and divergence") {
  SolverConfig config;
  config.max_picard_iters = 3;
  try {
    picard_solve(preset("example1").spec, 3, config);
    FAIL("expected NonConvergenceError");
  } catch (const NonConvergenceError& e) {
    CHECK(e.last_distance() > 1e-10);
    CHECK(e.previous_distance() > e.last_distance());
  }

  auto wild = parse_problem(testdata::kZero).spec;
  wild.eq_p.forcing = parse_expr("1000");
  wild.eq_p.nonlinear = parse_expr("50 * p^2");
  CHECK_THROWS_AS(picard_solve(wild, 5, SolverConfig{}), DivergenceError);
}

TEST_CASE("replication mode runs the requested number of updates") {
  SolverConfig config;
  config.fixed_iters = 4;
  const Solution sol = picard_solve(preset("example2").spec, 4, config);
  CHECK(sol.iterations_used == 4);
  CHECK(sol.picard_distances.size() == 4);
  CHECK_FALSE(sol.converged);
}

TEST_CASE("configuration validation") {
  SolverConfig c;
  c.picard_tol = 0;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
  c = SolverConfig{};
  c.max_picard_iters = 0;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
  c = SolverConfig{};
  c.min_degree = 2;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
  c = SolverConfig{};
  c.quad_order = 65;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
  CHECK_THROWS_AS(picard_solve(preset("example1").spec, 2, SolverConfig{}), ArgumentError);
}
