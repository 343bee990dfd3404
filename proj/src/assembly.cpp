#include "bgal/assembly.hpp"

#include <fmt/format.h>

#include <array>
#include <cmath>

#include "bgal/error.hpp"

namespace bgal {

namespace {

// phi_j^(d)(x_k) for d = 0..2, j = 1..m, laid out [d][j-1][k]
struct BasisTable {
  int m = 0;
  int nodes = 0;
  std::vector<double> values;
  std::vector<double> d1_a;  // phi_j'(a)
  std::vector<double> d1_b;  // phi_j'(b)

  BasisTable(const BernsteinBasis& basis, const QuadratureRule& rule)
      : m(basis.interior_size()), nodes(rule.order()) {
    values.resize(static_cast<std::size_t>(3 * m * nodes));
    d1_a.resize(m);
    d1_b.resize(m);
    for (int j = 0; j < m; ++j) {
      for (int d = 0; d < 3; ++d) {
        for (int k = 0; k < nodes; ++k) {
          values[index(d, j, k)] = basis.eval_order(j + 1, rule.nodes[k], d);
        }
      }
      d1_a[j] = basis.eval_deriv(j + 1, basis.a(), 1);
      d1_b[j] = basis.eval_deriv(j + 1, basis.b(), 1);
    }
  }

  std::size_t index(int d, int j, int k) const {
    return (static_cast<std::size_t>(d) * m + j) * nodes + k;
  }
  const double* row(int d, int j) const { return values.data() + index(d, j, 0); }
};

// Everything one equation contributes, evaluated at the quadrature nodes.
struct EquationTable {
  std::array<std::vector<double>, 6> coeff;
  std::vector<double> load;  // forcing minus the offset terms (excluding phi_i'' theta_u')
  std::vector<double> own_offset_d1;  // theta_u'(x_k)
  BoundaryData bc;
  double own_offset_d1_a = 0.0;
  double own_offset_d1_b = 0.0;
};

std::vector<double> tabulate(const Expr& e, const QuadratureRule& rule) {
  std::vector<double> v(rule.nodes.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = e.evaluate_at(rule.nodes[k]);
  return v;
}

EquationTable tabulate_equation(const EquationSpec& eq, const BoundaryData& bc,
                                const AffineOffset& own, const AffineOffset& other,
                                const QuadratureRule& rule) {
  EquationTable t;
  t.bc = bc;
  for (int c = 0; c < 6; ++c) t.coeff[c] = tabulate(eq.coeffs[c], rule);
  const std::size_t g = rule.nodes.size();
  t.load.resize(g);
  t.own_offset_d1.resize(g);
  for (std::size_t k = 0; k < g; ++k) {
    const double x = rule.nodes[k];
    const double offset_terms = t.coeff[0][k] * own.eval(x, 2) + t.coeff[1][k] * own.eval(x, 1) +
                                t.coeff[2][k] * own.eval(x, 0) + t.coeff[3][k] * other.eval(x, 2) +
                                t.coeff[4][k] * other.eval(x, 1) + t.coeff[5][k] * other.eval(x, 0);
    t.load[k] = eq.forcing.evaluate_at(x) - offset_terms;
    t.own_offset_d1[k] = own.eval(x, 1);
  }
  t.own_offset_d1_a = own.eval(rule.a, 1);
  t.own_offset_d1_b = own.eval(rule.b, 1);
  return t;
}

// One row (test function i) of one equation: own block, cross block, rhs entry.
void assemble_row(const EquationTable& eq, const BasisTable& phi, const QuadratureRule& rule,
                  int i, double* own_row, double* cross_row, double& rhs) {
  const int g = phi.nodes;
  const double* w = rule.weights.data();
  const double* pi0 = phi.row(0, i);
  const double* pi2 = phi.row(2, i);
  const auto& c = eq.coeff;

  const bool natural_at_b = eq.bc.natural_end() == End::B;
  const double s = natural_at_b ? -1.0 : 1.0;
  const double dpi_nat = natural_at_b ? phi.d1_b[i] : phi.d1_a[i];

  for (int j = 0; j < phi.m; ++j) {
    const double* pj0 = phi.row(0, j);
    const double* pj1 = phi.row(1, j);
    const double* pj2 = phi.row(2, j);
    double own = 0.0;
    double cross = 0.0;
    for (int k = 0; k < g; ++k) {
      own += w[k] * (pi2[k] * pj1[k] + (c[0][k] * pj2[k] + c[1][k] * pj1[k] + c[2][k] * pj0[k]) * pi0[k]);
      cross += w[k] * (c[3][k] * pj2[k] + c[4][k] * pj1[k] + c[5][k] * pj0[k]) * pi0[k];
    }
    const double dpj_nat = natural_at_b ? phi.d1_b[j] : phi.d1_a[j];
    own_row[j] = own + s * dpi_nat * dpj_nat;
    cross_row[j] = cross;
  }

  double load = 0.0;
  for (int k = 0; k < g; ++k) {
    load += w[k] * (eq.load[k] * pi0[k] - pi2[k] * eq.own_offset_d1[k]);
  }
  if (eq.bc.deriv_end == End::B) {
    load += phi.d1_b[i] * eq.bc.deriv_value;
  } else {
    load -= phi.d1_a[i] * eq.bc.deriv_value;
  }
  const double theta_d1_nat = natural_at_b ? eq.own_offset_d1_b : eq.own_offset_d1_a;
  load -= s * dpi_nat * theta_d1_nat;
  rhs = load;
}

void check_finite(const AssembledSystem& sys) {
  const auto m = static_cast<std::size_t>(sys.m);
  for (std::size_t r = 0; r < 2 * m; ++r) {
    for (std::size_t col = 0; col < 2 * m; ++col) {
      if (!std::isfinite(sys.k(r, col))) {
        throw AssemblyError(fmt::format("non-finite matrix entry in equation {} (i={}, j={}) of {} block",
                                        r < m ? 'p' : 'q', r % m + 1, col % m + 1,
                                        (r < m) == (col < m) ? "own" : "cross"));
      }
    }
    if (!std::isfinite(sys.rhs[r])) {
      throw AssemblyError(fmt::format("non-finite load entry in equation {} (i={})",
                                      r < m ? 'p' : 'q', r % m + 1));
    }
  }
}

}  // namespace

AssembledSystem assemble_linear(const ProblemSpec& spec, const BernsteinBasis& basis,
                                const QuadratureRule& rule, const Offsets& offsets) {
  const BasisTable phi(basis, rule);
  const std::array<EquationTable, 2> eqs{
      tabulate_equation(spec.eq_p, spec.bc_p, offsets.p, offsets.q, rule),
      tabulate_equation(spec.eq_q, spec.bc_q, offsets.q, offsets.p, rule)};

  const int m = phi.m;
  AssembledSystem sys{m, DenseMatrix(2 * m, 2 * m), std::vector<double>(2 * m, 0.0)};

#pragma omp parallel for schedule(static)
  for (int r = 0; r < 2 * m; ++r) {
    const int e = r / m;
    const int i = r % m;
    double* row = sys.k.row(r).data();
    double* own = row + e * m;
    double* cross = row + (1 - e) * m;
    assemble_row(eqs[e], phi, rule, i, own, cross, sys.rhs[r]);
  }

  check_finite(sys);
  return sys;
}

AssembledSystem assemble_linear(const ProblemSpec& spec, const BernsteinBasis& basis,
                                const QuadratureRule& rule) {
  return assemble_linear(spec, basis, rule, build_offsets(spec));
}

std::vector<double> assemble_nonlinear_rhs(const ProblemSpec& spec, const BernsteinBasis& basis,
                                           const QuadratureRule& rule, const Solution& current) {
  if (current.basis.degree() != basis.degree()) {
    throw ArgumentError("current solution degree does not match the basis");
  }
  const int m = basis.interior_size();
  const int g = rule.order();
  std::vector<double> out(static_cast<std::size_t>(2 * m), 0.0);
  const std::array<const std::optional<Expr>*, 2> terms{&spec.eq_p.nonlinear, &spec.eq_q.nonlinear};
  if (!*terms[0] && !*terms[1]) return out;

  std::vector<PointState> states(g);
  for (int k = 0; k < g; ++k) states[k] = current.state(rule.nodes[k]);
  const BasisTable phi(basis, rule);

  for (int e = 0; e < 2; ++e) {
    if (!*terms[e]) continue;
    std::vector<double> mv(g);
    for (int k = 0; k < g; ++k) mv[k] = (*terms[e])->evaluate(states[k]);

#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
      const double* pi0 = phi.row(0, i);
      double sum = 0.0;
      for (int k = 0; k < g; ++k) sum += rule.weights[k] * mv[k] * pi0[k];
      out[e * m + i] = -sum;
    }
  }
  return out;
}

double residual_norm(const ProblemSpec& spec, const Solution& sol, const QuadratureRule& rule) {
  const auto sys = assemble_linear(spec, sol.basis, rule, sol.offsets);
  const auto nl = assemble_nonlinear_rhs(spec, sol.basis, rule, sol);
  const auto c = sol.stacked();
  auto r = sys.k.multiply(c);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= sys.rhs[i] + nl[i];
  return max_abs(r);
}

}  // namespace bgal
