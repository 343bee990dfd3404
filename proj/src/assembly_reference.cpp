#include "bgal/assembly.hpp"

#include "bgal/error.hpp"

namespace bgal {

namespace {

struct EquationView {
  const EquationSpec& eq;
  const BoundaryData& bc;
  const AffineOffset& own;
  const AffineOffset& other;
};

}  // namespace

AssembledSystem assemble_linear_reference(const ProblemSpec& spec, const BernsteinBasis& basis,
                                          const QuadratureRule& rule, const Offsets& offsets) {
  const int m = basis.interior_size();
  AssembledSystem sys{m, DenseMatrix(2 * m, 2 * m), std::vector<double>(2 * m, 0.0)};
  const EquationView views[2] = {{spec.eq_p, spec.bc_p, offsets.p, offsets.q},
                                 {spec.eq_q, spec.bc_q, offsets.q, offsets.p}};
  const double a = basis.a();
  const double b = basis.b();

  for (int e = 0; e < 2; ++e) {
    const auto& v = views[e];
    const auto& c = v.eq.coeffs;
    const End natural = v.bc.natural_end();
    const double s = natural == End::B ? -1.0 : 1.0;
    const double x_nat = natural == End::B ? b : a;

    for (int i = 1; i <= m; ++i) {
      const int row = e * m + i - 1;
      for (int j = 1; j <= m; ++j) {
        const double own = integrate(
            [&](double x) {
              return basis.eval_deriv(i, x, 2) * basis.eval_deriv(j, x, 1) +
                     (c[0].evaluate_at(x) * basis.eval_deriv(j, x, 2) +
                      c[1].evaluate_at(x) * basis.eval_deriv(j, x, 1) +
                      c[2].evaluate_at(x) * basis.eval(j, x)) *
                         basis.eval(i, x);
            },
            rule);
        const double cross = integrate(
            [&](double x) {
              return (c[3].evaluate_at(x) * basis.eval_deriv(j, x, 2) +
                      c[4].evaluate_at(x) * basis.eval_deriv(j, x, 1) +
                      c[5].evaluate_at(x) * basis.eval(j, x)) *
                     basis.eval(i, x);
            },
            rule);
        sys.k(row, e * m + j - 1) =
            own + s * basis.eval_deriv(i, x_nat, 1) * basis.eval_deriv(j, x_nat, 1);
        sys.k(row, (1 - e) * m + j - 1) = cross;
      }

      double load = integrate(
          [&](double x) {
            const double offset_terms =
                c[0].evaluate_at(x) * v.own.eval(x, 2) + c[1].evaluate_at(x) * v.own.eval(x, 1) +
                c[2].evaluate_at(x) * v.own.eval(x, 0) + c[3].evaluate_at(x) * v.other.eval(x, 2) +
                c[4].evaluate_at(x) * v.other.eval(x, 1) + c[5].evaluate_at(x) * v.other.eval(x, 0);
            return (v.eq.forcing.evaluate_at(x) - offset_terms) * basis.eval(i, x) -
                   basis.eval_deriv(i, x, 2) * v.own.eval(x, 1);
          },
          rule);
      if (v.bc.deriv_end == End::B) {
        load += basis.eval_deriv(i, b, 1) * v.bc.deriv_value;
      } else {
        load -= basis.eval_deriv(i, a, 1) * v.bc.deriv_value;
      }
      load -= s * basis.eval_deriv(i, x_nat, 1) * v.own.eval(x_nat, 1);
      sys.rhs[row] = load;
    }
  }
  return sys;
}

std::vector<double> assemble_nonlinear_rhs_reference(const ProblemSpec& spec,
                                                     const BernsteinBasis& basis,
                                                     const QuadratureRule& rule,
                                                     const Solution& current) {
  const int m = basis.interior_size();
  std::vector<double> out(static_cast<std::size_t>(2 * m), 0.0);
  const std::optional<Expr>* terms[2] = {&spec.eq_p.nonlinear, &spec.eq_q.nonlinear};
  for (int e = 0; e < 2; ++e) {
    if (!*terms[e]) continue;
    for (int i = 1; i <= m; ++i) {
      out[e * m + i - 1] = -integrate(
          [&](double x) { return (*terms[e])->evaluate(current.state(x)) * basis.eval(i, x); },
          rule);
    }
  }
  return out;
}

}  // namespace bgal
