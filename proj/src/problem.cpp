#include "bgal/problem.hpp"

#include <cmath>

#include "bgal/error.hpp"

namespace bgal {

bool EquationSpec::has_cross_terms() const {
  for (int k = 3; k < 6; ++k) {
    const auto* num = std::get_if<Expr::Number>(&coeffs[k].root().value);
    if (!num || num->value != 0.0) return true;
  }
  return false;
}

void ProblemSpec::validate() const {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ValidationError("domain requires finite a < b");
  }
  const VariableSet only_x{Variable::X};
  auto check = [&](const EquationSpec& eq, const char* eq_name, const char* prefix,
                   const char* forcing_name) {
    for (int k = 0; k < 6; ++k) {
      if (!eq.coeffs[k].depends_only_on(only_x)) {
        throw ValidationError(std::string("[") + eq_name + "] " + prefix +
                              std::to_string(k + 1) + " may depend on x only");
      }
    }
    if (!eq.forcing.depends_only_on(only_x)) {
      throw ValidationError(std::string("[") + eq_name + "] " + forcing_name +
                            " may depend on x only");
    }
  };
  check(eq_p, "equation.p", "a", "f");
  check(eq_q, "equation.q", "b", "g");
  for (const BoundaryData* bc : {&bc_p, &bc_q}) {
    if (!std::isfinite(bc->value_a) || !std::isfinite(bc->value_b) ||
        !std::isfinite(bc->deriv_value)) {
      throw ValidationError("boundary values must be finite");
    }
  }
}

double AffineOffset::eval(double x, int order) const {
  // Horner on the order-th derivative of the monomial series
  double r = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > static_cast<std::size_t>(order);) {
    double falling = 1.0;
    for (int j = 0; j < order; ++j) falling *= static_cast<double>(k - j);
    r = r * x + falling * coeffs_[k];
  }
  return r;
}

AffineOffset build_offset(const BoundaryData& bc, double a, double b) {
  const double slope = (bc.value_b - bc.value_a) / (b - a);
  return AffineOffset({bc.value_a - slope * a, slope});
}

Offsets build_offsets(const ProblemSpec& spec) {
  return {build_offset(spec.bc_p, spec.a, spec.b), build_offset(spec.bc_q, spec.a, spec.b)};
}

}  // namespace bgal
