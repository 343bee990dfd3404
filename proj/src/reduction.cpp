#include "bgal/reduction.hpp"

#include <cmath>
#include <string>

#include "bgal/error.hpp"

namespace bgal {

void SixthOrderSpec::validate() const {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ValidationError("domain requires finite a < b");
  }
  const VariableSet only_x{Variable::X};
  for (int k = 0; k < 6; ++k) {
    if (!coeffs[k].depends_only_on(only_x)) {
      throw ValidationError("[equation] c" + std::to_string(k) + " may depend on x only");
    }
  }
  if (!forcing.depends_only_on(only_x)) {
    throw ValidationError("[equation] r may depend on x only");
  }
  if (nonlinear &&
      !nonlinear->depends_only_on({Variable::X, Variable::P, Variable::DP, Variable::D2P})) {
    throw ValidationError(
        "[equation] nonlinear may use x, p, dp, d2p only (q-variables would mean derivatives "
        "above second order inside the nonlinear term)");
  }
}

ProblemSpec reduce(const SixthOrderSpec& spec6) {
  spec6.validate();
  ProblemSpec out;
  out.a = spec6.a;
  out.b = spec6.b;

  // p''' - q = 0
  out.eq_p.coeffs[5] = Expr::constant(-1.0);
  // q''' + c5 q'' + c4 q' + c3 q + c2 p'' + c1 p' + c0 p + M = r
  for (int k = 0; k < 6; ++k) out.eq_q.coeffs[k] = spec6.coeffs[5 - k];
  out.eq_q.forcing = spec6.forcing;
  out.eq_q.nonlinear = spec6.nonlinear;

  out.bc_p = spec6.bc_p;
  out.bc_q = spec6.bc_q;
  out.validate();
  return out;
}

}  // namespace bgal
