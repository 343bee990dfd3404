#pragma once

#include <array>
#include <optional>

#include "bgal/expr.hpp"
#include "bgal/problem.hpp"

namespace bgal {

/// p^(6) + c5 p^(5) + c4 p^(4) + c3 p''' + c2 p'' + c1 p' + c0 p + M(x, p, p', p'') = r
/// on [a,b]. Boundary data is given directly for the reduced pair (p, q = p''');
/// there is no general translation of sixth-order conditions into that form.
struct SixthOrderSpec {
  double a = 0.0;
  double b = 1.0;
  /// coeffs[k] multiplies p^(k), k = 0..5.
  std::array<Expr, 6> coeffs{};
  Expr forcing{};
  std::optional<Expr> nonlinear;
  BoundaryData bc_p;
  BoundaryData bc_q;

  /// Throws ValidationError: coefficients/forcing in x only, M in x, p, dp, d2p only.
  void validate() const;
};

/// Substitutes q = p''' and returns the coupled pair
///   p''' - q = 0
///   q''' + c5 q'' + c4 q' + c3 q + c2 p'' + c1 p' + c0 p + M = r
ProblemSpec reduce(const SixthOrderSpec& spec6);

}  // namespace bgal
