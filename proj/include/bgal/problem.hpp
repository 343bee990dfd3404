#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bgal/expr.hpp"

namespace bgal {

enum class End { A, B };

/// Three conditions for one third-order equation: both endpoint values are
/// prescribed, plus the first derivative at exactly one end. The derivative at
/// the other end is natural (it enters through the weak form).
struct BoundaryData {
  double value_a = 0.0;
  double value_b = 0.0;
  End deriv_end = End::A;
  double deriv_value = 0.0;

  End natural_end() const noexcept { return deriv_end == End::A ? End::B : End::A; }
};

/// One equation of the coupled system, written for its own unknown u and the
/// other unknown v:
///   u''' + c1 u'' + c2 u' + c3 u + c4 v'' + c5 v' + c6 v + M = forcing
/// coeffs[0..5] hold c1..c6 (a1..a6 for p, b1..b6 for q).
struct EquationSpec {
  std::array<Expr, 6> coeffs{};
  Expr forcing{};
  std::optional<Expr> nonlinear;

  bool has_cross_terms() const;
};

/// The canonical coupled pair of third-order equations on [a,b].
struct ProblemSpec {
  double a = 0.0;
  double b = 1.0;
  EquationSpec eq_p;
  EquationSpec eq_q;
  BoundaryData bc_p;
  BoundaryData bc_q;

  bool is_linear() const { return !eq_p.nonlinear && !eq_q.nonlinear; }

  /// Throws ValidationError: a < b, coefficient and forcing expressions in x only.
  void validate() const;
};

/// Polynomial offset carrying the nonhomogeneous endpoint values, stored as
/// monomial coefficients in x: theta(x) = sum_k c[k] x^k.
class AffineOffset {
 public:
  AffineOffset() = default;
  explicit AffineOffset(std::vector<double> monomial) : coeffs_(std::move(monomial)) {}

  /// theta^(order)(x), order 0..3.
  double eval(double x, int order = 0) const;
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

/// The linear interpolant value_a (b-x)/(b-a) + value_b (x-a)/(b-a).
/// Derivative conditions are never imposed on the offset.
AffineOffset build_offset(const BoundaryData& bc, double a, double b);

struct Offsets {
  AffineOffset p;
  AffineOffset q;
};

Offsets build_offsets(const ProblemSpec& spec);

}  // namespace bgal
