#pragma once

#include <functional>
#include <vector>

namespace bgal {

inline constexpr int kMaxQuadratureOrder = 64;

/// G-point Gauss-Legendre rule on [a,b]. Nodes strictly increasing.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = 0.0;
  double b = 1.0;

  int order() const noexcept { return static_cast<int>(nodes.size()); }
};

/// Nodes from Newton iteration on P_G with cosine initial guesses, mapped
/// affinely to [a,b]. Throws ArgumentError for G < 1 or a >= b, and for
/// G > kMaxQuadratureOrder.
QuadratureRule gauss_legendre(int order, double a, double b);

/// sum_k w_k f(x_k). Exceptions from f propagate unchanged.
double integrate(const std::function<double(double)>& f, const QuadratureRule& rule);

/// Rule order used for a trial degree when none is requested: max(24, 2n).
int default_quadrature_order(int degree);

}  // namespace bgal
