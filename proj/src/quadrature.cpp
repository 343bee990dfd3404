#include "bgal/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bgal/error.hpp"

namespace bgal {

namespace {

// Legendre P_n(z) and P_n'(z) by the three-term recurrence.
void legendre(int n, double z, double& p, double& dp) {
  double p0 = 1.0;
  double p1 = z;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  p = (n == 0) ? 1.0 : p1;
  dp = (n == 0) ? 0.0 : n * (z * p1 - p0) / (z * z - 1.0);
}

}  // namespace

QuadratureRule gauss_legendre(int order, double a, double b) {
  if (order < 1) throw ArgumentError("quadrature order must be >= 1");
  if (order > kMaxQuadratureOrder) {
    throw ArgumentError("unsupported quadrature order " + std::to_string(order) +
                        " (max " + std::to_string(kMaxQuadratureOrder) + ")");
  }
  if (!(b > a)) throw ArgumentError("quadrature interval requires a < b");

  const int n = order;
  std::vector<double> z(n), w(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double root = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p = 0.0;
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      legendre(n, root, p, dp);
      const double step = p / dp;
      root -= step;
      if (std::abs(step) <= 1e-15) break;
    }
    legendre(n, root, p, dp);
    const double weight = 2.0 / ((1.0 - root * root) * dp * dp);
    // roots come out in decreasing order; store symmetric pairs ascending
    z[i] = -root;
    z[n - 1 - i] = root;
    w[i] = weight;
    w[n - 1 - i] = weight;
  }
  if (n % 2 == 1) z[n / 2] = 0.0;

  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double half_len = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half_len * z[i];
    rule.weights[i] = half_len * w[i];
  }
  return rule;
}

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule) {
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    sum += rule.weights[k] * f(rule.nodes[k]);
  }
  return sum;
}

int default_quadrature_order(int degree) { return std::max(24, 2 * degree); }

}  // namespace bgal
