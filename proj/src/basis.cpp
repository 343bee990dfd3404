#include "bgal/basis.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "bgal/error.hpp"

namespace bgal {

namespace {
constexpr double kClampSlack = 1e-12;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return std::round(c);
}

double bernstein_unit(int n, int i, double t) {
  if (i < 0 || i > n) return 0.0;
  return binomial(n, i) * std::pow(t, i) * std::pow(1.0 - t, n - i);
}

BernsteinBasis::BernsteinBasis(int degree, double a, double b)
    : degree_(degree), a_(a), b_(b) {
  if (degree < 3 || degree > kMaxDegree) {
    throw ArgumentError("Bernstein degree must lie in [3, " +
                        std::to_string(kMaxDegree) + "], got " +
                        std::to_string(degree));
  }
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ArgumentError("Bernstein interval requires finite a < b");
  }
}

double BernsteinBasis::to_unit(double x) const {
  const double h = b_ - a_;
  if (!(x >= a_ - kClampSlack * h && x <= b_ + kClampSlack * h)) {
    throw DomainError("x=" + std::to_string(x) + " outside [" +
                      std::to_string(a_) + ", " + std::to_string(b_) + "]");
  }
  if (x <= a_) return 0.0;
  if (x >= b_) return 1.0;
  return (x - a_) / h;
}

double BernsteinBasis::eval(int i, double x) const {
  return bernstein_unit(degree_, i, to_unit(x));
}

double BernsteinBasis::eval_deriv(int i, double x, int order) const {
  if (order < 1 || order > 3) {
    throw ArgumentError("derivative order must be 1, 2 or 3, got " +
                        std::to_string(order));
  }
  const double t = to_unit(x);
  const int n = degree_;
  const double h = b_ - a_;
  double falling = 1.0;
  for (int j = 0; j < order; ++j) falling *= (n - j);
  double sum = 0.0;
  for (int j = 0; j <= order; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binomial(order, j) * bernstein_unit(n - order, i - order + j, t);
  }
  return falling / std::pow(h, order) * sum;
}

double BernsteinBasis::eval_order(int i, double x, int order) const {
  return order == 0 ? eval(i, x) : eval_deriv(i, x, order);
}

std::vector<int> BernsteinBasis::interior_indices() const {
  std::vector<int> idx(static_cast<std::size_t>(degree_ - 1));
  std::iota(idx.begin(), idx.end(), 1);
  return idx;
}

}  // namespace bgal
