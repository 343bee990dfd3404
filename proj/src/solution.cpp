#include "bgal/solution.hpp"

#include <algorithm>
#include <cmath>

#include "bgal/error.hpp"

namespace bgal {

double Solution::eval(double x, Which which, int order) const {
  const auto& coeffs = which == Which::P ? coeffs_p : coeffs_q;
  const auto& offset = which == Which::P ? offsets.p : offsets.q;
  // domain check happens inside the basis, also for the offset-only part
  basis.to_unit(x);
  double v = offset.eval(x, order);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    v += coeffs[j] * basis.eval_order(static_cast<int>(j) + 1, x, order);
  }
  return v;
}

PointState Solution::state(double x) const {
  PointState s;
  s.x = x;
  s.p = eval(x, Which::P, 0);
  s.dp = eval(x, Which::P, 1);
  s.d2p = eval(x, Which::P, 2);
  s.q = eval(x, Which::Q, 0);
  s.dq = eval(x, Which::Q, 1);
  s.d2q = eval(x, Which::Q, 2);
  return s;
}

std::vector<double> Solution::stacked() const {
  std::vector<double> out(coeffs_p);
  out.insert(out.end(), coeffs_q.begin(), coeffs_q.end());
  return out;
}

Solution Solution::from_stacked(const BernsteinBasis& basis, const Offsets& offsets,
                                std::span<const double> coeffs) {
  const std::size_t m = static_cast<std::size_t>(basis.interior_size());
  if (coeffs.size() != 2 * m) {
    throw ArgumentError("coefficient vector length does not match basis");
  }
  Solution s{basis, offsets, {}, {}, 0, false, {}};
  s.coeffs_p.assign(coeffs.begin(), coeffs.begin() + m);
  s.coeffs_q.assign(coeffs.begin() + m, coeffs.end());
  return s;
}

std::vector<double> uniform_grid(double a, double b, int points) {
  if (points < 2) throw ArgumentError("grid needs at least two points");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) g[k] = a + (b - a) * k / (points - 1);
  g.back() = b;
  return g;
}

double sup_distance(const Solution& s1, const Solution& s2, std::span<const double> grid) {
  double d = 0.0;
  for (double x : grid) {
    d = std::max(d, std::abs(s1.eval(x, Which::P) - s2.eval(x, Which::P)));
    d = std::max(d, std::abs(s1.eval(x, Which::Q) - s2.eval(x, Which::Q)));
  }
  return d;
}

}  // namespace bgal
