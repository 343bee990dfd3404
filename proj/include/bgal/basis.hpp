#pragma once

#include <vector>

namespace bgal {

inline constexpr int kMaxDegree = 30;

/// Binomial coefficient C(n, k) via the multiplicative formula; 0 outside 0..n.
double binomial(int n, int k);

/// Bernstein polynomial C(n,i) t^i (1-t)^(n-i) on the reference interval [0,1].
/// Zero for i < 0 or i > n.
double bernstein_unit(int n, int i, double t);

/// Bernstein basis of degree n on [a,b]. Interior members 1..n-1 vanish at both
/// endpoints and span the homogeneous part of the trial space.
class BernsteinBasis {
 public:
  BernsteinBasis(int degree, double a, double b);

  int degree() const noexcept { return degree_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  /// Number of interior functions, n - 1.
  int interior_size() const noexcept { return degree_ - 1; }

  /// phi_{i,n}(x). Throws DomainError if x lies outside [a,b] by more than 1e-12;
  /// points within that slack are clamped.
  double eval(int i, double x) const;

  /// Exact derivative of phi_{i,n} of order 1, 2 or 3, from the
  /// lower-degree difference identity
  ///   phi^(k)_{i,n} = n!/(n-k)! / h^k * sum_j (-1)^j C(k,j) phi_{i-k+j, n-k}.
  double eval_deriv(int i, double x, int order) const;

  /// eval for order 0, eval_deriv otherwise.
  double eval_order(int i, double x, int order) const;

  /// [1, ..., n-1]
  std::vector<int> interior_indices() const;

  /// Maps x in [a,b] (with clamping slack) onto t in [0,1].
  double to_unit(double x) const;

 private:
  int degree_;
  double a_;
  double b_;
};

}  // namespace bgal
