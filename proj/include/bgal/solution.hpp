#pragma once

#include <span>
#include <vector>

#include "bgal/basis.hpp"
#include "bgal/problem.hpp"

namespace bgal {

enum class Which { P, Q };

/// Trial functions p~ = theta_p + sum a_j phi_j and q~ = theta_q + sum b_j phi_j.
struct Solution {
  BernsteinBasis basis;
  Offsets offsets;
  std::vector<double> coeffs_p;
  std::vector<double> coeffs_q;
  int iterations_used = 0;
  bool converged = false;
  /// Sup-distance between consecutive Picard iterates, one entry per update.
  std::vector<double> picard_distances;

  /// theta^(order)(x) + sum_j c_j phi_j^(order)(x), order 0..3.
  /// Throws DomainError outside [a,b].
  double eval(double x, Which which, int order = 0) const;

  /// Values of p~, q~ and their first two derivatives at x.
  PointState state(double x) const;

  /// Both coefficient vectors stacked as (a; b).
  std::vector<double> stacked() const;

  static Solution from_stacked(const BernsteinBasis& basis, const Offsets& offsets,
                               std::span<const double> coeffs);
};

/// Uniform grid of `points` samples on [a,b], endpoints included.
std::vector<double> uniform_grid(double a, double b, int points);

/// max over the grid of |p~1 - p~2| and |q~1 - q~2|.
double sup_distance(const Solution& s1, const Solution& s2, std::span<const double> grid);

}  // namespace bgal
