#pragma once

#include <vector>

#include "bgal/basis.hpp"
#include "bgal/linalg.hpp"
#include "bgal/problem.hpp"
#include "bgal/quadrature.hpp"
#include "bgal/solution.hpp"

namespace bgal {

/// Discrete Galerkin system in block layout [[A, H], [D, C]] of size 2m x 2m,
/// m = n - 1. Row i of a block is test function phi_i, column j is trial phi_j,
/// i.e. K(i, j) = A_{j,i}. `rhs` holds (F; G) without nonlinear terms.
struct AssembledSystem {
  int m = 0;
  DenseMatrix k;
  std::vector<double> rhs;
};

/// Weak form of both equations after integrating the own third derivative by
/// parts twice:
///   -[phi_i' u']_b + [phi_i' u']_a + int phi_i'' u' + int (c1 u'' + ... + c6 v) phi_i
///     = int forcing phi_i
/// with u = theta_u + sum c_j phi_j. A prescribed u' enters the rhs; at the
/// natural end u' is expanded in the trial space and lands in the own block.
///
/// Rows are assembled in parallel (OpenMP) from tabulated basis values.
/// Throws AssemblyError on a non-finite entry and EvalError when a coefficient
/// cannot be evaluated at a node.
AssembledSystem assemble_linear(const ProblemSpec& spec, const BernsteinBasis& basis,
                                const QuadratureRule& rule, const Offsets& offsets);
AssembledSystem assemble_linear(const ProblemSpec& spec, const BernsteinBasis& basis,
                                const QuadratureRule& rule);

/// Lagged nonlinear load: entry (e, i) = -int M_e(x, p~, p~', p~'', q~, q~', q~'') phi_i,
/// with p~, q~ the full current trial functions (offsets included). Zero block
/// for an absent M_e.
std::vector<double> assemble_nonlinear_rhs(const ProblemSpec& spec, const BernsteinBasis& basis,
                                           const QuadratureRule& rule, const Solution& current);

/// Serial per-entry integration straight from basis evaluations. Kept as the
/// reference the parallel kernels are checked against.
AssembledSystem assemble_linear_reference(const ProblemSpec& spec, const BernsteinBasis& basis,
                                          const QuadratureRule& rule, const Offsets& offsets);
std::vector<double> assemble_nonlinear_rhs_reference(const ProblemSpec& spec,
                                                     const BernsteinBasis& basis,
                                                     const QuadratureRule& rule,
                                                     const Solution& current);

/// max_i |K c - rhs - N(c)| over both equations, with the nonlinear term
/// evaluated at `sol` itself rather than lagged.
double residual_norm(const ProblemSpec& spec, const Solution& sol, const QuadratureRule& rule);

}  // namespace bgal
