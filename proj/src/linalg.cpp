#include "bgal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "bgal/error.hpp"

namespace bgal {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double DenseMatrix::max_abs() const noexcept { return bgal::max_abs(data_); }

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto row_r = row(r);
    y[r] = std::inner_product(row_r.begin(), row_r.end(), x.begin(), 0.0);
  }
  return y;
}

double max_abs(std::span<const double> v) noexcept {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

std::vector<double> solve_dense(const DenseMatrix& k, std::span<const double> rhs) {
  const std::size_t n = k.rows();
  if (k.cols() != n || rhs.size() != n) {
    throw ArgumentError("solve_dense: matrix must be square and match the rhs length");
  }
  for (double e : k.data()) {
    if (!std::isfinite(e)) throw ArgumentError("solve_dense: non-finite matrix entry");
  }

  DenseMatrix lu = k;
  std::vector<double> x(rhs.begin(), rhs.end());
  const double threshold = 1e-13 * k.max_abs();

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    }
    if (!(std::abs(lu(pivot, col)) > threshold)) {
      throw SingularSystemError(
          "singular system: pivot " + std::to_string(col) + " below tolerance", col);
    }
    if (pivot != col) {
      std::swap_ranges(lu.row(col).begin(), lu.row(col).end(), lu.row(pivot).begin());
      std::swap(x[col], x[pivot]);
    }
    const double diag = lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = lu(r, col) / diag;
      if (factor == 0.0) continue;
      lu(r, col) = factor;
      for (std::size_t c = col + 1; c < n; ++c) lu(r, c) -= factor * lu(col, c);
      x[r] -= factor * x[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= lu(i, c) * x[c];
    x[i] = s / lu(i, i);
  }
  return x;
}

}  // namespace bgal
