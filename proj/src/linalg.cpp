#include "algser/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "algser/errors.hpp"

namespace algser {

std::vector<Real> dense_solve(const Matrix& a, std::span<const Real> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw Error(ErrorKind::InvalidInput, "dense_solve needs a square system");
  }

  std::vector<Real> column_scale(n, Real{0});
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      column_scale[c] = std::max(column_scale[c], std::abs(a(r, c)));
    }
  }

  Matrix lu = a;
  std::vector<Real> x(b.begin(), b.end());

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    Real best = std::abs(lu(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const Real v = std::abs(lu(r, k));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (!(best > kSingularPivotRatio * column_scale[k])) {
      throw Error(ErrorKind::SingularSystem,
                  "pivot in column " + std::to_string(k) + " below relative threshold");
    }
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(lu(k, c), lu(pivot, c));
      std::swap(x[k], x[pivot]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const Real factor = lu(r, k) / lu(k, k);
      if (factor == Real{0}) continue;
      for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= factor * lu(k, c);
      x[r] -= factor * x[k];
    }
  }

  for (std::size_t k = n; k-- > 0;) {
    Real sum = x[k];
    for (std::size_t c = k + 1; c < n; ++c) sum -= lu(k, c) * x[c];
    x[k] = sum / lu(k, k);
  }
  return x;
}

}  // namespace algser
