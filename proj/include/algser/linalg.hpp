#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "algser/config.hpp"

namespace algser {

/// Dense row-major matrix. Sized for the small systems of a Hermite-Padé
/// fit, so no blocking or expression templates.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Real{0}) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Real& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Real operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<const Real> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Real> data_;
};

/// Pivot ratio below which dense_solve reports a singular system.
inline constexpr Real kSingularPivotRatio = Real(1e-12);

/// Solves A x = b by Gaussian elimination with partial pivoting.
///
/// Column k is declared singular when its chosen pivot has magnitude at most
/// kSingularPivotRatio times the largest magnitude in column k of the
/// original A; this throws Error(SingularSystem).
std::vector<Real> dense_solve(const Matrix& a, std::span<const Real> b);

}  // namespace algser
