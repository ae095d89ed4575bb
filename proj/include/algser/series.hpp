#pragma once

/// Truncated formal power series over the reals.
///
/// A PowerSeries holds the coefficients f_0 .. f_{L-1} of
/// f(z) = sum_j f_j z^j. All arithmetic takes an explicit truncation length
/// L and treats coefficients beyond the stored ones as zero.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "algser/config.hpp"

namespace algser {

class PowerSeries {
 public:
  /// Throws Error(InvalidSeries) if `coeffs` is empty or holds a non-finite
  /// value.
  explicit PowerSeries(std::vector<Real> coeffs);
  PowerSeries(std::initializer_list<Real> coeffs);

  std::size_t size() const noexcept { return coeffs_.size(); }
  Real operator[](std::size_t j) const noexcept { return coeffs_[j]; }
  /// Coefficient j, or zero past the stored length.
  Real at_or_zero(std::size_t j) const noexcept {
    return j < coeffs_.size() ? coeffs_[j] : Real{0};
  }
  std::span<const Real> coeffs() const noexcept { return coeffs_; }
  const std::vector<Real>& vector() const noexcept { return coeffs_; }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Real> coeffs_;
};

PowerSeries truncate(const PowerSeries& s, std::size_t length);
PowerSeries mul(const PowerSeries& s, const PowerSeries& t, std::size_t length);
PowerSeries pow(const PowerSeries& s, unsigned n, std::size_t length);
PowerSeries poly_times_series(std::span<const Real> poly, const PowerSeries& s,
                              std::size_t length);

/// Unchecked kernels on raw coefficient spans. They never throw on
/// non-finite values, which lets the predictor detect overflow itself.
namespace kernel {

// out[j] = sum_{i<=j} a_i b_{j-i}, j < length
std::vector<Real> convolve(std::span<const Real> a, std::span<const Real> b,
                           std::size_t length);

// Only coefficient `index` of the truncated product.
Real convolve_at(std::span<const Real> a, std::span<const Real> b,
                 std::size_t index) noexcept;

std::vector<Real> power(std::span<const Real> s, unsigned n, std::size_t length);

}  // namespace kernel

}  // namespace algser
