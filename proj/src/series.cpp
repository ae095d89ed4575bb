#include "algser/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "algser/errors.hpp"

namespace algser {

namespace {

void check_length(std::size_t length) {
  if (length == 0) {
    throw Error(ErrorKind::InvalidSeries, "truncation length must be >= 1");
  }
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Real> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::InvalidSeries, "power series needs at least one coefficient");
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!std::isfinite(coeffs_[j])) {
      throw Error(ErrorKind::InvalidSeries,
                  "coefficient " + std::to_string(j) + " is not finite");
    }
  }
}

PowerSeries::PowerSeries(std::initializer_list<Real> coeffs)
    : PowerSeries(std::vector<Real>(coeffs)) {}

PowerSeries truncate(const PowerSeries& s, std::size_t length) {
  check_length(length);
  std::vector<Real> out(length, Real{0});
  std::copy_n(s.coeffs().begin(), std::min(length, s.size()), out.begin());
  return PowerSeries(std::move(out));
}

PowerSeries mul(const PowerSeries& s, const PowerSeries& t, std::size_t length) {
  check_length(length);
  return PowerSeries(kernel::convolve(s.coeffs(), t.coeffs(), length));
}

PowerSeries pow(const PowerSeries& s, unsigned n, std::size_t length) {
  check_length(length);
  return PowerSeries(kernel::power(s.coeffs(), n, length));
}

PowerSeries poly_times_series(std::span<const Real> poly, const PowerSeries& s,
                              std::size_t length) {
  check_length(length);
  return PowerSeries(kernel::convolve(poly, s.coeffs(), length));
}

namespace kernel {

std::vector<Real> convolve(std::span<const Real> a, std::span<const Real> b,
                           std::size_t length) {
  std::vector<Real> out(length, Real{0});
  const std::size_t na = std::min(a.size(), length);
  for (std::size_t i = 0; i < na; ++i) {
    const Real ai = a[i];
    if (ai == Real{0}) continue;
    const std::size_t nb = std::min(b.size(), length - i);
    for (std::size_t k = 0; k < nb; ++k) out[i + k] += ai * b[k];
  }
  return out;
}

Real convolve_at(std::span<const Real> a, std::span<const Real> b,
                 std::size_t index) noexcept {
  Real sum{0};
  const std::size_t hi = std::min(a.size(), index + 1);
  for (std::size_t i = 0; i < hi; ++i) {
    const std::size_t k = index - i;
    if (k < b.size()) sum += a[i] * b[k];
  }
  return sum;
}

std::vector<Real> power(std::span<const Real> s, unsigned n, std::size_t length) {
  std::vector<Real> out(length, Real{0});
  out[0] = Real{1};
  for (unsigned i = 0; i < n; ++i) out = convolve(out, s, length);
  return out;
}

}  // namespace kernel

}  // namespace algser
