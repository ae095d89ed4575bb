#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "algser/approximant.hpp"
#include "algser/errors.hpp"

namespace algser {

namespace {

constexpr Real kEps = std::numeric_limits<Real>::epsilon();
constexpr int kMaxIterations = 1000;

struct Evaluation {
  Complex value;
  Complex derivative;
  Real scale;  // sum_k |c_k| |w|^k
};

Evaluation horner(std::span<const Complex> c, Complex w) {
  Complex p = c.back();
  Complex dp{0};
  Real scale = std::abs(c.back());
  const Real aw = std::abs(w);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * w + p;
    p = p * w + c[k];
    scale = scale * aw + std::abs(c[k]);
  }
  return {p, dp, scale};
}

// Fujiwara's bound on the root moduli.
Real root_radius(std::span<const Complex> c) {
  const std::size_t d = c.size() - 1;
  const Real lead = std::abs(c[d]);
  Real bound{0};
  for (std::size_t k = 0; k < d; ++k) {
    Real ratio = std::abs(c[k]) / lead;
    if (k == 0) ratio /= 2;
    bound = std::max(bound, std::pow(ratio, Real{1} / static_cast<Real>(d - k)));
  }
  return 2 * bound;
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  if (coeffs.empty() || coeffs.back() == Complex{0}) {
    throw Error(ErrorKind::DegreeCollapse, "leading coefficient is zero");
  }
  const std::size_t d = coeffs.size() - 1;
  if (d == 0) return {};
  if (d == 1) return {-coeffs[0] / coeffs[1]};

  // Starting points spread on a circle, rotated off the real axis so that
  // conjugate pairs and real roots are not hit symmetrically.
  const Real radius = std::max(root_radius(coeffs) / 2, Real(1e-3));
  const Complex centre = -coeffs[d - 1] / (static_cast<Real>(d) * coeffs[d]);
  std::vector<Complex> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    const Real angle = 2 * std::numbers::pi_v<Real> * static_cast<Real>(k) / static_cast<Real>(d) + Real(0.4);
    z[k] = centre + std::polar(radius, angle);
  }

  for (int iter = 0; iter < kMaxIterations; ++iter) {
    bool done = true;
    for (std::size_t i = 0; i < d; ++i) {
      const Evaluation e = horner(coeffs, z[i]);
      if (std::abs(e.value) <= 4 * kEps * e.scale) continue;
      Complex sum{0};
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) sum += Real{1} / (z[i] - z[j]);
      }
      const Complex ratio = e.value / e.derivative;
      const Complex step = ratio / (Real{1} - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      if (std::abs(step) > 2 * kEps * std::abs(z[i])) done = false;
    }
    if (done) break;
  }

  for (Complex& w : z) {
    for (int k = 0; k < 3; ++k) {
      const Evaluation e = horner(coeffs, w);
      if (e.derivative == Complex{0}) break;
      const Complex candidate = w - e.value / e.derivative;
      if (std::abs(horner(coeffs, candidate).value) >= std::abs(e.value)) break;
      w = candidate;
    }
    const Evaluation e = horner(coeffs, w);
    if (!(std::abs(e.value) <= kRootResidualTolerance * e.scale)) {
      throw Error(ErrorKind::NoConvergence, "root finder missed its residual target");
    }
  }
  return z;
}

}  // namespace algser
