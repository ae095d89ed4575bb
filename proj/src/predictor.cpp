#include "algser/predictor.hpp"

#include <cmath>
#include <string>

#include "algser/errors.hpp"

namespace algser {

Real compute_C(const PolynomialSet& set, Real f0) {
  Real c{0};
  Real magnitude{0};
  Real f0_power{1};  // f0^{n-1}
  for (int n = 1; n <= set.N(); ++n) {
    const Real term = static_cast<Real>(n) * set.coefficient(n, 0) * f0_power;
    c += term;
    magnitude += std::abs(term);
    f0_power *= f0;
  }
  if (!(std::abs(c) > kZeroDenominatorRatio * magnitude)) {
    throw Error(ErrorKind::ZeroDenominator,
                "prediction denominator C vanishes (C=" + std::to_string(static_cast<double>(c)) + ")");
  }
  return c;
}

PredictionState::PredictionState(const PowerSeries& f, DegreeSpec spec, PolynomialSet set,
                                 std::optional<std::size_t> seed_length)
    : c_(0), m_(required_input_length(spec)), spec_(std::move(spec)), set_(std::move(set)) {
  if (!(set_.spec() == spec_)) {
    throw Error(ErrorKind::SpecMismatch, "polynomial set does not match " + spec_.describe());
  }
  const std::size_t seeds = seed_length.value_or(m_);
  if (seeds < m_ || f.size() < seeds) {
    throw Error(ErrorKind::InsufficientCoefficients,
                spec_.describe() + " needs a seed of at least " + std::to_string(m_) +
                    " coefficients (requested " + std::to_string(seeds) + ", available " +
                    std::to_string(f.size()) + ")");
  }
  coeffs_.assign(f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(seeds));
  c_ = compute_C(set_, coeffs_[0]);
}

void PredictionState::append(Real value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::Overflow,
                "predicted coefficient a_" + std::to_string(coeffs_.size()) + " is not finite");
  }
  coeffs_.push_back(value);
}

Real compute_DJ(const PolynomialSet& set, std::span<const Real> coeffs) {
  const std::size_t j = coeffs.size();
  const std::size_t length = j + 1;
  // Powers of the partial sum are built incrementally; only the top
  // coefficient of P_n times that power is needed.
  std::vector<Real> power(length, Real{0});
  power[0] = Real{1};
  Real d{0};
  for (int n = 1; n <= set.N(); ++n) {
    power = kernel::convolve(power, coeffs, length);
    d += kernel::convolve_at(set.poly(n), power, j);
  }
  return d;
}

Real compute_DJ(const PredictionState& state, std::size_t j) {
  if (state.next_index() != j) {
    throw Error(ErrorKind::InvalidInput, "compute_DJ needs exactly J known coefficients");
  }
  return compute_DJ(state.set(), state.coeffs());
}

Real predict_next(PredictionState& state) {
  const Real value = -compute_DJ(state.set(), state.coeffs()) / state.C();
  state.append(value);
  return value;
}

std::vector<Real> predict_k(const PowerSeries& f, const DegreeSpec& spec,
                            const PolynomialSet& set, std::size_t k) {
  PredictionState state(f, spec, set);
  std::vector<Real> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(predict_next(state));
  return out;
}

Real residual_RJ(const PolynomialSet& set, std::span<const Real> coeffs, std::size_t j) {
  if (coeffs.size() <= j) {
    throw Error(ErrorKind::InsufficientCoefficients,
                "residual R_J needs a_0..a_J (J=" + std::to_string(j) + ")");
  }
  const std::span<const Real> partial = coeffs.first(j + 1);
  const std::size_t length = j + 1;
  std::vector<Real> power(length, Real{0});
  power[0] = Real{1};
  Real r = set.coefficient(0, static_cast<int>(j));
  for (int n = 1; n <= set.N(); ++n) {
    power = kernel::convolve(power, partial, length);
    r += kernel::convolve_at(set.poly(n), power, j);
  }
  return r;
}

Real residual_RJ(const PredictionState& state, std::size_t j) {
  return residual_RJ(state.set(), state.coeffs(), j);
}

Real predict_quadratic_fast(PredictionState& state) {
  if (!(state.spec() == DegreeSpec(std::vector<int>{1, 1, 1}))) {
    throw Error(ErrorKind::SpecMismatch,
                "quadratic fast path needs N=2 degrees=1,1,1, got " + state.spec().describe());
  }
  const PolynomialSet& set = state.set();
  const std::vector<Real>& a = state.coeffs();
  const std::size_t j = a.size();

  Real lagged{0};  // sum_{k=0}^{J-1} a_{J-k-1} a_k
  for (std::size_t k = 0; k < j; ++k) lagged += a[j - k - 1] * a[k];
  Real inner{0};  // sum_{k=1}^{J-1} a_k a_{J-k}
  for (std::size_t k = 1; k < j; ++k) inner += a[k] * a[j - k];

  const Real numerator = set.coefficient(1, 1) * a[j - 1] + set.coefficient(2, 1) * lagged +
                         set.coefficient(2, 0) * inner;
  const Real denominator = set.coefficient(1, 0) + Real{2} * set.coefficient(2, 0) * a[0];
  const Real value = -numerator / denominator;
  state.append(value);
  return value;
}

}  // namespace algser
