#pragma once

/// Recursive prediction of power-series coefficients from a frozen set of
/// Hermite-Padé polynomials.
///
/// With the seeds a_0..a_{M-1} equal to the fitted coefficients, every
/// further Taylor coefficient of the algebraic approximant follows from
///
///     a_J = -D_J / C,
///     C   = sum_{n=1..N} n p_{n,0} a_0^{n-1},
///     D_J = [z^J] sum_{n=1..N} P_n(z) (a_0 + ... + a_{J-1} z^{J-1})^n.
///
/// C is fixed by the seeds, so it is computed once per state. P_0 never
/// contributes to D_J because J >= M > p_0.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "algser/config.hpp"
#include "algser/hermite_pade.hpp"
#include "algser/series.hpp"

namespace algser {

/// Cancellation threshold for C, relative to sum_n |n p_{n,0} f_0^{n-1}|.
inline constexpr Real kZeroDenominatorRatio = Real(1e-13);

/// Throws Error(ZeroDenominator) if C vanishes to within
/// kZeroDenominatorRatio of the magnitude of its terms.
Real compute_C(const PolynomialSet& set, Real f0);

class PredictionState {
 public:
  /// Seeds the state with the first `seed_length` coefficients of f
  /// (default M). A longer seed continues the recursion from true values,
  /// which is what a one-step sweep needs.
  ///
  /// Throws Error(InsufficientCoefficients) if f has fewer than
  /// max(M, seed_length) coefficients or seed_length < M,
  /// Error(SpecMismatch) if `set` does not have the shape of `spec`, and
  /// Error(ZeroDenominator) from compute_C.
  PredictionState(const PowerSeries& f, DegreeSpec spec, PolynomialSet set,
                  std::optional<std::size_t> seed_length = std::nullopt);

  const std::vector<Real>& coeffs() const noexcept { return coeffs_; }
  Real C() const noexcept { return c_; }
  std::size_t M() const noexcept { return m_; }
  /// Index of the next coefficient predict_next will produce.
  std::size_t next_index() const noexcept { return coeffs_.size(); }
  const DegreeSpec& spec() const noexcept { return spec_; }
  const PolynomialSet& set() const noexcept { return set_; }

  /// Appends a coefficient. Throws Error(Overflow) if it is not finite.
  void append(Real value);

 private:
  std::vector<Real> coeffs_;
  Real c_;
  std::size_t m_;
  DegreeSpec spec_;
  PolynomialSet set_;
};

/// D_J from coefficients a_0..a_{J-1}, where J = coeffs.size().
Real compute_DJ(const PolynomialSet& set, std::span<const Real> coeffs);
/// Requires state.next_index() == J.
Real compute_DJ(const PredictionState& state, std::size_t j);

/// Appends a_J = -D_J / C and returns it.
Real predict_next(PredictionState& state);

/// a_M..a_{M+k-1} from a fresh state seeded with f_0..f_{M-1}.
std::vector<Real> predict_k(const PowerSeries& f, const DegreeSpec& spec,
                            const PolynomialSet& set, std::size_t k);

/// Full residual R_J = [z^J] sum_{n=0..N} P_n(z) (a_0 + ... + a_J z^J)^n.
/// Needs coeffs.size() > J.
Real residual_RJ(const PolynomialSet& set, std::span<const Real> coeffs, std::size_t j);
Real residual_RJ(const PredictionState& state, std::size_t j);

/// Closed-form step for N = 2, degrees (1,1,1):
///
///   a_J = -(p11 a_{J-1} + p21 sum_{k=0}^{J-1} a_{J-k-1} a_k
///           + p20 sum_{k=1}^{J-1} a_k a_{J-k}) / (p10 + 2 p20 f_0)
///
/// O(J) per step. Throws Error(SpecMismatch) for any other spec.
Real predict_quadratic_fast(PredictionState& state);

}  // namespace algser
