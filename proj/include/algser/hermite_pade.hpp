#pragma once

/// Hermite-Padé polynomials of a truncated power series.
///
/// For a degree specification (N; p_0..p_N) the polynomials P_n with
/// deg P_n <= p_n satisfy the order condition
///
///     sum_{n=0..N} P_n(z) f(z)^n = O(z^M),   M = N + sum_n p_n,
///
/// which is M homogeneous linear equations in the M+1 coefficients p_{n,j}.
/// Fixing one coefficient to unity makes the system square.

#include <cstddef>
#include <string>
#include <vector>

#include "algser/config.hpp"
#include "algser/linalg.hpp"
#include "algser/series.hpp"

namespace algser {

class DegreeSpec {
 public:
  /// `degrees` holds p_0..p_N, so N = degrees.size() - 1. Throws
  /// Error(InvalidSpec) unless N >= 1 and every degree is nonnegative.
  explicit DegreeSpec(std::vector<int> degrees);
  /// Same, but also checks degrees.size() == n + 1.
  DegreeSpec(int n, std::vector<int> degrees);

  int N() const noexcept { return static_cast<int>(degrees_.size()) - 1; }
  int degree(int n) const { return degrees_.at(static_cast<std::size_t>(n)); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }

  /// Number of polynomial coefficients, sum_n (p_n + 1) = M + 1.
  std::size_t unknown_count() const noexcept;
  /// Column of p_{n,j} in the order-condition matrix.
  std::size_t column_of(int n, int j) const;

  /// "N=2 degrees=1,1,1"
  std::string describe() const;

  friend bool operator==(const DegreeSpec&, const DegreeSpec&) = default;

 private:
  std::vector<int> degrees_;
};

/// M = N + sum_n p_n.
std::size_t required_input_length(const DegreeSpec& spec) noexcept;

/// Names the coefficient p_{n,j} that was fixed to 1.
struct Normalization {
  int n = 0;
  int j = 0;
  friend bool operator==(const Normalization&, const Normalization&) = default;
};

class PolynomialSet {
 public:
  /// Detects the normalization as the first coefficient equal to 1 in
  /// normalization_order(). Throws Error(InvalidSpec) if there are fewer than
  /// two polynomials, all coefficients are zero, or no coefficient is 1.
  explicit PolynomialSet(std::vector<std::vector<Real>> polys);
  PolynomialSet(std::vector<std::vector<Real>> polys, Normalization normalization);

  int N() const noexcept { return static_cast<int>(polys_.size()) - 1; }
  const std::vector<Real>& poly(int n) const { return polys_.at(static_cast<std::size_t>(n)); }
  const std::vector<std::vector<Real>>& polys() const noexcept { return polys_; }
  Real coefficient(int n, int j) const;
  Normalization normalization() const noexcept { return normalization_; }

  /// Degree spec implied by the stored coefficient counts.
  DegreeSpec spec() const;

  Complex evaluate(int n, Complex z) const;

  /// Same polynomials scaled by a common factor so that p_{n,j} == 1.
  /// Throws Error(InvalidSpec) if that coefficient is zero.
  PolynomialSet rescaled_to(Normalization target) const;

 private:
  std::vector<std::vector<Real>> polys_;
  Normalization normalization_;
};

/// Candidate normalizations in the order solve_hpp tries them:
/// p_{0,0}, p_{1,0}, ..., p_{N,0}, then p_{n,1} for each n with p_n >= 1,
/// and so on up to the largest degree.
std::vector<Normalization> normalization_order(const DegreeSpec& spec);

/// M x (M+1) matrix of the order condition. Row m, column of (n, j) holds the
/// coefficient of z^{m-j} in f^n (zero when j > m). Uses only f_0..f_{M-1}.
/// Throws Error(InsufficientCoefficients) if f is shorter than M.
Matrix build_system(const PowerSeries& f, const DegreeSpec& spec);

/// Relative residual (scaled by the largest row magnitude) a solve must
/// reach for a normalization candidate to be accepted.
inline constexpr Real kSolveTolerance = Real(1e-10);

/// Solves the order condition, trying normalizations in
/// normalization_order() until one yields a nonsingular square system.
/// Throws Error(InsufficientCoefficients) or Error(SingularSystem).
PolynomialSet solve_hpp(const PowerSeries& f, const DegreeSpec& spec);

/// Solves with the given coefficient fixed to 1. Throws
/// Error(SingularSystem) if that normalization does not give a solvable
/// system and Error(InvalidSpec) if the coefficient does not exist.
PolynomialSet solve_hpp(const PowerSeries& f, const DegreeSpec& spec, Normalization normalization);

/// Coefficients of z^0..z^{M-1} of sum_n P_n(z) f(z)^n.
std::vector<Real> verify_order(const PowerSeries& f, const PolynomialSet& set,
                               const DegreeSpec& spec);

}  // namespace algser
