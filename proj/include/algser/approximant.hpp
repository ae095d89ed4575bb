#pragma once

/// Pointwise evaluation of the algebraic approximant a(z), the root of
/// sum_n P_n(z) w^n = 0 whose expansion matches the seed series.

#include <span>
#include <vector>

#include "algser/config.hpp"
#include "algser/hermite_pade.hpp"
#include "algser/series.hpp"

namespace algser {

/// Residual bound every returned root satisfies, relative to
/// sum_k |c_k| |w|^k.
inline constexpr Real kRootResidualTolerance = Real(1e-11);

/// All roots of c_0 + c_1 w + ... + c_d w^d (coefficients in ascending
/// order, c_d != 0), counted with multiplicity. Aberth-Ehrlich iteration
/// followed by Newton polishing. Throws Error(NoConvergence) if a root
/// misses kRootResidualTolerance, Error(DegreeCollapse) if c_d == 0.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

/// The N roots in w of sum_n P_n(z) w^n at a fixed z.
/// Throws Error(DegreeCollapse) when P_N(z) is negligible (see eval_at).
std::vector<Complex> roots_of_section(const PolynomialSet& set, Complex z);

struct ApproximantValue {
  Complex z;
  Complex value;
  int branch_index = 0;  // position of `value` in roots_of_section(set, z)
  Real residual = 0;     // |sum_n P_n(z) value^n|
};

/// |P_N(z)| at or below this times max_n sum_j |p_{n,j}| |z|^j is a collapse.
inline constexpr Real kDegreeCollapseRatio = Real(1e-13);
/// Two branches whose distances to the seed sum differ by less than this,
/// relative, are ambiguous.
inline constexpr Real kBranchTieRatio = Real(1e-9);

/// Chooses the root closest to the seed partial sum S(z) = sum_{j<M} f_j z^j.
/// Throws Error(DegreeCollapse), Error(BranchAmbiguity), Error(NoConvergence),
/// or Error(InsufficientCoefficients) if the seed has fewer than M terms.
ApproximantValue eval_at(const PolynomialSet& set, const PowerSeries& seed, Complex z);

}  // namespace algser
