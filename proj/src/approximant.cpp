#include "algser/approximant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "algser/errors.hpp"

namespace algser {

namespace {

Real magnitude_at(const std::vector<Real>& poly, Real r) {
  Real acc{0};
  for (std::size_t j = poly.size(); j-- > 0;) acc = acc * r + std::abs(poly[j]);
  return acc;
}

}  // namespace

std::vector<Complex> roots_of_section(const PolynomialSet& set, Complex z) {
  const int n_max = set.N();
  const Real r = std::abs(z);
  Real scale{0};
  std::vector<Complex> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    coeffs.push_back(set.evaluate(n, z));
    scale = std::max(scale, magnitude_at(set.poly(n), r));
  }
  if (!(std::abs(coeffs.back()) > kDegreeCollapseRatio * scale)) {
    throw Error(ErrorKind::DegreeCollapse, "leading polynomial P_N vanishes at the evaluation point");
  }
  return polynomial_roots(coeffs);
}

ApproximantValue eval_at(const PolynomialSet& set, const PowerSeries& seed, Complex z) {
  const std::size_t m = required_input_length(set.spec());
  if (seed.size() < m) {
    throw Error(ErrorKind::InsufficientCoefficients,
                "branch selection needs " + std::to_string(m) + " seed coefficients");
  }
  Complex partial{0};
  for (std::size_t j = m; j-- > 0;) partial = partial * z + seed[j];

  const std::vector<Complex> roots = roots_of_section(set, z);
  std::size_t best = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (std::abs(roots[i] - partial) < std::abs(roots[best] - partial)) best = i;
  }
  const Real best_distance = std::abs(roots[best] - partial);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i == best) continue;
    const Real distance = std::abs(roots[i] - partial);
    if (distance - best_distance <= kBranchTieRatio * distance) {
      throw Error(ErrorKind::BranchAmbiguity,
                  "two branches are equally close to the seed series at this point");
    }
  }

  Complex sum{0};
  Complex power{1};
  for (int n = 0; n <= set.N(); ++n) {
    sum += set.evaluate(n, z) * power;
    power *= roots[best];
  }
  return ApproximantValue{z, roots[best], static_cast<int>(best), std::abs(sum)};
}

}  // namespace algser
