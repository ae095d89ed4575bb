#include "algser/hermite_pade.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "algser/errors.hpp"

namespace algser {

namespace {

void require_length(const PowerSeries& f, const DegreeSpec& spec) {
  const std::size_t m = required_input_length(spec);
  if (f.size() < m) {
    throw Error(ErrorKind::InsufficientCoefficients,
                spec.describe() + " needs " + std::to_string(m) + " coefficients, got " +
                    std::to_string(f.size()));
  }
}

// Columns of A that survive once `skip` is fixed to one, and the matching
// right-hand side -A[:, skip].
void split_system(const Matrix& a, std::size_t skip, Matrix& square, std::vector<Real>& rhs) {
  const std::size_t m = a.rows();
  square = Matrix(m, m);
  rhs.assign(m, Real{0});
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t out = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c == skip) {
        rhs[r] = -a(r, c);
      } else {
        square(r, out++) = a(r, c);
      }
    }
  }
}

bool residual_acceptable(const Matrix& a, const std::vector<Real>& x) {
  Real worst{0};
  Real scale{0};
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Real sum{0};
    Real magnitude{0};
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Real term = a(r, c) * x[c];
      sum += term;
      magnitude += std::abs(term);
    }
    worst = std::max(worst, std::abs(sum));
    scale = std::max(scale, magnitude);
  }
  return std::isfinite(worst) && worst <= kSolveTolerance * scale;
}

std::optional<PolynomialSet> try_normalization(const Matrix& a, const DegreeSpec& spec,
                                               Normalization cand) {
  const std::size_t skip = spec.column_of(cand.n, cand.j);
  Matrix square;
  std::vector<Real> rhs;
  split_system(a, skip, square, rhs);
  std::vector<Real> x;
  try {
    x = dense_solve(square, rhs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularSystem) return std::nullopt;
    throw;
  }
  x.insert(x.begin() + static_cast<std::ptrdiff_t>(skip), Real{1});
  if (!residual_acceptable(a, x)) return std::nullopt;

  std::vector<std::vector<Real>> polys;
  for (int n = 0; n <= spec.N(); ++n) {
    const auto first = x.begin() + static_cast<std::ptrdiff_t>(spec.column_of(n, 0));
    polys.emplace_back(first, first + spec.degree(n) + 1);
  }
  return PolynomialSet(std::move(polys), cand);
}

}  // namespace

DegreeSpec::DegreeSpec(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.size() < 2) {
    throw Error(ErrorKind::InvalidSpec, "degree spec needs N >= 1 (at least two degrees)");
  }
  for (int p : degrees_) {
    if (p < 0) throw Error(ErrorKind::InvalidSpec, "polynomial degrees must be nonnegative");
  }
}

DegreeSpec::DegreeSpec(int n, std::vector<int> degrees) : DegreeSpec(std::move(degrees)) {
  if (N() != n) {
    throw Error(ErrorKind::InvalidSpec, "N=" + std::to_string(n) + " needs " +
                                            std::to_string(n + 1) + " degrees, got " +
                                            std::to_string(degrees_.size()));
  }
}

std::size_t DegreeSpec::unknown_count() const noexcept {
  return std::accumulate(degrees_.begin(), degrees_.end(), std::size_t{0},
                         [](std::size_t acc, int p) { return acc + static_cast<std::size_t>(p) + 1; });
}

std::size_t DegreeSpec::column_of(int n, int j) const {
  if (n < 0 || n > N() || j < 0 || j > degree(n)) {
    throw Error(ErrorKind::InvalidSpec, "no coefficient p_{" + std::to_string(n) + "," +
                                            std::to_string(j) + "} in " + describe());
  }
  std::size_t col = 0;
  for (int k = 0; k < n; ++k) col += static_cast<std::size_t>(degrees_[static_cast<std::size_t>(k)]) + 1;
  return col + static_cast<std::size_t>(j);
}

std::string DegreeSpec::describe() const {
  std::string out = "N=" + std::to_string(N()) + " degrees=";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees_[i]);
  }
  return out;
}

std::size_t required_input_length(const DegreeSpec& spec) noexcept {
  return spec.unknown_count() - 1;
}

PolynomialSet::PolynomialSet(std::vector<std::vector<Real>> polys) : polys_(std::move(polys)) {
  if (polys_.size() < 2) {
    throw Error(ErrorKind::InvalidSpec, "polynomial set needs N+1 >= 2 polynomials");
  }
  for (const auto& p : polys_) {
    if (p.empty()) throw Error(ErrorKind::InvalidSpec, "polynomial without coefficients");
  }
  for (const Normalization& cand : normalization_order(spec())) {
    if (coefficient(cand.n, cand.j) == Real{1}) {
      normalization_ = cand;
      return;
    }
  }
  throw Error(ErrorKind::InvalidSpec, "no coefficient of the polynomial set equals 1");
}

PolynomialSet::PolynomialSet(std::vector<std::vector<Real>> polys, Normalization normalization)
    : polys_(std::move(polys)), normalization_(normalization) {
  if (polys_.size() < 2) {
    throw Error(ErrorKind::InvalidSpec, "polynomial set needs N+1 >= 2 polynomials");
  }
  const auto n = static_cast<std::size_t>(normalization_.n);
  const auto j = static_cast<std::size_t>(normalization_.j);
  if (normalization_.n < 0 || normalization_.j < 0 || n >= polys_.size() ||
      j >= polys_[n].size() || polys_[n][j] != Real{1}) {
    throw Error(ErrorKind::InvalidSpec, "normalized coefficient must equal 1");
  }
}

Real PolynomialSet::coefficient(int n, int j) const {
  const auto& p = poly(n);
  if (j < 0 || static_cast<std::size_t>(j) >= p.size()) return Real{0};
  return p[static_cast<std::size_t>(j)];
}

DegreeSpec PolynomialSet::spec() const {
  std::vector<int> degrees;
  degrees.reserve(polys_.size());
  for (const auto& p : polys_) degrees.push_back(static_cast<int>(p.size()) - 1);
  return DegreeSpec(std::move(degrees));
}

Complex PolynomialSet::evaluate(int n, Complex z) const {
  const auto& p = poly(n);
  Complex acc{0};
  for (std::size_t j = p.size(); j-- > 0;) acc = acc * z + p[j];
  return acc;
}

PolynomialSet PolynomialSet::rescaled_to(Normalization target) const {
  const Real pivot = coefficient(target.n, target.j);
  if (pivot == Real{0}) {
    throw Error(ErrorKind::InvalidSpec, "cannot normalize on a zero coefficient");
  }
  auto scaled = polys_;
  for (auto& p : scaled) {
    for (Real& c : p) c /= pivot;
  }
  scaled[static_cast<std::size_t>(target.n)][static_cast<std::size_t>(target.j)] = Real{1};
  return PolynomialSet(std::move(scaled), target);
}

std::vector<Normalization> normalization_order(const DegreeSpec& spec) {
  std::vector<Normalization> order;
  const int max_degree = *std::max_element(spec.degrees().begin(), spec.degrees().end());
  for (int j = 0; j <= max_degree; ++j) {
    for (int n = 0; n <= spec.N(); ++n) {
      if (j <= spec.degree(n)) order.push_back({n, j});
    }
  }
  return order;
}

Matrix build_system(const PowerSeries& f, const DegreeSpec& spec) {
  require_length(f, spec);
  const std::size_t m = required_input_length(spec);
  Matrix a(m, spec.unknown_count());
  const std::span<const Real> seed = f.coeffs().first(m);
  for (int n = 0; n <= spec.N(); ++n) {
    const std::vector<Real> fn = kernel::power(seed, static_cast<unsigned>(n), m);
    for (int j = 0; j <= spec.degree(n); ++j) {
      const std::size_t col = spec.column_of(n, j);
      for (std::size_t row = static_cast<std::size_t>(j); row < m; ++row) {
        a(row, col) = fn[row - static_cast<std::size_t>(j)];
      }
    }
  }
  return a;
}

PolynomialSet solve_hpp(const PowerSeries& f, const DegreeSpec& spec) {
  const Matrix a = build_system(f, spec);
  for (const Normalization& cand : normalization_order(spec)) {
    if (auto set = try_normalization(a, spec, cand)) return std::move(*set);
  }
  throw Error(ErrorKind::SingularSystem,
              "order condition is singular for every normalization (" + spec.describe() + ")");
}

PolynomialSet solve_hpp(const PowerSeries& f, const DegreeSpec& spec, Normalization normalization) {
  spec.column_of(normalization.n, normalization.j);
  const Matrix a = build_system(f, spec);
  if (auto set = try_normalization(a, spec, normalization)) return std::move(*set);
  throw Error(ErrorKind::SingularSystem,
              "order condition is singular with p_{" + std::to_string(normalization.n) + "," +
                  std::to_string(normalization.j) + "} = 1 (" + spec.describe() + ")");
}

std::vector<Real> verify_order(const PowerSeries& f, const PolynomialSet& set,
                               const DegreeSpec& spec) {
  if (!(set.spec() == spec)) {
    throw Error(ErrorKind::SpecMismatch, "polynomial set does not match " + spec.describe());
  }
  require_length(f, spec);
  const std::size_t m = required_input_length(spec);
  const std::span<const Real> seed = f.coeffs().first(m);
  std::vector<Real> residual(m, Real{0});
  std::vector<Real> fn(m, Real{0});
  fn[0] = Real{1};
  for (int n = 0; n <= spec.N(); ++n) {
    if (n > 0) fn = kernel::convolve(fn, seed, m);
    const std::vector<Real> term = kernel::convolve(set.poly(n), fn, m);
    for (std::size_t k = 0; k < m; ++k) residual[k] += term[k];
  }
  return residual;
}

}  // namespace algser
