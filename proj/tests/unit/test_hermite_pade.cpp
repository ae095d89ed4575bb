#include <doctest.h>

#include <cmath>
#include <optional>
#include <random>

#include "algser/errors.hpp"
#include "algser/hermite_pade.hpp"
#include "algser/oracle.hpp"
#include "support/oracles.hpp"
#include "support/reference_data.hpp"

using namespace algser;
using namespace algser::testing;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an algser::Error");
  return ErrorKind::InvalidInput;
}

void check_polys_relative(const PolynomialSet& actual, const std::vector<std::vector<Real>>& expected,
                          Real tol) {
  REQUIRE(actual.polys().size() == expected.size());
  for (std::size_t n = 0; n < expected.size(); ++n) {
    REQUIRE(actual.polys()[n].size() == expected[n].size());
    for (std::size_t j = 0; j < expected[n].size(); ++j) {
      CAPTURE(n);
      CAPTURE(j);
      CHECK(relative_error(actual.polys()[n][j], expected[n][j]) <= tol);
    }
  }
}

}  // namespace

TEST_CASE("DegreeSpec validation") {
  CHECK(kind_of([] { DegreeSpec(std::vector<int>{1}); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { DegreeSpec(std::vector<int>{1, -1}); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { DegreeSpec(3, {1, 1, 1}); }) == ErrorKind::InvalidSpec);
  CHECK(DegreeSpec(2, {1, 1, 1}).describe() == "N=2 degrees=1,1,1");
}

TEST_CASE("required_input_length") {
  CHECK(required_input_length(DegreeSpec(2, {1, 1, 1})) == 5);
  CHECK(required_input_length(DegreeSpec(2, {2, 2, 2})) == 8);
  CHECK(required_input_length(DegreeSpec(1, {0, 0})) == 1);
}

TEST_CASE("normalization order sweeps constant terms first") {
  const auto order = normalization_order(DegreeSpec({1, 0, 2}));
  const std::vector<Normalization> expected{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {2, 2}};
  CHECK(order == expected);
}

TEST_CASE("build_system for the smallest spec") {
  const Matrix a = build_system(PowerSeries({1, 0, 0}), DegreeSpec(1, {0, 0}));
  REQUIRE(a.rows() == 1);
  REQUIRE(a.cols() == 2);
  CHECK(a(0, 0) == 1);
  CHECK(a(0, 1) == 1);
}

TEST_CASE("build_system matches brute-force expansion of sum_n P_n f^n") {
  // Column (n, j) is the z^m coefficient of z^j f^n.
  const std::vector<Real> f{1, 1, 1};
  for (const auto& degrees : {std::vector<int>{0, 1}, std::vector<int>{1, 1}}) {
    const DegreeSpec spec(degrees);
    const Matrix a = build_system(PowerSeries(f), spec);
    const std::size_t m = required_input_length(spec);
    REQUIRE(a.rows() == m);
    REQUIRE(a.cols() == m + 1);
    for (int n = 0; n <= spec.N(); ++n) {
      for (int j = 0; j <= spec.degree(n); ++j) {
        for (std::size_t row = 0; row < m; ++row) {
          const Real expected =
              row >= static_cast<std::size_t>(j)
                  ? brute_power_coefficient(f, static_cast<unsigned>(n), row - static_cast<std::size_t>(j))
                  : Real{0};
          CHECK(a(row, spec.column_of(n, j)) == expected);
        }
      }
    }
  }
  // For degrees (1,1) on the geometric series the rows are explicit.
  const Matrix a = build_system(PowerSeries(f), DegreeSpec({1, 1}));
  const std::vector<std::vector<Real>> rows{{1, 0, 1, 0}, {0, 1, 1, 1}, {0, 0, 1, 1}};
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(std::vector<Real>(a.row(r).begin(), a.row(r).end()) == rows[r]);
  }
}

TEST_CASE("build_system on ex1 has the published polynomials as null vector") {
  const DegreeSpec spec(2, {1, 1, 1});
  const PowerSeries f = taylor(example1(), 5);
  const Matrix a = build_system(f, spec);
  REQUIRE(a.rows() == 5);
  REQUIRE(a.cols() == 6);
  std::vector<Real> x;
  for (const auto& p : kEx1Polys) x.insert(x.end(), p.begin(), p.end());
  for (std::size_t r = 0; r < 5; ++r) {
    Real sum = 0;
    Real scale = 0;
    for (std::size_t c = 0; c < 6; ++c) {
      sum += a(r, c) * x[c];
      scale += std::abs(a(r, c) * x[c]);
    }
    CHECK(std::abs(sum) <= 1e-13 * scale);
  }
}

TEST_CASE("build_system needs M coefficients") {
  CHECK(kind_of([] { build_system(PowerSeries({1, 2, 3}), DegreeSpec(2, {1, 1, 1})); }) ==
        ErrorKind::InsufficientCoefficients);
}

TEST_CASE("solve_hpp reproduces the ex1 polynomials") {
  const PolynomialSet set = solve_hpp(taylor(example1(), 5), DegreeSpec(2, {1, 1, 1}));
  CHECK(set.normalization() == Normalization{0, 0});
  check_polys_relative(set, kEx1Polys, 1e-9);
}

TEST_CASE("solve_hpp reproduces the ex2 polynomials up to normalization") {
  const PolynomialSet set = solve_hpp(taylor(example2(), 5), DegreeSpec(2, {1, 1, 1}));
  // p_{0,0} = 1 is tried first and succeeds; the published set fixes p_{1,0}.
  CHECK(set.normalization() == Normalization{0, 0});
  check_polys_relative(set.rescaled_to({1, 0}), kEx2Polys, 1e-9);
  check_polys_relative(solve_hpp(taylor(example2(), 5), DegreeSpec(2, {1, 1, 1}), {1, 0}), kEx2Polys,
                       1e-9);
}

TEST_CASE("solve_hpp reproduces the ex3 polynomials") {
  const PolynomialSet set = solve_hpp(taylor(example3(), 8), DegreeSpec(2, {2, 2, 2}));
  check_polys_relative(set, kEx3Polys, 1e-9);
}

TEST_CASE("solve_hpp finds the algebraic relation of sqrt(1+z)") {
  // a^2 = 1 + z  <=>  (1 + z) + 0 a - a^2 = 0
  const PowerSeries f({1, 0.5, -0.125});
  const DegreeSpec spec(2, {1, 0, 0});
  const PolynomialSet set = solve_hpp(f, spec);
  CHECK(set.poly(0)[0] == doctest::Approx(1).epsilon(1e-14));
  CHECK(set.poly(0)[1] == doctest::Approx(1).epsilon(1e-14));
  CHECK(std::abs(set.poly(1)[0]) <= 1e-14);
  CHECK(set.poly(2)[0] == doctest::Approx(-1).epsilon(1e-14));
  for (Real r : verify_order(f, set, spec)) CHECK(std::abs(r) <= 1e-15);
}

TEST_CASE("solve_hpp skips normalizations whose coefficient must vanish") {
  // f = 1 + z^2: with degrees (1,1), p_{0,0} and p_{1,0} are forced to zero.
  const PolynomialSet set = solve_hpp(PowerSeries({1, 0, 1}), DegreeSpec(1, {1, 1}));
  CHECK(set.normalization() == Normalization{0, 1});
  CHECK(set.poly(1)[1] == doctest::Approx(-1));
}

TEST_CASE("solve_hpp reports singular systems") {
  // f = 1 makes every power column identical.
  CHECK(kind_of([] { solve_hpp(PowerSeries({1, 0, 0, 0, 0}), DegreeSpec(2, {1, 1, 1})); }) ==
        ErrorKind::SingularSystem);
  CHECK(kind_of([] {
          solve_hpp(PowerSeries({1, 0, 1}), DegreeSpec(1, {1, 1}), Normalization{0, 0});
        }) == ErrorKind::SingularSystem);
}

TEST_CASE("solve_hpp consumes only the first M coefficients") {
  const DegreeSpec spec(2, {1, 1, 1});
  const PolynomialSet a = solve_hpp(taylor(example1(), 5), spec);
  const PolynomialSet b = solve_hpp(taylor(example1(), 30), spec);
  CHECK(a.polys() == b.polys());
}

TEST_CASE("verify_order") {
  const DegreeSpec spec(2, {1, 1, 1});
  const PowerSeries f = taylor(example1(), 5);

  const auto residual = verify_order(f, PolynomialSet(kEx1Polys), spec);
  REQUIRE(residual.size() == 5);
  for (Real r : residual) CHECK(std::abs(r) <= 1e-12);

  auto perturbed = kEx1Polys;
  perturbed[1][0] += 1e-3;
  Real worst = 0;
  for (Real r : verify_order(f, PolynomialSet(perturbed), spec)) worst = std::max(worst, std::abs(r));
  CHECK(worst > 1e-5);

  CHECK(kind_of([&] { verify_order(f, PolynomialSet(kEx1Polys), DegreeSpec(2, {2, 2, 2})); }) ==
        ErrorKind::SpecMismatch);
}

TEST_CASE("solutions under different normalizations agree after rescaling") {
  std::mt19937_64 rng(314);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n_max = 1 + static_cast<int>(rng() % 3);
    std::vector<int> degrees(static_cast<std::size_t>(n_max) + 1);
    for (int& p : degrees) p = static_cast<int>(rng() % 3);
    const DegreeSpec spec(degrees);
    const PowerSeries f(random_vector(rng, required_input_length(spec), -1, 1));
    const auto order = normalization_order(spec);
    const Normalization other = order[1 + rng() % (order.size() - 1)];
    std::optional<PolynomialSet> first, second;
    try {
      first = solve_hpp(f, spec);
      second = solve_hpp(f, spec, other);
    } catch (const Error&) {
      continue;
    }
    // Compare on a coefficient both solutions share, normalized to 1.
    const Normalization common = first->normalization();
    const PolynomialSet a = first->rescaled_to(common);
    const PolynomialSet b = second->rescaled_to(common);
    for (int n = 0; n <= spec.N(); ++n) {
      for (int j = 0; j <= spec.degree(n); ++j) {
        CAPTURE(spec.describe());
        CHECK(std::abs(a.coefficient(n, j) - b.coefficient(n, j)) <=
              1e-10 * std::max(std::abs(a.coefficient(n, j)), Real{1}));
      }
    }
    ++compared;
  }
  CHECK(compared > 100);
}

TEST_CASE("N = 1 fits are Pade approximants") {
  // -P_0/P_1 expanded by long division reproduces f through order M-1.
  std::mt19937_64 rng(2718);
  auto check_pade = [](const PowerSeries& f, const DegreeSpec& spec) {
    const std::size_t m = required_input_length(spec);
    const PolynomialSet set = solve_hpp(f, spec);
    REQUIRE(set.coefficient(1, 0) != Real{0});
    std::vector<Real> minus_p0 = set.poly(0);
    for (Real& c : minus_p0) c = -c;
    const auto q = long_division(minus_p0, set.poly(1), m);
    const Real scale = max_abs(truncate(f, m).vector());
    for (std::size_t j = 0; j < m; ++j) {
      CAPTURE(spec.describe());
      CAPTURE(j);
      CHECK(std::abs(q[j] - f[j]) <= 1e-11 * std::max(std::abs(f[j]), scale * Real(1e-3)));
    }
  };

  SUBCASE("random rational functions") {
    for (int trial = 0; trial < 200; ++trial) {
      const int p0 = static_cast<int>(rng() % 4);
      const int p1 = 1 + static_cast<int>(rng() % 3);
      // B = prod (1 - t_i z) with |t_i| <= 0.7, A random with A(0) != 0.
      std::vector<Real> den{1};
      for (int i = 0; i < p1; ++i) {
        const Real t = random_vector(rng, 1, -0.7, 0.7)[0];
        std::vector<Real> next(den.size() + 1, 0);
        for (std::size_t k = 0; k < den.size(); ++k) {
          next[k] += den[k];
          next[k + 1] -= t * den[k];
        }
        den = next;
      }
      std::vector<Real> num = random_vector(rng, static_cast<std::size_t>(p0) + 1);
      num[0] = 1 + std::abs(num[0]);
      const DegreeSpec spec(1, {p0, p1});
      check_pade(PowerSeries(long_division(num, den, required_input_length(spec))), spec);
    }
  }

  SUBCASE("exp(z)") {
    for (int p0 = 0; p0 <= 4; ++p0) {
      for (int p1 = 0; p1 <= 4; ++p1) {
        const DegreeSpec spec(1, {p0, p1});
        check_pade(taylor(OracleSpec::exp_times(OracleSpec::rational(1, 0)), required_input_length(spec)),
                   spec);
      }
    }
  }
}
