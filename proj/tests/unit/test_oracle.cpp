#include <doctest.h>

#include <cmath>
#include <random>

#include "algser/errors.hpp"
#include "algser/hermite_pade.hpp"
#include "algser/oracle.hpp"
#include "algser/predictor.hpp"
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

Real round_to(Real v, int decimals) {
  const Real scale = std::pow(Real{10}, decimals);
  return std::round(v * scale) / scale;
}

// (a + b z)^alpha = a^alpha sum_j binom(alpha, j) (b/a)^j z^j
Real binomial_term(Real a, Real b, Real alpha, std::size_t j) {
  return std::pow(a, alpha) * binomial_coefficient(alpha, j) * std::pow(b / a, static_cast<Real>(j));
}

// 1/(c + d z) = (1/c) sum_j (-d/c)^j z^j
Real geometric_term(Real c, Real d, std::size_t j) {
  return std::pow(-d / c, static_cast<Real>(j)) / c;
}

Real factorial(std::size_t n) {
  Real f{1};
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<Real>(i);
  return f;
}

Real example3_term(std::size_t j) {
  Real product{0};
  for (std::size_t k = 0; k <= j; ++k) product += binomial_term(2, -3, Real{-1} / 3, j - k) / factorial(k);
  return product + geometric_term(5, -1, j);
}

}  // namespace

TEST_CASE("building blocks") {
  const PowerSeries sqrt_series = taylor(OracleSpec::binomial(1, 1, 0.5), 4);
  CHECK(sqrt_series.vector() == std::vector<Real>{1, 0.5, -0.125, 0.0625});

  const PowerSeries geometric = taylor(OracleSpec::rational(5, -1), 3);
  CHECK(geometric[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(geometric[1] == doctest::Approx(0.04).epsilon(1e-15));
  CHECK(geometric[2] == doctest::Approx(0.008).epsilon(1e-15));

  const PowerSeries shifted = taylor(OracleSpec::rational(2, -1, true), 4);
  CHECK(shifted[0] == 0.0);
  CHECK(shifted[1] == 0.5);
  CHECK(shifted[2] == 0.25);
  CHECK(shifted[3] == 0.125);

  const PowerSeries exp_series = taylor(OracleSpec::exp_times(OracleSpec::binomial(1, 0, 1)), 12);
  for (std::size_t j = 0; j < 12; ++j) CHECK(exp_series[j] == doctest::Approx(1 / factorial(j)).epsilon(1e-15));

  // Negative base with an integer exponent is a polynomial.
  const PowerSeries cube = taylor(OracleSpec::binomial(-1, 1, 3), 6);
  CHECK(cube.vector() == std::vector<Real>{-1, 3, -3, 1, 0, 0});

  CHECK(kind_of([] { OracleSpec::binomial(0, 1, 0.5); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { OracleSpec::binomial(-2, 1, 0.5); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { OracleSpec::binomial(1, NAN, 0.5); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { OracleSpec::rational(0, 1); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { taylor(example1(), 0); }) == ErrorKind::InvalidSeries);
}

TEST_CASE("binomial recurrence against the product formula") {
  const PowerSeries f = taylor(OracleSpec::binomial(2, -3, 0.5), 13);
  for (std::size_t j = 0; j <= 12; ++j) CHECK(relative_error(f[j], binomial_term(2, -3, 0.5, j)) <= 1e-12);

  // Squaring the series gives back 2 - 3z.
  const std::vector<Real> coeffs = f.vector();
  CHECK(brute_power_coefficient(coeffs, 2, 0) == doctest::Approx(2).epsilon(1e-14));
  CHECK(brute_power_coefficient(coeffs, 2, 1) == doctest::Approx(-3).epsilon(1e-14));
  for (std::size_t k = 2; k <= 12; ++k) CHECK(std::abs(brute_power_coefficient(coeffs, 2, k)) <= 1e-14);

  // (1 - 2z)^{-1/3} cubed is 1/(1 - 2z).
  const std::vector<Real> g = taylor(OracleSpec::binomial(1, -2, Real{-1} / 3), 8).vector();
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(brute_power_coefficient(g, 3, k) == doctest::Approx(std::pow(2.0, k)).epsilon(1e-13));
  }
}

TEST_CASE("example functions") {
  SUBCASE("ex1 against closed forms") {
    const PowerSeries f = taylor(example1(), 30);
    for (std::size_t j = 0; j < 30; ++j) {
      CHECK(relative_error(f[j], binomial_term(2, -3, 0.5, j) + geometric_term(5, -1, j)) <= 1e-12);
    }
  }

  SUBCASE("ex2 matches the f_j column of its table") {
    const PowerSeries f = taylor(example2(), 11);
    for (const TableRow& row : kTable2) CHECK(round_to(f[row.j], 3) == doctest::Approx(row.f).epsilon(1e-12));
  }

  SUBCASE("ex3 matches the f_j column of its table") {
    const PowerSeries f = taylor(example3(), 14);
    for (const TableRow& row : kTable3) CHECK(round_to(f[row.j], 6) == doctest::Approx(row.f).epsilon(1e-12));
    for (std::size_t j = 0; j < 14; ++j) CHECK(relative_error(f[j], example3_term(j)) <= 1e-12);
  }

  SUBCASE("named lookup") {
    CHECK(taylor(*named_example("ex2"), 20) == taylor(example2(), 20));
    CHECK_FALSE(named_example("ex4").has_value());
  }
}

TEST_CASE("sum and scale are coefficientwise") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Real a = 1 + std::abs(dist(rng)), b = dist(rng), alpha = dist(rng);
    const Real c = 2 + std::abs(dist(rng)), d = dist(rng), s = dist(rng);
    const OracleSpec g = OracleSpec::binomial(a, b, alpha);
    const OracleSpec h = OracleSpec::exp_times(OracleSpec::rational(c, d));
    const PowerSeries tg = taylor(g, 15), th = taylor(h, 15);
    const PowerSeries sum = taylor(g + h, 15);
    const PowerSeries scaled = taylor(s * g, 15);
    for (std::size_t j = 0; j < 15; ++j) {
      CHECK(sum[j] == tg[j] + th[j]);
      CHECK(scaled[j] == s * tg[j]);
    }
  }
}

TEST_CASE("parse_oracle_expression") {
  CHECK(taylor(parse_oracle_expression("binomial(2,-3,1/2) + rational(5,-1)"), 25) ==
        taylor(example1(), 25));
  CHECK(taylor(parse_oracle_expression("17*binomial(1,-2,-1/3)+rational(2,-1,z)"), 25) ==
        taylor(example2(), 25));
  CHECK(taylor(parse_oracle_expression(" exp_times( binomial(2, -3, -1/3) ) + rational(5, -1) "), 25) ==
        taylor(example3(), 25));

  const PowerSeries difference = taylor(parse_oracle_expression("rational(1,-1) - (0.5*rational(1,-1))"), 5);
  for (std::size_t j = 0; j < 5; ++j) CHECK(difference[j] == 0.5);

  for (const OracleSpec& spec : {example1(), example2(), example3()}) {
    CHECK(taylor(parse_oracle_expression(spec.describe()), 30) == taylor(spec, 30));
  }

  for (const char* bad : {"", "binomial(1,2)", "rational(1,2", "cosine(1)", "1/0*rational(1,1)",
                          "rational(1,2) +", "rational(1,2,w)"}) {
    CAPTURE(bad);
    const ErrorKind kind = kind_of([&] { parse_oracle_expression(bad); });
    CHECK((kind == ErrorKind::InvalidInput || kind == ErrorKind::InvalidSpec));
  }
  CHECK(kind_of([] { parse_oracle_expression("binomial(0,1,1/2)"); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("reference_errors") {
  SUBCASE("ex1 relative errors") {
    const PowerSeries truth = taylor(example1(), 11);
    const DegreeSpec spec(2, {1, 1, 1});
    const auto predicted = predict_k(truth, spec, solve_hpp(truth, spec), 6);
    const auto rows = reference_errors(truth, predicted, 5);
    REQUIRE(rows.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(rows[i].j == 5 + i);
      CHECK(rows[i].truth == truth[5 + i]);
      CHECK(rows[i].predicted == predicted[i]);
      CHECK(round_to(*rows[i].rel_err_pct, 2) == doctest::Approx(kTable1[i].rel_pct));
    }
  }

  SUBCASE("ex3 first row") {
    const PowerSeries truth = taylor(example3(), 9);
    const std::vector<Real> predicted{kTable3[0].a};
    const auto rows = reference_errors(truth, predicted, 8);
    CHECK(std::abs(rows[0].abs_err - 0.010447) <= 1e-6);
    CHECK(round_to(*rows[0].rel_err_pct, 2) == doctest::Approx(0.27));
  }

  SUBCASE("identity") {
    const PowerSeries truth = taylor(example2(), 10);
    const auto rows = reference_errors(truth, truth.coeffs().subspan(3), 3);
    for (const ErrorRow& row : rows) {
      CHECK(row.abs_err == 0.0);
      CHECK(*row.rel_err_pct == 0.0);
    }
  }

  SUBCASE("zero truth flags the row") {
    const PowerSeries truth({1, 0, 2});
    const std::vector<Real> predicted{0.25, 2.5};
    const auto rows = reference_errors(truth, predicted, 1);
    CHECK(rows[0].zero_truth());
    CHECK(rows[0].abs_err == 0.25);
    CHECK_FALSE(rows[1].zero_truth());
    CHECK(*rows[1].rel_err_pct == doctest::Approx(25.0));
  }

  SUBCASE("truth too short") {
    const PowerSeries truth({1, 2, 3});
    const std::vector<Real> predicted{1, 2};
    CHECK(kind_of([&] { reference_errors(truth, predicted, 2); }) == ErrorKind::InsufficientCoefficients);
  }
}
