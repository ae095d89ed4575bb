#include "algser/oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "algser/errors.hpp"

namespace algser {

namespace {

void require_finite(std::initializer_list<Real> values, const char* what) {
  for (Real v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::InvalidSpec, std::string(what) + " parameters must be finite");
    }
  }
}

std::vector<Real> coefficients(const OracleSpec& spec, std::size_t length);

struct CoefficientVisitor {
  std::size_t length;

  std::vector<Real> operator()(const oracle::Binomial& b) const {
    std::vector<Real> c(length);
    c[0] = std::pow(b.a, b.alpha);
    const Real ratio = b.b / b.a;
    for (std::size_t j = 0; j + 1 < length; ++j) {
      const auto jr = static_cast<Real>(j);
      c[j + 1] = c[j] * ratio * (b.alpha - jr) / (jr + 1);
    }
    return c;
  }

  std::vector<Real> operator()(const oracle::Rational& r) const {
    std::vector<Real> c(length, Real{0});
    const Real ratio = -r.d / r.c;
    Real term = Real{1} / r.c;
    for (std::size_t j = r.numerator_z ? 1 : 0; j < length; ++j) {
      c[j] = term;
      term *= ratio;
    }
    return c;
  }

  std::vector<Real> operator()(const oracle::ExpProduct& e) const {
    std::vector<Real> exp_coeffs(length);
    exp_coeffs[0] = Real{1};
    for (std::size_t j = 1; j < length; ++j) exp_coeffs[j] = exp_coeffs[j - 1] / static_cast<Real>(j);
    return kernel::convolve(exp_coeffs, coefficients(*e.inner, length), length);
  }

  std::vector<Real> operator()(const oracle::Sum& s) const {
    std::vector<Real> c(length, Real{0});
    for (const auto& term : s.terms) {
      const std::vector<Real> t = coefficients(*term, length);
      for (std::size_t j = 0; j < length; ++j) c[j] += t[j];
    }
    return c;
  }

  std::vector<Real> operator()(const oracle::Scale& s) const {
    std::vector<Real> c = coefficients(*s.inner, length);
    for (Real& v : c) v *= s.factor;
    return c;
  }
};

std::vector<Real> coefficients(const OracleSpec& spec, std::size_t length) {
  return std::visit(CoefficientVisitor{length}, spec.node());
}

std::string number(Real v) {
  std::ostringstream out;
  out.precision(std::numeric_limits<Real>::max_digits10);
  out << v;
  return out.str();
}

struct DescribeVisitor {
  std::string operator()(const oracle::Binomial& b) const {
    return "binomial(" + number(b.a) + "," + number(b.b) + "," + number(b.alpha) + ")";
  }
  std::string operator()(const oracle::Rational& r) const {
    return "rational(" + number(r.c) + "," + number(r.d) + (r.numerator_z ? ",z)" : ")");
  }
  std::string operator()(const oracle::ExpProduct& e) const {
    return "exp_times(" + e.inner->describe() + ")";
  }
  std::string operator()(const oracle::Sum& s) const {
    std::string out = "(";
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      if (i) out += " + ";
      out += s.terms[i]->describe();
    }
    return out + ")";
  }
  std::string operator()(const oracle::Scale& s) const {
    return number(s.factor) + "*" + s.inner->describe();
  }
};

}  // namespace

OracleSpec OracleSpec::binomial(Real a, Real b, Real alpha) {
  require_finite({a, b, alpha}, "binomial");
  if (a == Real{0}) throw Error(ErrorKind::InvalidSpec, "binomial needs a != 0");
  if (a < Real{0} && std::trunc(alpha) != alpha) {
    throw Error(ErrorKind::InvalidSpec, "binomial with a < 0 needs an integer exponent");
  }
  return OracleSpec(oracle::Binomial{a, b, alpha});
}

OracleSpec OracleSpec::rational(Real c, Real d, bool numerator_z) {
  require_finite({c, d}, "rational");
  if (c == Real{0}) throw Error(ErrorKind::InvalidSpec, "rational needs c != 0");
  return OracleSpec(oracle::Rational{c, d, numerator_z});
}

OracleSpec OracleSpec::exp_times(OracleSpec inner) {
  return OracleSpec(oracle::ExpProduct{std::make_shared<const OracleSpec>(std::move(inner))});
}

OracleSpec OracleSpec::sum(std::vector<OracleSpec> terms) {
  if (terms.empty()) throw Error(ErrorKind::InvalidSpec, "sum needs at least one term");
  oracle::Sum s;
  for (auto& t : terms) s.terms.push_back(std::make_shared<const OracleSpec>(std::move(t)));
  return OracleSpec(std::move(s));
}

OracleSpec OracleSpec::scale(Real factor, OracleSpec inner) {
  require_finite({factor}, "scale");
  return OracleSpec(
      oracle::Scale{factor, std::make_shared<const OracleSpec>(std::move(inner))});
}

std::string OracleSpec::describe() const { return std::visit(DescribeVisitor{}, node_); }

OracleSpec operator+(OracleSpec lhs, OracleSpec rhs) {
  std::vector<OracleSpec> terms;
  terms.push_back(std::move(lhs));
  terms.push_back(std::move(rhs));
  return OracleSpec::sum(std::move(terms));
}

OracleSpec operator*(Real factor, OracleSpec spec) {
  return OracleSpec::scale(factor, std::move(spec));
}

PowerSeries taylor(const OracleSpec& spec, std::size_t length) {
  if (length == 0) throw Error(ErrorKind::InvalidSeries, "oracle length must be >= 1");
  return PowerSeries(coefficients(spec, length));
}

OracleSpec example1() {
  return OracleSpec::binomial(2, -3, Real{1} / 2) + OracleSpec::rational(5, -1);
}

OracleSpec example2() {
  return Real{17} * OracleSpec::binomial(1, -2, Real{-1} / 3) + OracleSpec::rational(2, -1, true);
}

OracleSpec example3() {
  return OracleSpec::exp_times(OracleSpec::binomial(2, -3, Real{-1} / 3)) +
         OracleSpec::rational(5, -1);
}

std::optional<OracleSpec> named_example(std::string_view name) {
  if (name == "ex1") return example1();
  if (name == "ex2") return example2();
  if (name == "ex3") return example3();
  return std::nullopt;
}

std::vector<ErrorRow> reference_errors(const PowerSeries& truth, std::span<const Real> predicted,
                                       std::size_t start_index) {
  if (truth.size() < start_index + predicted.size()) {
    throw Error(ErrorKind::InsufficientCoefficients,
                "truth covers indices below " + std::to_string(truth.size()) + ", predictions reach " +
                    std::to_string(start_index + predicted.size() - 1));
  }
  std::vector<ErrorRow> rows;
  rows.reserve(predicted.size());
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    ErrorRow row;
    row.j = start_index + i;
    row.truth = truth[row.j];
    row.predicted = predicted[i];
    row.abs_err = std::abs(row.truth - row.predicted);
    if (row.truth != Real{0}) row.rel_err_pct = Real{100} * row.abs_err / std::abs(row.truth);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace algser
