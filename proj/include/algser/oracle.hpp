#pragma once

/// Reference Taylor coefficients for test functions built from a small
/// combinator set, plus error tables comparing predictions against them.
///
///   binomial(a, b, alpha)   (a + b z)^alpha
///   rational(c, d)          1 / (c + d z)
///   rational(c, d, z)       z / (c + d z)
///   exp_times(g)            exp(z) g(z)
///   g + h, s * g            coefficientwise

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "algser/config.hpp"
#include "algser/series.hpp"

namespace algser {

class OracleSpec;
using OraclePtr = std::shared_ptr<const OracleSpec>;

namespace oracle {

struct Binomial {
  Real a, b, alpha;
};
struct Rational {
  Real c, d;
  bool numerator_z;  // numerator z instead of 1
};
struct ExpProduct {
  OraclePtr inner;
};
struct Sum {
  std::vector<OraclePtr> terms;
};
struct Scale {
  Real factor;
  OraclePtr inner;
};

using Node = std::variant<Binomial, Rational, ExpProduct, Sum, Scale>;

}  // namespace oracle

class OracleSpec {
 public:
  /// Throws Error(InvalidSpec) for a == 0, a < 0 with non-integer alpha, or
  /// non-finite parameters.
  static OracleSpec binomial(Real a, Real b, Real alpha);
  /// Throws Error(InvalidSpec) for c == 0 or non-finite parameters.
  static OracleSpec rational(Real c, Real d, bool numerator_z = false);
  static OracleSpec exp_times(OracleSpec inner);
  static OracleSpec sum(std::vector<OracleSpec> terms);
  static OracleSpec scale(Real factor, OracleSpec inner);

  const oracle::Node& node() const noexcept { return node_; }

  /// Expression in the syntax parse_oracle_expression accepts.
  std::string describe() const;

 private:
  explicit OracleSpec(oracle::Node node) : node_(std::move(node)) {}
  oracle::Node node_;
};

OracleSpec operator+(OracleSpec lhs, OracleSpec rhs);
OracleSpec operator*(Real factor, OracleSpec spec);

/// First `length` Taylor coefficients at z = 0. Binomials use the forward
/// recurrence c_{j+1} = c_j (b/a) (alpha - j)/(j + 1); rationals the
/// geometric one; exp_times a truncated convolution with 1/j!.
/// Throws Error(InvalidSeries) for length == 0.
PowerSeries taylor(const OracleSpec& spec, std::size_t length);

/// (2 - 3z)^{1/2} + 1/(5 - z)
OracleSpec example1();
/// 17 (1 - 2z)^{-1/3} + z/(2 - z)
OracleSpec example2();
/// exp(z) (2 - 3z)^{-1/3} + 1/(5 - z)
OracleSpec example3();

/// "ex1", "ex2", "ex3", or nullopt.
std::optional<OracleSpec> named_example(std::string_view name);

/// Parses e.g. "17*binomial(1,-2,-1/3) + rational(2,-1,z)".
/// Numbers may be written as fractions p/q. Throws Error(InvalidInput) on
/// syntax errors and Error(InvalidSpec) on invalid parameters.
OracleSpec parse_oracle_expression(std::string_view text);

/// One row of a prediction error table. `rel_err_pct` is empty when the true
/// coefficient is zero (relative error undefined).
struct ErrorRow {
  std::size_t j = 0;
  Real truth = 0;
  Real predicted = 0;
  Real abs_err = 0;
  std::optional<Real> rel_err_pct;

  bool zero_truth() const noexcept { return !rel_err_pct.has_value(); }
};

/// Rows for predicted[i] against truth[start_index + i], relative error in
/// percent. Throws Error(InsufficientCoefficients) if truth is too short.
std::vector<ErrorRow> reference_errors(const PowerSeries& truth, std::span<const Real> predicted,
                                       std::size_t start_index);

}  // namespace algser
