#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace algser {

enum class ErrorKind {
  InvalidSeries,             // empty series or non-finite coefficient
  InvalidSpec,               // malformed DegreeSpec or OracleSpec
  InvalidInput,              // unparsable file or expression
  InsufficientCoefficients,  // fewer coefficients than the fit/report needs
  SingularSystem,            // no normalization gives a solvable system
  ZeroDenominator,           // prediction denominator C vanishes
  Overflow,                  // predicted coefficient is not representable
  SpecMismatch,              // operation not defined for this DegreeSpec
  DegreeCollapse,            // leading polynomial vanishes at the point
  BranchAmbiguity,           // two roots equally close to the seed sum
  NoConvergence,             // root finder did not reach its residual target
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace algser
