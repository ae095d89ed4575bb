#include "algser/errors.hpp"

namespace algser {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidSeries: return "InvalidSeries";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::DegreeCollapse: return "DegreeCollapse";
    case ErrorKind::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorKind::NoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

}  // namespace algser
