#include "algser/coefficient_file.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <type_traits>
#include <vector>

#include <fmt/format.h>

#include "algser/errors.hpp"

namespace algser {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

PowerSeries parse_coefficients(std::istream& in) {
  std::vector<Real> coeffs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const std::string text(body);
    char* end = nullptr;
    Real value;
    if constexpr (std::is_same_v<Real, double>) {
      value = std::strtod(text.c_str(), &end);
    } else {
      value = std::strtold(text.c_str(), &end);
    }
    if (end == text.c_str() || *end != '\0') {
      throw Error(ErrorKind::InvalidInput,
                  "line " + std::to_string(line_no) + ": not a decimal number: '" + text + "'");
    }
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::InvalidSeries,
                  "line " + std::to_string(line_no) + ": coefficient is not finite");
    }
    coeffs.push_back(value);
  }
  if (coeffs.empty()) throw Error(ErrorKind::InvalidInput, "coefficient file has no coefficients");
  return PowerSeries(std::move(coeffs));
}

PowerSeries read_coefficient_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  return parse_coefficients(in);
}

void write_coefficients(std::ostream& out, std::span<const Real> coeffs) {
  constexpr int digits = std::numeric_limits<Real>::max_digits10;
  for (Real c : coeffs) out << fmt::format("{:.{}g}\n", c, digits);
}

}  // namespace algser
