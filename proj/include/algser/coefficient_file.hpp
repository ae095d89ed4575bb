#pragma once

// Plain-text coefficient files: one decimal per line, index = line order
// among coefficient lines. Lines starting with '#' and blank lines are
// ignored.

#include <filesystem>
#include <iosfwd>
#include <span>

#include "algser/config.hpp"
#include "algser/series.hpp"

namespace algser {

/// Throws Error(InvalidInput) on a malformed line or an empty body and
/// Error(InvalidSeries) on a non-finite value.
PowerSeries parse_coefficients(std::istream& in);
PowerSeries read_coefficient_file(const std::filesystem::path& path);

/// Writes every coefficient with enough digits to round-trip.
void write_coefficients(std::ostream& out, std::span<const Real> coeffs);

}  // namespace algser
