#pragma once

#include <complex>

namespace algser {

// Coefficient scalar. Double precision unless the build selects long double
// (cmake -DALGSER_LONG_DOUBLE=ON).
#if defined(ALGSER_LONG_DOUBLE)
using Real = long double;
#else
using Real = double;
#endif

using Complex = std::complex<Real>;

}  // namespace algser
