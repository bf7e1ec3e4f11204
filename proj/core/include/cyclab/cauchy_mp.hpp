#pragma once

#include <cstddef>
#include <vector>

#include "cyclab/series.hpp"

namespace cyclab {

// Cauchy-integral Taylor coefficients of the singular inner function of nu,
// evaluated in ~100-digit arithmetic and rounded to double at the end.
//
// The double-precision trapezoid oracle loses out to the r^{-n} amplification
// of sampling roundoff (at r = 0.5 and n = 256 that's a factor 2^256); with
// 100-digit intermediates the amplified error stays below 1e-20, so this is
// the faithful independent check for deep coefficients.
std::vector<cdouble> inner_coeffs_mp(const AtomicSingularMeasure& nu, std::size_t M,
                                     double r = 0.5, std::size_t K = 2048);

}  // namespace cyclab
