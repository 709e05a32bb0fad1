#pragma once

#include <complex>

#include "maassp/continued_fraction.hpp"

namespace maassp {

/// Result of pulling a point into the standard fundamental domain of
/// PSL(2,Z): |Re z*| <= 1/2, |z*| >= 1, with z* = map(z).
struct ReducedPoint {
    std::complex<double> z;
    IntMat2 map;
    int steps = 0;
};

/// Translation/inversion reduction with a step cap (default 10^4).
/// Throws NumericalError instead of returning an unreduced point.
ReducedPoint reduce_to_fundamental_domain(std::complex<double> z, int max_steps = 10000);

}  // namespace maassp
