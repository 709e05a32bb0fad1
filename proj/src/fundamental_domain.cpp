#include "maassp/fundamental_domain.hpp"

#include <cmath>

#include "maassp/errors.hpp"

namespace maassp {

ReducedPoint reduce_to_fundamental_domain(std::complex<double> z, int max_steps) {
    if (!(z.imag() > 0.0)) throw DomainError("reduce: point must lie in the upper half plane");
    IntMat2 m;  // identity
    int steps = 0;
    for (;;) {
        double n = std::nearbyint(z.real());
        if (n != 0.0) {
            z -= n;
            long ln = static_cast<long>(n);
            m = IntMat2{1, -ln, 0, 1} * m;
        }
        double r2 = std::norm(z);
        if (r2 >= 1.0 - 1e-15) break;
        z = -1.0 / z;
        m = IntMat2{0, -1, 1, 0} * m;
        if (++steps > max_steps)
            throw NumericalError("reduce: step cap exceeded (point too close to the real axis)");
    }
    // Boundary tie-breaking: send Re = +1/2 to -1/2 and |z| = 1, Re > 0 to
    // the equivalent left representative, matching the usual conventions.
    if (z.real() > 0.5 - 1e-15 && std::abs(z.real() - 0.5) < 1e-12) {
        z -= 1.0;
        m = IntMat2{1, -1, 0, 1} * m;
    }
    return ReducedPoint{z, m, steps};
}

}  // namespace maassp
