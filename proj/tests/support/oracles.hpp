#pragma once

// Test-only oracles, independent of the library's evaluation paths.

#include <cmath>
#include <complex>
#include <functional>

namespace oracles {

// Classic recursive adaptive Simpson (complex-valued).
inline std::complex<double> simpson_rec(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, std::complex<double> fa,
                                        std::complex<double> fm, std::complex<double> fb,
                                        std::complex<double> whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    std::complex<double> flm = f(lm), frm = f(rm);
    std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    std::complex<double> delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) < 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline std::complex<double> adaptive_simpson(const std::function<std::complex<double>(double)>& f,
                                             double a, double b, double tol, int depth = 48) {
    std::complex<double> fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// K_0(x) by quadrature of the cosh representation (independent of every
// series in the library).
inline double k0_quadrature(double x) {
    auto f = [x](double t) { return std::complex<double>{std::exp(-x * std::cosh(t)), 0.0}; };
    double t_max = std::acosh(1.0 + 60.0 / x);
    return adaptive_simpson(f, 0.0, t_max, 1e-14).real();
}

}  // namespace oracles
