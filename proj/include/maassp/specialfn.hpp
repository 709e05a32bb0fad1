#pragma once

#include <complex>

namespace maassp {

/// Principal-series spectral data: eigenvalue mu = 1/4 + R^2,
/// lambda = 2iR purely imaginary.
struct SpectralParameter {
    double r = 0.0;

    std::complex<double> lambda() const { return {0.0, 2.0 * r}; }
    double mu() const { return 0.25 + r * r; }
};

/// log Gamma on the cut plane (Stirling with shift and reflection),
/// relative accuracy ~1e-13 for |z| <= 100.  Throws PoleError at
/// non-positive integers.
std::complex<double> lgamma_complex(std::complex<double> z);
std::complex<double> gamma_complex(std::complex<double> z);

/// Scaled imaginary-order Bessel value e^{pi R/2} K_{iR}(x).
///
/// Three internal routes: a real-form power series (small and moderate x),
/// the cosh-integral representation (x beyond the oscillatory regime), and
/// an MPFR power series covering the cancellation gap at large R.  The
/// returned value is accurate to ~1e-10 relative to the local modulus
/// envelope for x >= 1e-3, 0 <= R <= 50; outside that box a RangeError is
/// thrown.
double bessel_k_imag(double r, double x);

/// gamma(s) = pi^{-s/2} Gamma(s/2) / (pi^{-(1-s)/2} Gamma((1-s)/2)),
/// the multiplicative Fourier factor of |x|^{s-1}.  Zeros at positive odd
/// integers are returned as exact 0 by continuity; poles throw PoleError.
std::complex<double> gamma_factor(std::complex<double> s);

/// Closed Mellin factor
///   Ghat(s,lambda) = 2^{s-3/2} (2pi)^{-s-1/2}
///                    Gamma((s+1/2+lambda/2)/2) Gamma((s+1/2-lambda/2)/2)
/// with lambda = 2iR, equal to int_0^inf sqrt(y) K_{iR}(2pi y) y^{s-1} dy
/// for Re s > -1/2 and meromorphic everywhere.
std::complex<double> mellin_factor(std::complex<double> s, double r);

/// c(lambda) = 2 pi^{(1-lambda)/2} / Gamma((1-lambda)/2), the constant
/// making the normalized kernel match the matrix-coefficient integral.
std::complex<double> bessel_normalization(double r);

namespace detail {
/// bessel_k_imag without the guaranteed-box floor on x; accuracy below
/// x = 1e-3 follows the series conditioning (phase error ~ R |ln x| eps).
double bessel_k_imag_any(double r, double x);
}  // namespace detail

enum class KernelRoute { closed_form, defining_integral };

/// Result of the defining-integral route with its certified error.
struct KernelValue {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;   // certified absolute error bound
    int precision_bits = 53;  // working precision the certificate required
};

/// Normalized Whittaker-type kernel K_{lambda,n}(y), lambda = 2iR:
///   closed_form:        c(lambda) |n|^{-lambda} sqrt(y) K_{iR}(2pi|n|y)
///   defining_integral:  |n|^{-lambda/2} y^{(lambda-1)/2} *
///                       int_R (1+(x/y)^2)^{(lambda-1)/2} e^{-2pi i n x} dx
/// The two agree identically; the integral route is an independent check
/// evaluated by oscillatory quadrature with a tail resummation, escalating
/// to MPFR when double precision cannot certify the cancellation.
KernelValue k_lambda_n(double r, long n, double y, KernelRoute route);

}  // namespace maassp
