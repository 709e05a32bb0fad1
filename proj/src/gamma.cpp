#include <cmath>
#include <complex>

#include "maassp/errors.hpp"
#include "maassp/specialfn.hpp"

namespace maassp {

namespace {

using cdouble = std::complex<double>;

// B_{2m}/(2m(2m-1)) for the Stirling tail, m = 1..15.
constexpr double kStirling[] = {
    8.3333333333333333e-02,  -2.7777777777777778e-03, 7.9365079365079365e-04,
    -5.9523809523809524e-04, 8.4175084175084175e-04,  -1.9175269175269175e-03,
    6.4102564102564103e-03,  -2.9550653594771242e-02, 1.7964437236883057e-01,
    -1.3924322169059011e+00, 1.3402864044168392e+01,  -1.5684828462600202e+02,
    2.1931033333333333e+03,  -3.6108771253724989e+04, 6.9147226885131306e+05,
};

bool near_nonpositive_integer(cdouble z, double tol = 1e-13) {
    if (z.real() > 0.5) return false;
    double n = std::nearbyint(z.real());
    return n <= 0.0 && std::abs(z.real() - n) < tol && std::abs(z.imag()) < tol;
}

// Stirling series for Re z large enough; caller shifts.
cdouble lgamma_stirling(cdouble z) {
    cdouble lz = std::log(z);
    cdouble acc = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * M_PI);
    cdouble zinv = 1.0 / z;
    cdouble zpow = zinv;
    cdouble z2 = zinv * zinv;
    for (double coeff : kStirling) {
        acc += coeff * zpow;
        zpow *= z2;
    }
    return acc;
}

}  // namespace

std::complex<double> lgamma_complex(std::complex<double> z) {
    if (near_nonpositive_integer(z))
        throw PoleError("lgamma_complex: pole at non-positive integer", z);
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        cdouble lsin = std::log(std::sin(M_PI * z));
        return std::log(M_PI) - lsin - lgamma_complex(1.0 - z);
    }
    int shift = 0;
    cdouble w = z;
    while (std::abs(w) < 18.0) {
        w += 1.0;
        ++shift;
    }
    cdouble acc = lgamma_stirling(w);
    for (int k = 0; k < shift; ++k) acc -= std::log(z + static_cast<double>(k));
    return acc;
}

std::complex<double> gamma_complex(std::complex<double> z) {
    return std::exp(lgamma_complex(z));
}

std::complex<double> gamma_factor(std::complex<double> s) {
    // Poles of Gamma(s/2): s = 0, -2, -4, ...
    if (near_nonpositive_integer(0.5 * s))
        throw PoleError("gamma_factor: pole of Gamma(s/2)", s);
    // Poles of the denominator Gamma((1-s)/2) make gamma(s) vanish:
    // s = 1, 3, 5, ...
    if (near_nonpositive_integer(0.5 * (1.0 - s))) return {0.0, 0.0};
    cdouble expo = lgamma_complex(0.5 * s) - lgamma_complex(0.5 * (1.0 - s)) +
                   (0.5 - s) * std::log(M_PI);
    return std::exp(expo);
}

std::complex<double> mellin_factor(std::complex<double> s, double r) {
    cdouble half_lambda{0.0, r};
    cdouble ap = 0.5 * (s + 0.5 + half_lambda);
    cdouble am = 0.5 * (s + 0.5 - half_lambda);
    if (near_nonpositive_integer(ap) || near_nonpositive_integer(am))
        throw PoleError("mellin_factor: Gamma pole", s);
    cdouble expo = lgamma_complex(ap) + lgamma_complex(am) +
                   (s - 1.5) * std::log(2.0) - (s + 0.5) * std::log(2.0 * M_PI);
    return std::exp(expo);
}

std::complex<double> bessel_normalization(double r) {
    // c(lambda) = 2 pi^{(1-lambda)/2} / Gamma((1-lambda)/2), lambda = 2iR.
    cdouble arg{0.5, -r};
    cdouble expo = arg * std::log(M_PI) - lgamma_complex(arg);
    return 2.0 * std::exp(expo);
}

}  // namespace maassp
