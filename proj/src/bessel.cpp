#include <cmath>
#include <complex>
#include <limits>

#include "maassp/errors.hpp"
#include "maassp/mp.hpp"
#include "maassp/specialfn.hpp"

// Scaled imaginary-order Bessel e^{pi R/2} K_{iR}(x).
//
// The workhorse is the real form of the ascending series
//   K_{iR}(x) = -pi/sinh(pi R) * sum_k u_k sin(phi_k),
//   u_k   = (x/2)^{2k} / (k! |Gamma(k+1+iR)|),
//   phi_k = R ln(x/2) - arg Gamma(k+1+iR),
// whose terms follow two-term recurrences.  Its roundoff grows like
// e^{2x - pi R/2}, so for large x the cosh-integral representation takes
// over once the integrand stops oscillating (x >> R^2/(2x) regime), and
// the gap between the two regimes at large R is closed by rerunning the
// series in MPFR at a precision chosen from the predicted cancellation.

namespace maassp {

namespace detail {
double bessel_k_imag_any(double r, double x);
}

namespace {

struct SeriesBase {
    double r = -1.0;
    double u0 = 0.0;        // 1/|Gamma(1+iR)|
    double arg_gamma = 0.0;  // arg Gamma(1+iR)
    double prefactor = 0.0;  // -pi e^{pi R/2} / sinh(pi R)
};

const SeriesBase& series_base(double r) {
    thread_local SeriesBase base;
    if (base.r != r) {
        base.r = r;
        base.u0 = std::sqrt(std::sinh(M_PI * r) / (M_PI * r));
        base.arg_gamma = lgamma_complex({1.0, r}).imag();
        // e^{pi R/2}/sinh(pi R) = 2/(e^{pi R/2} - e^{-3 pi R/2})
        base.prefactor = -2.0 * M_PI / (std::exp(M_PI * r / 2.0) - std::exp(-1.5 * M_PI * r));
    }
    return base;
}

struct SeriesResult {
    double value;
    double cancellation;  // sum |terms| / |sum|
    int terms;
};

// Real-form ascending series in doubles for R > 0.
SeriesResult series_double(double r, double x) {
    const SeriesBase& base = series_base(r);
    const double x24 = 0.25 * x * x;
    double u = base.u0;
    double phi = r * std::log(0.5 * x) - base.arg_gamma;
    double sum = u * std::sin(phi);
    double sum_abs = std::abs(sum);
    double u_max = u;
    int k = 1;
    for (; k < 200000; ++k) {
        u *= x24 / (k * std::sqrt(static_cast<double>(k) * k + r * r));
        phi -= std::atan2(r, static_cast<double>(k));
        double term = u * std::sin(phi);
        sum += term;
        sum_abs += std::abs(u);
        u_max = std::max(u_max, u);
        if (u < 1e-20 * u_max && 2.0 * k > x) break;
    }
    double value = base.prefactor * sum;
    double cancel = sum_abs / std::max(std::abs(sum), std::numeric_limits<double>::min());
    return {value, cancel, k};
}

// K_0 via the digamma form of the series (the R -> 0 limit).
double series_k0(double x) {
    const double lhalf = std::log(0.5 * x);
    double psi = -0.5772156649015328606;  // psi(1)
    double u = 1.0;                       // (x/2)^{2k} / k!^2
    double sum = u * (psi - lhalf);
    for (int k = 1; k < 10000; ++k) {
        u *= 0.25 * x * x / (static_cast<double>(k) * k);
        psi += 1.0 / k;
        double term = u * (psi - lhalf);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) && 2 * k > x) break;
    }
    return sum;
}

// Trapezoid on the cosh representation, valid once x cosh t decays faster
// than cos(Rt) oscillates.  Integrand is even with doubly exponential
// decay, so plain trapezoid with step halving converges spectrally.
double integral_double(double r, double x) {
    const double budget = 45.0;
    const double T = std::acosh(1.0 + budget / x);
    auto f = [&](double t) {
        double s = std::sinh(0.5 * t);
        return std::exp(-2.0 * x * s * s) * std::cos(r * t);
    };
    int n = 16;
    double h = T / n;
    double acc = 0.5 * (f(0.0) + f(T));
    for (int i = 1; i < n; ++i) acc += f(i * h);
    double prev = acc * h;
    for (int halving = 0; halving < 14; ++halving) {
        double mid = 0.0;
        for (int i = 0; i < n; ++i) mid += f((i + 0.5) * h);
        double cur = 0.5 * prev + 0.5 * h * mid;
        n *= 2;
        h *= 0.5;
        if (std::abs(cur - prev) <= 1e-13 * std::abs(cur) + 1e-300) {
            prev = cur;
            break;
        }
        prev = cur;
    }
    double expo = M_PI * r / 2.0 - x;
    if (expo < -700.0) return 0.0;  // below double range
    return std::exp(expo) * prev;
}

// arg Gamma(1+iR) to the requested precision via the Stirling series,
// shifted so the asymptotic tail certifies.
MpReal mp_arg_gamma(double r, mpfr_prec_t prec) {
    long shift = std::max<long>(40, prec / 2);
    MpReal rr(r, prec);
    MpReal wre(static_cast<double>(1 + shift), prec);
    MpReal lnw_re = wre.hypot(rr).log();
    MpReal lnw_im = rr.atan2(wre);
    // Im[(w - 1/2) ln w - w]
    MpReal acc = (wre - MpReal(0.5, prec)) * lnw_im + rr * lnw_re - rr;
    // Stirling tail: Im sum B_{2m}/(2m(2m-1)) w^{-(2m-1)}
    static const std::vector<mpq_class> bern = bernoulli_numbers(160);
    MpReal n2 = wre * wre + rr * rr;
    MpComplex winv(wre / n2, -(rr / n2));
    MpComplex w2 = winv * winv;
    MpComplex zpow = winv;
    MpReal eps(std::ldexp(1.0, -static_cast<int>(prec) - 8), prec);
    for (int m = 1; m <= 78; ++m) {
        mpq_class coeff = bern[2 * m] / (mpq_class(2 * m) * mpq_class(2 * m - 1));
        MpReal term = MpReal(coeff, prec) * zpow.im;
        acc = acc + term;
        if (term.abs() < eps * (acc.abs() + MpReal(1e-300, prec))) break;
        zpow = zpow * w2;
    }
    // Remove the shift: arg Gamma(1+iR) = arg Gamma(w) - sum atan2(R, 1+j).
    for (long j = 0; j < shift; ++j)
        acc = acc - rr.atan2(MpReal(static_cast<double>(1 + j), prec));
    return acc;
}

// Full series in MPFR for the large-R cancellation gap.
double series_mpfr(double r, double x, mpfr_prec_t prec) {
    MpReal rr(r, prec), xx(x, prec);
    MpReal pi = MpReal::pi(prec);
    MpReal pir = pi * rr;
    MpReal u = (pir.sinh() / pir).sqrt();
    MpReal phi = rr * (xx * MpReal(0.5, prec)).log() - mp_arg_gamma(r, prec);
    MpReal x24 = xx * xx * MpReal(0.25, prec);
    MpReal sum = u * phi.sin();
    MpReal u_max = u;
    for (int k = 1; k < 200000; ++k) {
        MpReal kk(static_cast<double>(k), prec);
        u = u * (x24 / (kk * (kk * kk + rr * rr).sqrt()));
        phi = phi - rr.atan2(kk);
        sum = sum + u * phi.sin();
        if (u_max < u) u_max = u;
        if (u < MpReal(std::ldexp(1.0, -static_cast<int>(prec) - 10), prec) * u_max &&
            2.0 * k > x)
            break;
    }
    MpReal pref = -(pi * (pir * MpReal(0.5, prec)).exp() / pir.sinh());
    return (pref * sum).to_double();
}

}  // namespace

namespace detail {

double bessel_k_imag_any(double r, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k_imag: x must be positive");
    if (r < 0.0) throw DomainError("bessel_k_imag: R must be nonnegative");

    if (r < 1e-14) {
        if (x <= 7.0) return series_k0(x);
        return integral_double(0.0, x);
    }

    // Route by the predicted series cancellation e^{2x - pi R/2}.  Within
    // the series regime the roundoff stays below ~1e-10 of the local
    // envelope; measured point-relative blowups there are zero crossings
    // of the oscillation, not precision loss, so they must not escalate.
    const double integral_ok_from = std::max(1.5, r * r / 24.0);
    const double pred_ln_kappa = 2.0 * x - M_PI * r / 2.0;
    if (pred_ln_kappa < 9.5) return series_double(r, x).value;
    if (x >= integral_ok_from) return integral_double(r, x);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(64 + pred_ln_kappa * 1.4427 + 40);
    return series_mpfr(r, x, prec);
}

}  // namespace detail

double bessel_k_imag(double r, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k_imag: x must be positive");
    if (x < 1e-3 || r < 0.0 || r > 50.0)
        throw RangeError("bessel_k_imag: outside the guaranteed box x >= 1e-3, 0 <= R <= 50");
    return detail::bessel_k_imag_any(r, x);
}

}  // namespace maassp
