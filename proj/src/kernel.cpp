#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include "maassp/errors.hpp"
#include "maassp/mp.hpp"
#include "maassp/quadrature.hpp"
#include "maassp/specialfn.hpp"

// K_{lambda,n}(y) via its defining Fourier integral
//   F = int_R (1+(x/y)^2)^{(lambda-1)/2} e^{-2 pi i n x} dx
//     = 2 int_0^inf A(x) cos(omega x) dx,  omega = 2 pi |n|,
//   A(x) = e^{-L/2} (cos(R L) + i sin(R L)),  L = log1p((x/y)^2).
//
// The amplitude decays only like 1/x, so the integral is split at X large
// enough that the amplitude phase rate 2Rx/(x^2+y^2) is dominated by
// omega; [0, X] is resolved by phase-aware Gauss-Legendre panels and the
// tail is resummed by repeated integration by parts, whose derivative
// polynomials follow a closed coefficient recurrence.  The value can be
// exponentially smaller than the integrand, so the routine certifies a
// roundoff floor and escalates to MPFR at a precision sized from the
// observed cancellation.

namespace maassp {

namespace {

struct CD {
    double re = 0.0, im = 0.0;
    friend CD operator+(CD a, CD b) { return {a.re + b.re, a.im + b.im}; }
    friend CD operator-(CD a, CD b) { return {a.re - b.re, a.im - b.im}; }
    friend CD operator*(CD a, CD b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CD operator/(CD a, CD b) {
        double n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
};

struct DoubleOps {
    using R = double;
    using C = CD;
    int bits = 53;
    R real(double v) const { return v; }
    C cplx(R re, R im) const { return {re, im}; }
    R log1p_(const R& v) const { return std::log1p(v); }
    R sin_(const R& v) const { return std::sin(v); }
    R cos_(const R& v) const { return std::cos(v); }
    R exp_(const R& v) const { return std::exp(v); }
    R abs_(const C& v) const { return std::hypot(v.re, v.im); }
    double dbl(const R& v) const { return v; }
    std::complex<double> cd(const C& v) const { return {v.re, v.im}; }
    R node(int n, int i) const { return gauss_legendre(n).nodes[i]; }
    R weight(int n, int i) const { return gauss_legendre(n).weights[i]; }
};

// Gauss-Legendre nodes at working precision (Newton refinement of double
// seeds; a few quadratic steps reach any practical precision).
struct MpGl {
    std::vector<MpReal> nodes, weights;
};

const MpGl& mp_gauss_legendre(int n, mpfr_prec_t prec) {
    static std::map<std::pair<int, mpfr_prec_t>, MpGl> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    MpGl gl;
    gl.nodes.reserve(n);
    gl.weights.reserve(n);
    MpReal one(1.0, prec);
    for (int i = 0; i < n; ++i) {
        MpReal x(std::cos(M_PI * (i + 0.75) / (n + 0.5)), prec);
        MpReal dp(prec);
        for (int iter = 0; iter < 12; ++iter) {
            MpReal p0(1.0, prec), p1 = x;
            for (int k = 2; k <= n; ++k) {
                MpReal p2 = (MpReal(2.0 * k - 1.0, prec) * x * p1 -
                             MpReal(static_cast<double>(k - 1), prec) * p0) /
                            MpReal(static_cast<double>(k), prec);
                p0 = p1;
                p1 = p2;
            }
            dp = MpReal(static_cast<double>(n), prec) * (x * p1 - p0) / (x * x - one);
            MpReal dx = p1 / dp;
            x = x - dx;
            if (dx.abs() < MpReal(std::ldexp(1.0, -static_cast<int>(prec) + 2), prec)) break;
        }
        gl.nodes.push_back(x);
        gl.weights.push_back(MpReal(2.0, prec) / ((one - x * x) * dp * dp));
    }
    return cache.emplace(key, std::move(gl)).first->second;
}

struct MpOps {
    using R = MpReal;
    using C = MpComplex;
    mpfr_prec_t bits = 128;
    R real(double v) const { return MpReal(v, bits); }
    C cplx(R re, R im) const { return {std::move(re), std::move(im)}; }
    R log1p_(const R& v) const { return v.log1p(); }
    R sin_(const R& v) const { return v.sin(); }
    R cos_(const R& v) const { return v.cos(); }
    R exp_(const R& v) const { return v.exp(); }
    R abs_(const C& v) const { return v.abs(); }
    double dbl(const R& v) const { return v.to_double(); }
    std::complex<double> cd(const C& v) const { return {v.re.to_double(), v.im.to_double()}; }
    R node(int n, int i) const { return mp_gauss_legendre(n, bits).nodes[i]; }
    R weight(int n, int i) const { return mp_gauss_legendre(n, bits).weights[i]; }
};

struct OscDiag {
    std::complex<double> value;  // 2 * (head + tail)
    double abs_integral = 0;     // int |A| over the head (roundoff scale)
    double bp_floor = 0;         // truncation floor of the tail resummation
    double quad_diff = 0;        // panel-refinement discrepancy
};

template <class Ops>
OscDiag oscillatory_fourier(const Ops& ops, double r, double y, double omega,
                            double abs_target) {
    using R = typename Ops::R;
    using C = typename Ops::C;

    const R ry = ops.real(y);
    const R rr = ops.real(r);
    const R half_r = ops.real(0.5);
    auto amplitude = [&](const R& x) -> C {
        R u = x / ry;
        R L = ops.log1p_(u * u);
        R mod = ops.exp_(ops.real(0.0) - L * half_r);
        R ph = rr * L;
        return ops.cplx(mod * ops.cos_(ph), mod * ops.sin_(ph));
    };
    auto scaled = [&](const C& z, const R& s) -> C { return ops.cplx(z.re * s, z.im * s); };

    const double lam1 = std::sqrt(1.0 + 4.0 * r * r);  // |lambda - 1|
    const int j_max = 64;
    double X = std::max({6.0 * y, (4.0 * r + 2.0 * lam1 + 4.0) / omega, 2.0});
    // Push X until the by-parts floor can reach the target.  Term j of the
    // resummation scales like (|A(X)|/omega) g^j j! with g = rate0/(X omega),
    // so the optimal truncation bottoms out at j* = min(1/g, j_max).
    const double rate0 = 4.0 * r + 2.0 * lam1 + 1.0;
    for (int grow = 0; grow < 80; ++grow) {
        double g = rate0 / (X * omega);
        double jstar = std::min(1.0 / g, static_cast<double>(j_max - 2));
        double ln_floor = std::log(y / std::max(X, y) / omega) + jstar * std::log(g) +
                          std::lgamma(jstar + 1.0);
        if (ln_floor < std::log(0.05 * abs_target) || X > 1e7) break;
        X *= 1.35;
    }

    const int gl_n = (ops.bits <= 64) ? 16 : std::min<int>(64, 18 + static_cast<int>(ops.bits) / 10);
    const double panel_factor = (ops.bits <= 64) ? 2.2 : 3.2;

    auto head_pass = [&](double shrink) {
        C acc = ops.cplx(ops.real(0.0), ops.real(0.0));
        double absint = 0.0;
        double x0 = 0.0;
        const R romega = ops.real(omega);
        while (x0 < X) {
            double rate = omega + 2.0 * r * x0 / (x0 * x0 + y * y) + 0.5;
            double len = std::min(panel_factor * shrink / rate, X - x0);
            double x1 = x0 + len;
            if (x1 > X || X - x1 < 1e-12 * X) x1 = X;
            // Panel endpoints are doubles, hence exact at working precision;
            // mid/half derived from them keep adjacent panels gap-free.
            R rx0 = ops.real(x0), rx1 = ops.real(x1);
            R mid = (rx0 + rx1) * half_r, half = (rx1 - rx0) * half_r;
            for (int i = 0; i < gl_n; ++i) {
                R xx = mid + half * ops.node(gl_n, i);
                R c = ops.cos_(romega * xx);
                C a = amplitude(xx);
                C val = ops.cplx(a.re * c, a.im * c);
                R w = half * ops.weight(gl_n, i);
                acc = acc + scaled(val, w);
                absint += ops.dbl(w) * ops.dbl(ops.abs_(a));
            }
            x0 = x1;
        }
        return std::make_pair(acc, absint);
    };

    auto [head, absint] = head_pass(1.0);
    auto [head_check, absint_check] = head_pass(0.8);
    (void)absint_check;

    // Tail by parts.  Work with M_j := N_j/(x^2+y^2)^j so that
    // A^{(j)}(X) = A(X) M_j(X); the coefficient recurrence
    //   M_{j+1}[i+1] += (lambda-1-2j+i)/(X^2+y^2) M_j[i],
    //   M_{j+1}[i-1] += i y^2/(X^2+y^2) M_j[i]
    // keeps every intermediate on the scale of the terms themselves.
    const C lam_m1 = ops.cplx(ops.real(-1.0), ops.real(2.0 * r));
    const R rx = ops.real(X);
    const R y2 = ry * ry;
    const R den = rx * rx + y2;
    const C a_at_x = amplitude(rx);
    const C one_c = ops.cplx(ops.real(1.0), ops.real(0.0));

    C tail = ops.cplx(ops.real(0.0), ops.real(0.0));
    double bp_floor = 0.0;
    for (int dir = 0; dir < 2; ++dir) {
        const double mu = (dir == 0) ? omega : -omega;
        const C e_imux = ops.cplx(ops.cos_(ops.real(mu) * rx), ops.sin_(ops.real(mu) * rx));
        // 1/(i mu) at working precision; a double-rounded reciprocal would
        // leak into every power of the resummation.
        const C inv_imu = ops.cplx(ops.real(0.0), ops.real(0.0) - ops.real(1.0) / ops.real(mu));
        std::vector<C> mj{one_c};
        C pw = inv_imu;
        double sgn = -1.0;
        C acc = ops.cplx(ops.real(0.0), ops.real(0.0));
        double prev_mag = 1e300, min_mag = 1e300;
        for (int j = 0; j < j_max; ++j) {
            C mjx = mj.back();
            for (int i = static_cast<int>(mj.size()) - 2; i >= 0; --i)
                mjx = ops.cplx(mjx.re * rx, mjx.im * rx) + mj[i];
            C term = scaled(a_at_x * mjx * e_imux * pw, ops.real(sgn));
            double mag = ops.dbl(ops.abs_(term));
            if (j > 2 && mag > prev_mag) break;  // asymptotic series bottomed out
            acc = acc + term;
            min_mag = std::min(min_mag, mag);
            prev_mag = mag;
            if (j > 1 && mag < 1e-3 * abs_target) break;
            std::vector<C> next(mj.size() + 1, ops.cplx(ops.real(0.0), ops.real(0.0)));
            for (std::size_t i = 0; i < mj.size(); ++i) {
                C up = lam_m1 - ops.cplx(ops.real(2.0 * j - static_cast<double>(i)), ops.real(0.0));
                next[i + 1] = next[i + 1] + mj[i] * up / ops.cplx(den, ops.real(0.0));
                if (i >= 1)
                    next[i - 1] =
                        next[i - 1] + scaled(mj[i], y2 * ops.real(static_cast<double>(i)) / den);
            }
            mj = std::move(next);
            pw = pw * inv_imu;
            sgn = -sgn;
        }
        bp_floor = std::max(bp_floor, min_mag);
        tail = tail + scaled(acc, half_r);
    }

    OscDiag out;
    C total = scaled(head + tail, ops.real(2.0));
    out.value = ops.cd(total);
    out.abs_integral = absint;
    out.bp_floor = 2.0 * bp_floor;
    out.quad_diff = 2.0 * ops.dbl(ops.abs_(head - head_check));
    return out;
}

}  // namespace

KernelValue k_lambda_n(double r, long n, double y, KernelRoute route) {
    if (n == 0) throw DomainError("k_lambda_n: n must be nonzero");
    if (!(y > 0.0)) throw DomainError("k_lambda_n: y must be positive");
    if (r < 0.0) throw DomainError("k_lambda_n: R must be nonnegative");
    const double n_abs = std::abs(static_cast<double>(n));
    using cdouble = std::complex<double>;

    if (route == KernelRoute::closed_form) {
        double x = 2.0 * M_PI * n_abs * y;
        double k_true = std::exp(-M_PI * r / 2.0) * detail::bessel_k_imag_any(r, x);
        cdouble c_lam = bessel_normalization(r);
        cdouble n_pow = std::exp(cdouble{0.0, -2.0 * r * std::log(n_abs)});
        KernelValue kv;
        kv.value = c_lam * n_pow * std::sqrt(y) * k_true;
        kv.error = 3e-10 * std::abs(kv.value);
        return kv;
    }

    const double omega = 2.0 * M_PI * n_abs;
    DoubleOps dops;
    OscDiag diag = oscillatory_fourier(dops, r, y, omega, 1e-15);
    double scale = std::abs(diag.value);
    double round_floor = 3e-16 * diag.abs_integral;
    double err = round_floor + diag.bp_floor + diag.quad_diff;

    cdouble f_value = diag.value;
    int bits_used = 53;
    if (err > 1e-9 * scale) {
        double cancel = diag.abs_integral / std::max(scale, round_floor);
        mpfr_prec_t bits = static_cast<mpfr_prec_t>(60 + std::log2(std::max(cancel, 2.0)) + 48);
        for (int attempt = 0; attempt < 3; ++attempt) {
            MpOps mops;
            mops.bits = bits;
            double target = std::max(scale, std::ldexp(1.0, -static_cast<int>(bits) + 4) *
                                                diag.abs_integral) *
                            1e-10;
            OscDiag hi = oscillatory_fourier(mops, r, y, omega, target);
            f_value = hi.value;
            scale = std::abs(f_value);
            err = std::ldexp(1.0, 8 - static_cast<int>(bits)) * hi.abs_integral + hi.bp_floor +
                  hi.quad_diff;
            bits_used = static_cast<int>(bits);
            if (err <= 1e-9 * scale) break;
            bits += bits / 2;
        }
    }

    // Prefactor |n|^{-lambda/2} y^{(lambda-1)/2} = e^{-iR ln n} y^{-1/2} e^{iR ln y}.
    cdouble phase = std::exp(cdouble{0.0, r * (std::log(y) - std::log(n_abs))});
    cdouble pref = phase / std::sqrt(y);
    KernelValue kv;
    kv.value = pref * f_value;
    kv.error = err / std::sqrt(y);
    kv.precision_bits = bits_used;
    return kv;
}

}  // namespace maassp
