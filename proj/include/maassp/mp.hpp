#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

namespace maassp {

/// Thin RAII value wrapper over mpfr_t with the handful of operations the
/// high-precision special-function fallbacks need.  Precision is fixed per
/// value and propagates as max(operand precisions).
class MpReal {
public:
    explicit MpReal(mpfr_prec_t prec = 128) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    MpReal(double v, mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_d(x_, v, MPFR_RNDN); }
    MpReal(const mpq_class& v, mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_q(x_, v.get_mpq_t(), MPFR_RNDN); }
    MpReal(const MpReal& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    MpReal(MpReal&& o) noexcept { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_swap(x_, o.x_); }
    MpReal& operator=(MpReal o) { mpfr_swap(x_, o.x_); return *this; }
    ~MpReal() { mpfr_clear(x_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(x_); }

    friend MpReal operator+(const MpReal& a, const MpReal& b) { return binary(mpfr_add, a, b); }
    friend MpReal operator-(const MpReal& a, const MpReal& b) { return binary(mpfr_sub, a, b); }
    friend MpReal operator*(const MpReal& a, const MpReal& b) { return binary(mpfr_mul, a, b); }
    friend MpReal operator/(const MpReal& a, const MpReal& b) { return binary(mpfr_div, a, b); }
    MpReal operator-() const { MpReal r(prec()); mpfr_neg(r.x_, x_, MPFR_RNDN); return r; }

    friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.x_, b.x_) > 0; }

    static MpReal pi(mpfr_prec_t prec) { MpReal r(prec); mpfr_const_pi(r.x_, MPFR_RNDN); return r; }

    MpReal abs() const { MpReal r(prec()); mpfr_abs(r.x_, x_, MPFR_RNDN); return r; }
    MpReal sqrt() const { MpReal r(prec()); mpfr_sqrt(r.x_, x_, MPFR_RNDN); return r; }
    MpReal exp() const { MpReal r(prec()); mpfr_exp(r.x_, x_, MPFR_RNDN); return r; }
    MpReal log() const { MpReal r(prec()); mpfr_log(r.x_, x_, MPFR_RNDN); return r; }
    MpReal log1p() const { MpReal r(prec()); mpfr_log1p(r.x_, x_, MPFR_RNDN); return r; }
    MpReal sin() const { MpReal r(prec()); mpfr_sin(r.x_, x_, MPFR_RNDN); return r; }
    MpReal cos() const { MpReal r(prec()); mpfr_cos(r.x_, x_, MPFR_RNDN); return r; }
    MpReal sinh() const { MpReal r(prec()); mpfr_sinh(r.x_, x_, MPFR_RNDN); return r; }
    MpReal cosh() const { MpReal r(prec()); mpfr_cosh(r.x_, x_, MPFR_RNDN); return r; }
    MpReal atan2(const MpReal& x) const {  // atan2(this, x)
        MpReal r(std::max(prec(), x.prec()));
        mpfr_atan2(r.x_, x_, x.x_, MPFR_RNDN);
        return r;
    }
    MpReal hypot(const MpReal& y) const {
        MpReal r(std::max(prec(), y.prec()));
        mpfr_hypot(r.x_, x_, y.x_, MPFR_RNDN);
        return r;
    }

private:
    using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static MpReal binary(BinOp op, const MpReal& a, const MpReal& b) {
        MpReal r(std::max(a.prec(), b.prec()));
        op(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    mpfr_t x_;
};

/// Complex pair over MpReal; only the arithmetic the Stirling series and
/// oscillatory quadratures require.
struct MpComplex {
    MpReal re, im;

    explicit MpComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}

    friend MpComplex operator+(const MpComplex& a, const MpComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend MpComplex operator-(const MpComplex& a, const MpComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
        MpReal n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    MpComplex operator-() const { return {-re, -im}; }

    MpReal abs() const { return re.hypot(im); }
    /// exp(z) = e^re (cos im + i sin im)
    MpComplex exp() const {
        MpReal m = re.exp();
        return {m * im.cos(), m * im.sin()};
    }
    /// Principal log.
    MpComplex log() const { return {abs().log(), im.atan2(re)}; }
};

/// Exact Bernoulli numbers B_0..B_n (even indices carry the content).
std::vector<mpq_class> bernoulli_numbers(int n);

}  // namespace maassp
