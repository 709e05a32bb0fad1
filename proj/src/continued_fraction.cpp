#include "maassp/continued_fraction.hpp"

#include <stdexcept>

#include "maassp/errors.hpp"

namespace maassp {

namespace {

long checked_mul(long x, long y) {
    long r;
    if (__builtin_mul_overflow(x, y, &r)) throw NumericalError("IntMat2: entry overflow");
    return r;
}

long checked_add(long x, long y) {
    long r;
    if (__builtin_add_overflow(x, y, &r)) throw NumericalError("IntMat2: entry overflow");
    return r;
}

// Writes n = s^2 * d0 with d0 square-free.  Fast path: the smallest
// divisor with a perfect-square cofactor is the square-free part.
// Fallback: strip small prime squares, then any leftover square factor
// must exceed the strip bound squared, which certifies square-freeness
// of moderate remainders.
std::pair<long, mpz_class> squarefree_part(const mpz_class& n) {
    if (n <= 0) throw DomainError("squarefree_part: positive input required");
    for (unsigned long cand = 1; cand <= 1000; ++cand) {
        if (!mpz_divisible_ui_p(n.get_mpz_t(), cand)) continue;
        mpz_class quot = n / cand;
        if (mpz_perfect_square_p(quot.get_mpz_t())) {
            mpz_class s;
            mpz_sqrt(s.get_mpz_t(), quot.get_mpz_t());
            return {static_cast<long>(cand), s};
        }
    }
    const unsigned long strip_bound = 50000;
    mpz_class rem = n, s = 1;
    for (unsigned long p = 2; p <= strip_bound; ++p) {
        unsigned long p2 = p * p;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p2)) {
            rem /= p2;
            s *= p;
        }
        if (mpz_cmp_ui(rem.get_mpz_t(), p2) < 0) break;
    }
    mpz_class certify_bound = mpz_class(strip_bound) * strip_bound;
    if (rem < certify_bound && rem.fits_slong_p())
        return {rem.get_si(), s};
    for (unsigned long cand = 1; cand <= 1000000; ++cand) {
        if (!mpz_divisible_ui_p(rem.get_mpz_t(), cand)) continue;
        mpz_class quot = rem / cand;
        if (mpz_perfect_square_p(quot.get_mpz_t())) {
            mpz_class rs;
            mpz_sqrt(rs.get_mpz_t(), quot.get_mpz_t());
            return {static_cast<long>(cand), s * rs};
        }
    }
    throw NumericalError("squarefree_part: field discriminant out of supported range");
}

}  // namespace

long IntMat2::det() const {
    return checked_add(checked_mul(a, d), -checked_mul(b, c));
}

IntMat2 IntMat2::operator*(const IntMat2& rhs) const {
    IntMat2 m;
    m.a = checked_add(checked_mul(a, rhs.a), checked_mul(b, rhs.c));
    m.b = checked_add(checked_mul(a, rhs.b), checked_mul(b, rhs.d));
    m.c = checked_add(checked_mul(c, rhs.a), checked_mul(d, rhs.c));
    m.d = checked_add(checked_mul(c, rhs.b), checked_mul(d, rhs.d));
    return m;
}

IntMat2 IntMat2::inverse() const {
    return IntMat2{d, -b, -c, a};
}

QuadNumber IntMat2::apply(const QuadNumber& x) const {
    QuadNumber num = QuadNumber(a) * x + QuadNumber(b);
    QuadNumber den = QuadNumber(c) * x + QuadNumber(d);
    if (den.is_zero()) throw DomainError("IntMat2::apply: pole of the map");
    return num / den;
}

QuadNumber ContinuedFraction::value() const {
    if (period.empty()) throw DomainError("ContinuedFraction: empty period");
    // Fixed point of the period product P: x = (Ax+B)/(Cx+E), taken as the
    // root > 1 (tail values of a regular continued fraction exceed 1).
    // Arbitrary-precision products: long periods overflow fixed width.
    mpz_class pa = 1, pb = 0, pc = 0, pd = 1;
    for (long q : period) {
        mpz_class na = pa * q + pb, nc = pc * q + pd;
        pb = pa;
        pd = pc;
        pa = na;
        pc = nc;
    }
    mpz_class tr = pa + pd;
    mpz_class det = pa * pd - pb * pc;
    mpz_class disc_z = tr * tr - 4 * det;
    auto [d0, s] = squarefree_part(disc_z);
    QuadNumber root(d0, Rational(0), Rational(s));
    QuadNumber twoC(Rational(mpz_class(2 * pc)));
    QuadNumber x = (QuadNumber(Rational(mpz_class(pa - pd))) + root) / twoC;
    if (x <= QuadNumber(1L)) x = (QuadNumber(Rational(mpz_class(pa - pd))) - root) / twoC;
    QuadNumber v = x;
    for (auto it = preperiod.rbegin(); it != preperiod.rend(); ++it)
        v = QuadNumber(*it) + v.inverse();
    return v;
}

ContinuedFraction cf_expand(const QuadNumber& alpha) {
    if (alpha.is_rational()) throw DomainError("cf_expand: rational input has no periodic expansion");
    std::vector<QuadNumber> states;
    std::vector<long> digits;
    QuadNumber x = alpha;
    // Lagrange: the orbit of complete quotients is finite, so exact state
    // repetition terminates and yields the minimal period.
    for (;;) {
        long a = x.floor();
        QuadNumber frac = x - QuadNumber(a);
        QuadNumber next = frac.inverse();
        for (std::size_t j = 0; j < states.size(); ++j) {
            if (states[j] == x) {
                ContinuedFraction cf;
                cf.preperiod.assign(digits.begin(), digits.begin() + static_cast<long>(j));
                cf.period.assign(digits.begin() + static_cast<long>(j), digits.end());
                return cf;
            }
        }
        states.push_back(x);
        digits.push_back(a);
        x = next;
        if (digits.size() > 100000) throw NumericalError("cf_expand: no repetition found");
    }
}

IntMat2 cf_to_hyperbolic(const ContinuedFraction& cf) {
    if (cf.period.empty()) throw DomainError("cf_to_hyperbolic: empty period");
    for (long q : cf.period)
        if (q < 1) throw DomainError("cf_to_hyperbolic: period entries must be positive");
    IntMat2 p;
    for (long q : cf.period) p = p * IntMat2{q, 1, 1, 0};
    IntMat2 w;
    for (long q : cf.preperiod) w = w * IntMat2{q, 1, 1, 0};
    IntMat2 winv = w.inverse();
    if (w.det() == -1) {
        // adj(W) = -W^{-1} projectively; normalize so W * winv = I.
        winv = IntMat2{-winv.a, -winv.b, -winv.c, -winv.d};
    }
    return w * p * winv;
}

}  // namespace maassp
