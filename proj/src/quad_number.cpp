#include "maassp/quad_number.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "maassp/errors.hpp"

namespace maassp {

namespace {

// Splits n = s^2 * d0 with d0 square-free; returns {d0, s}.
std::pair<long, long> squarefree_split(long n) {
    long d0 = n, s = 1;
    for (long p = 2; p * p <= d0; ++p) {
        while (d0 % (p * p) == 0) {
            d0 /= p * p;
            s *= p;
        }
    }
    return {d0, s};
}

}  // namespace

QuadNumber::QuadNumber(long d, const Rational& a, const Rational& b) : d_(d), a_(a), b_(b) {
    if (d <= 0) throw DomainError("QuadNumber: D must be positive");
    a_.canonicalize();
    b_.canonicalize();
    auto [d0, s] = squarefree_split(d);
    d_ = d0;
    if (s != 1) b_ *= s;
    if (d_ == 1) {  // perfect-square D collapses to a rational
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) d_ = 1;
}

QuadNumber QuadNumber::sqrt_of(long n) {
    return QuadNumber(n, Rational(0), Rational(1));
}

QuadNumber QuadNumber::golden() {
    return QuadNumber(5, Rational(1, 2), Rational(1, 2));
}

QuadNumber QuadNumber::conj() const {
    QuadNumber r(*this);
    r.b_ = -r.b_;
    return r;
}

Rational QuadNumber::norm() const {
    return a_ * a_ - Rational(d_) * b_ * b_;
}

QuadNumber QuadNumber::inverse() const {
    if (is_zero()) throw DomainError("QuadNumber: division by zero");
    Rational n = norm();
    // norm vanishes only at zero since D is square-free (> 1) or b = 0.
    QuadNumber r = conj();
    r.a_ /= n;
    r.b_ /= n;
    r.a_.canonicalize();
    r.b_.canonicalize();
    return r;
}

double QuadNumber::to_double() const {
    return quad_value_to_double(a_, b_, d_);
}

long QuadNumber::floor() const {
    if (is_rational()) return floor_rational(a_);
    long n = static_cast<long>(std::floor(to_double()));
    // Exact verification of n <= x < n+1; the double estimate can be off
    // by one ulp at integer boundaries.
    while (compare(*this, QuadNumber(n)) < 0) --n;
    while (compare(*this, QuadNumber(n + 1)) >= 0) ++n;
    return n;
}

int QuadNumber::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with D b^2.
    Rational lhs = a_ * a_;
    Rational rhs = Rational(d_) * b_ * b_;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // impossible for square-free D > 1, possible only via b == 0
    return (c > 0) ? sa : sb;
}

QuadNumber QuadNumber::operator-() const {
    QuadNumber r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

long QuadNumber::common_field(const QuadNumber& x, const QuadNumber& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.is_rational()) return y.d_;
    if (y.is_rational()) return x.d_;
    throw DomainError("QuadNumber: mixed fields Q(sqrt(" + std::to_string(x.d_) +
                      ")) and Q(sqrt(" + std::to_string(y.d_) + "))");
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& rhs) {
    d_ = common_field(*this, rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    if (b_ == 0) d_ = 1;
    return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& rhs) {
    d_ = common_field(*this, rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    if (b_ == 0) d_ = 1;
    return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& rhs) {
    long d = common_field(*this, rhs);
    Rational a = a_ * rhs.a_ + Rational(d) * b_ * rhs.b_;
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    d_ = d;
    a_ = a;
    b_ = b;
    a_.canonicalize();
    b_.canonicalize();
    if (b_ == 0) d_ = 1;
    return *this;
}

QuadNumber& QuadNumber::operator/=(const QuadNumber& rhs) {
    return *this *= rhs.inverse();
}

bool operator==(const QuadNumber& x, const QuadNumber& y) {
    if (x.is_rational() && y.is_rational()) return x.a_ == y.a_;
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

int QuadNumber::compare(const QuadNumber& x, const QuadNumber& y) {
    QuadNumber diff = x;
    diff -= y;
    return diff.sign();
}

QuadNumber QuadNumber::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    QuadNumber base(*this), acc(1L);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string QuadNumber::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadNumber& x) {
    if (x.is_rational()) return os << format_rational(x.a());
    os << format_rational(x.a());
    if (sgn(x.b()) >= 0) os << "+";
    os << format_rational(x.b()) << "*sqrt(" << x.d() << ")";
    return os;
}

}  // namespace maassp
