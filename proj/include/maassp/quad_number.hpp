#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "maassp/rational.hpp"

namespace maassp {

/// Exact element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)).
///
/// D is kept square-free (square factors are folded into b at
/// construction) and the components are arbitrary-precision rationals in
/// lowest terms, so equality is literal equality of the canonical form.
/// Rationals are represented with b = 0 and D = 1 and may combine with
/// any field; mixing two distinct irrational fields throws DomainError.
class QuadNumber {
public:
    QuadNumber() : d_(1), a_(0), b_(0) {}
    QuadNumber(long value) : d_(1), a_(value), b_(0) {}
    QuadNumber(const Rational& value) : d_(1), a_(value), b_(0) {}
    QuadNumber(long d, const Rational& a, const Rational& b);

    /// sqrt(n) for a positive integer n (exact, canonicalized).
    static QuadNumber sqrt_of(long n);
    /// The golden ratio (1+sqrt(5))/2.
    static QuadNumber golden();

    long d() const { return d_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Galois conjugate a - b*sqrt(D).
    QuadNumber conj() const;
    /// Field norm a^2 - D b^2 (a rational).
    Rational norm() const;
    /// Multiplicative inverse; throws DomainError on zero.
    QuadNumber inverse() const;

    double to_double() const;
    long floor() const;

    /// Sign of the real value: -1, 0, +1 (exact).
    int sign() const;

    QuadNumber operator-() const;
    QuadNumber& operator+=(const QuadNumber& rhs);
    QuadNumber& operator-=(const QuadNumber& rhs);
    QuadNumber& operator*=(const QuadNumber& rhs);
    QuadNumber& operator/=(const QuadNumber& rhs);

    friend QuadNumber operator+(QuadNumber lhs, const QuadNumber& rhs) { return lhs += rhs; }
    friend QuadNumber operator-(QuadNumber lhs, const QuadNumber& rhs) { return lhs -= rhs; }
    friend QuadNumber operator*(QuadNumber lhs, const QuadNumber& rhs) { return lhs *= rhs; }
    friend QuadNumber operator/(QuadNumber lhs, const QuadNumber& rhs) { return lhs /= rhs; }

    friend bool operator==(const QuadNumber& x, const QuadNumber& y);
    friend bool operator!=(const QuadNumber& x, const QuadNumber& y) { return !(x == y); }
    friend bool operator<(const QuadNumber& x, const QuadNumber& y) { return compare(x, y) < 0; }
    friend bool operator>(const QuadNumber& x, const QuadNumber& y) { return compare(x, y) > 0; }
    friend bool operator<=(const QuadNumber& x, const QuadNumber& y) { return compare(x, y) <= 0; }
    friend bool operator>=(const QuadNumber& x, const QuadNumber& y) { return compare(x, y) >= 0; }

    /// Exact three-way comparison of real values.
    static int compare(const QuadNumber& x, const QuadNumber& y);

    /// Integer power (n may be negative for units and other invertibles).
    QuadNumber pow(long n) const;

    std::string str() const;

private:
    // Fields must agree after canonicalization; rationals adopt the other
    // operand's field on the fly.
    static long common_field(const QuadNumber& x, const QuadNumber& y);

    long d_;       // square-free, 1 for rationals
    Rational a_;
    Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadNumber& x);

}  // namespace maassp
