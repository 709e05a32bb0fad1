#pragma once

#include <gmpxx.h>

#include <string>

namespace maassp {

/// Arbitrary-precision rational, the component type of QuadNumber.
using Rational = mpq_class;

/// Exact floor of a rational.
long floor_rational(const Rational& r);

/// Parse "p/q" or "p" (optional sign) into a canonical rational.
Rational parse_rational(const std::string& text);

/// Format as "p/q" ("p" when the denominator is 1).
std::string format_rational(const Rational& r);

/// Round a+b*sqrt(D) to the nearest double using 160-bit interval-free
/// MPFR arithmetic (error well under 1 ulp).
double quad_value_to_double(const Rational& a, const Rational& b, long d);

}  // namespace maassp
