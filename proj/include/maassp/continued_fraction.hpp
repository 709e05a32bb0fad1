#pragma once

#include <array>
#include <vector>

#include "maassp/quad_number.hpp"

namespace maassp {

/// 2x2 integer matrix acting as a Moebius map; used for continued-fraction
/// convergents, reduction words and hyperbolic elements.
struct IntMat2 {
    long a = 1, b = 0, c = 0, d = 1;

    long det() const;
    long trace() const { return a + d; }
    IntMat2 operator*(const IntMat2& rhs) const;
    /// Projective inverse (adjugate); for det = ±1 this is the exact inverse.
    IntMat2 inverse() const;
    bool operator==(const IntMat2& rhs) const = default;

    /// Exact fractional-linear action on a quadratic number.
    QuadNumber apply(const QuadNumber& x) const;
};

/// Eventually periodic continued fraction of a real quadratic irrational.
/// `period` is the minimal repeating block (entries >= 1); the leading
/// preperiod entry may be any integer, later ones are >= 1.
struct ContinuedFraction {
    std::vector<long> preperiod;
    std::vector<long> period;

    /// Exact value reconstructed from the expansion.
    QuadNumber value() const;
};

/// Exact continued-fraction expansion with minimal period, found by
/// state repetition on exact field elements.  Throws DomainError for
/// rational input.
ContinuedFraction cf_expand(const QuadNumber& alpha);

/// M = W * P * W^{-1} where P is the period product of [[a_i,1],[1,0]]
/// and W the preperiod word.  M fixes value(cf); det(M) is +1 or -1
/// according to the period length parity.
IntMat2 cf_to_hyperbolic(const ContinuedFraction& cf);

}  // namespace maassp
