#pragma once

#include <array>
#include <complex>
#include <optional>

#include "maassp/continued_fraction.hpp"
#include "maassp/quad_number.hpp"

namespace maassp {

/// A boundary point of the upper half plane: a quadratic number or the
/// cusp at infinity (nullopt).
using BoundaryPoint = std::optional<QuadNumber>;

inline constexpr std::nullopt_t kInfinity = std::nullopt;

/// Fractional-linear map z -> (az+b)/(cz+d) on the upper half plane.
///
/// Entries are stored exactly (QuadNumbers) with a cached double image for
/// fast application to floating points.  Geometry operations require
/// det > 0 (orientation preserving); construction rejects det <= 0.
class MoebiusMap {
public:
    MoebiusMap();  // identity
    MoebiusMap(QuadNumber a, QuadNumber b, QuadNumber c, QuadNumber d);
    explicit MoebiusMap(const IntMat2& m);

    const QuadNumber& a() const { return e_[0]; }
    const QuadNumber& b() const { return e_[1]; }
    const QuadNumber& c() const { return e_[2]; }
    const QuadNumber& d() const { return e_[3]; }
    const QuadNumber& det() const { return det_; }

    /// Action on a point of H (or of the boundary line as a real double).
    std::complex<double> operator()(std::complex<double> z) const;

    /// Exact action on a boundary point; poles map to infinity.
    BoundaryPoint apply_boundary(const BoundaryPoint& x) const;

    MoebiusMap inverse() const;
    MoebiusMap operator*(const MoebiusMap& rhs) const;  // composition

    /// |cz + d|^2, the conformal denominator (Im(Mz) = det * Im z / this).
    double denom_sq(std::complex<double> z) const;

private:
    std::array<QuadNumber, 4> e_;
    std::array<double, 4> fe_;
    QuadNumber det_;
    void refresh();
};

/// Hyperbolic distance on the upper half plane.
double hyperbolic_distance(std::complex<double> z, std::complex<double> w);

}  // namespace maassp
