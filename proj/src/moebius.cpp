#include "maassp/moebius.hpp"

#include <cmath>

#include "maassp/errors.hpp"

namespace maassp {

MoebiusMap::MoebiusMap() : e_{QuadNumber(1L), QuadNumber(0L), QuadNumber(0L), QuadNumber(1L)}, det_(1L) {
    refresh();
}

MoebiusMap::MoebiusMap(QuadNumber a, QuadNumber b, QuadNumber c, QuadNumber d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    det_ = e_[0] * e_[3] - e_[1] * e_[2];
    if (det_.sign() <= 0)
        throw DomainError("MoebiusMap: determinant must be positive for geometry operations");
    refresh();
}

MoebiusMap::MoebiusMap(const IntMat2& m)
    : MoebiusMap(QuadNumber(m.a), QuadNumber(m.b), QuadNumber(m.c), QuadNumber(m.d)) {}

void MoebiusMap::refresh() {
    for (int i = 0; i < 4; ++i) fe_[i] = e_[i].to_double();
}

std::complex<double> MoebiusMap::operator()(std::complex<double> z) const {
    std::complex<double> num = fe_[0] * z + fe_[1];
    std::complex<double> den = fe_[2] * z + fe_[3];
    return num / den;
}

BoundaryPoint MoebiusMap::apply_boundary(const BoundaryPoint& x) const {
    if (!x.has_value()) {
        if (e_[2].is_zero()) return kInfinity;
        return e_[0] / e_[2];
    }
    QuadNumber den = e_[2] * (*x) + e_[3];
    if (den.is_zero()) return kInfinity;
    return (e_[0] * (*x) + e_[1]) / den;
}

MoebiusMap MoebiusMap::inverse() const {
    // Adjugate; same positive determinant projectively.
    return MoebiusMap(e_[3], -e_[1], -e_[2], e_[0]);
}

MoebiusMap MoebiusMap::operator*(const MoebiusMap& rhs) const {
    return MoebiusMap(e_[0] * rhs.e_[0] + e_[1] * rhs.e_[2], e_[0] * rhs.e_[1] + e_[1] * rhs.e_[3],
                      e_[2] * rhs.e_[0] + e_[3] * rhs.e_[2], e_[2] * rhs.e_[1] + e_[3] * rhs.e_[3]);
}

double MoebiusMap::denom_sq(std::complex<double> z) const {
    return std::norm(fe_[2] * z + fe_[3]);
}

double hyperbolic_distance(std::complex<double> z, std::complex<double> w) {
    double num = std::norm(z - w);
    double t = 1.0 + num / (2.0 * z.imag() * w.imag());
    return std::acosh(t);
}

}  // namespace maassp
