#include "maassp/geodesic.hpp"

#include <cmath>

#include "maassp/errors.hpp"

namespace maassp {

namespace {

// Multiplier of a det +1 hyperbolic integer matrix as an exact field
// element: q = mu^2 with mu = (tr + sqrt(tr^2-4))/2 the dominant
// eigenvalue.  tr^2 - 4 lies in the same square class as the field
// discriminant of the fixed points.
QuadNumber multiplier(const IntMat2& m) {
    long tr = m.trace();
    if (tr < 0) tr = -tr;
    if (tr <= 2) throw DomainError("multiplier: matrix is not hyperbolic");
    long disc = tr * tr - 4;
    QuadNumber mu = (QuadNumber(tr) + QuadNumber::sqrt_of(disc)) / QuadNumber(2L);
    return mu * mu;
}

// |gamma'(x)| < 1 at the fixed point x, tested exactly: (c x + d)^2 > 1.
bool attracts(const IntMat2& m, const QuadNumber& x) {
    QuadNumber den = QuadNumber(m.c) * x + QuadNumber(m.d);
    return (den * den) > QuadNumber(1L);
}

}  // namespace

ClosedGeodesic build_closed_geodesic(const QuadNumber& input) {
    if (input.is_rational()) throw DomainError("build_closed_geodesic: rational endpoint");
    QuadNumber alpha = input;
    QuadNumber bar = input.conj();
    if (alpha < bar) std::swap(alpha, bar);

    ContinuedFraction cf = cf_expand(alpha);
    IntMat2 m = cf_to_hyperbolic(cf);
    if (m.det() == -1) m = m * m;  // land in PSL(2,Z)
    if (m.det() != 1) throw NumericalError("build_closed_geodesic: unexpected determinant");
    if (m.apply(alpha) != alpha) throw NumericalError("build_closed_geodesic: matrix does not fix alpha");
    if (!attracts(m, alpha)) m = m.inverse();
    if (!attracts(m, alpha)) throw NumericalError("build_closed_geodesic: no attracting orientation");

    ClosedGeodesic geo;
    geo.alpha = alpha;
    geo.alpha_bar = bar;
    geo.gamma = m;
    geo.q = multiplier(m);
    geo.length = std::log(geo.q.to_double());
    geo.g = MoebiusMap(QuadNumber(1L), -bar, QuadNumber(-1L), alpha);
    geo.beta_prime = QuadNumber(-1L);
    geo.v0 = alpha - bar;
    return geo;
}

GeodesicFrame LimitingGeodesic::frame() const {
    GeodesicFrame f;
    f.v0 = closed.v0;
    if (!to_alpha_bar) {
        f.g = closed.g;
        f.gamma = closed.gamma;
        f.beta_prime = closed.beta_prime;
    } else {
        // Swap endpoint roles: send (alphaBar, alpha) -> (infinity, 0).
        f.g = MoebiusMap(QuadNumber(1L), -closed.alpha, QuadNumber(1L), -closed.alpha_bar);
        f.gamma = closed.gamma.inverse();
        f.beta_prime = QuadNumber(1L);
    }
    return f;
}

LimitingGeodesic build_limiting_geodesic(const QuadNumber& endpoint) {
    LimitingGeodesic geo;
    geo.closed = build_closed_geodesic(endpoint);
    geo.to_alpha_bar = (endpoint == geo.closed.alpha_bar);
    return geo;
}

GeodesicPoint geodesic_point(const LimitingGeodesic& geo, double t) {
    return geodesic_point(geo, t, geo.closed.v0.to_double());
}

GeodesicPoint geodesic_point(const LimitingGeodesic& geo, double t, double v1) {
    if (!(v1 > 0)) throw DomainError("geodesic_point: v1 must be positive");
    const ClosedGeodesic& c = geo.closed;
    GeodesicFrame f = geo.frame();
    const double L = c.length;
    const double ln_v0 = std::log(c.v0.to_double());
    const double ln_v1 = std::log(v1);

    // On the line the conjugated coordinate is beta' + i v0 e^t; winding
    // count m brings v = v0 e^t q^{-m} into [v1, q v1).
    double u = t + ln_v0 - ln_v1;
    long m = static_cast<long>(std::floor(u / L));
    double ln_v = u - static_cast<double>(m) * L + ln_v1;
    // Nudge across boundaries lost to rounding.
    if (ln_v < ln_v1) {
        --m;
        ln_v += L;
    } else if (ln_v >= ln_v1 + L) {
        ++m;
        ln_v -= L;
    }

    GeodesicPoint p;
    p.m = m;
    p.v = std::exp(ln_v);
    p.re_exact = f.beta_prime * c.q_pow(-m);
    double re = p.re_exact.to_double();
    p.w = {re, p.v};
    p.log_identity_residual = std::abs(ln_v + static_cast<double>(m) * L - t - ln_v0);

    // z = g^{-1}(w); the real part of w is exact, so the components stay
    // full precision even for t deep along the winding.
    MoebiusMap ginv = f.g.inverse();
    p.z = ginv(p.w);
    return p;
}

double distance_to_axis(const GeodesicPoint& p) {
    double x = std::abs(p.re_exact.to_double());
    return std::asinh(x / p.v);
}

}  // namespace maassp
