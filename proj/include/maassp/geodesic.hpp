#pragma once

#include <complex>

#include "maassp/moebius.hpp"

namespace maassp {

/// The closed geodesic on the modular surface attached to a real
/// quadratic irrational: the projection of the axis of the primitive
/// hyperbolic element fixing the endpoint pair.
///
/// Canonical frame: alpha > alphaBar, gamma has det +1 with alpha
/// attracting, and g = [[1,-alphaBar],[-1,alpha]] sends (alpha, alphaBar)
/// to (infinity, 0) so that g gamma g^{-1} = (z -> q z) with q > 1.
struct ClosedGeodesic {
    QuadNumber alpha;
    QuadNumber alpha_bar;
    IntMat2 gamma;       // det +1, primitive, attracting fixed point alpha
    QuadNumber q;        // projective multiplier, > 1, unit norm
    double length = 0;   // L = ln q
    MoebiusMap g;        // canonical conjugator
    QuadNumber beta_prime;  // g(infinity) = -1
    QuadNumber v0;       // alpha - alphaBar > 0

    /// Exact q^{-m} (q has norm 1, so this is conj(q)^m).
    QuadNumber q_pow(long m) const { return q.pow(m); }
};

/// Builds the canonical closed geodesic for any real quadratic
/// irrational (either root of its minimal polynomial may be passed).
ClosedGeodesic build_closed_geodesic(const QuadNumber& alpha);

/// Conjugation frame for a limiting geodesic running from the cusp to
/// one chosen endpoint of the closed geodesic.  For the endpoint
/// max(alpha, alphaBar) this is the canonical frame (beta' = -1); for
/// the conjugate endpoint the roles flip and beta' = +1.
struct GeodesicFrame {
    MoebiusMap g;            // sends (target, other endpoint) -> (infinity, 0)
    IntMat2 gamma;           // attracts the target; g gamma g^{-1} = (z -> qz)
    QuadNumber beta_prime;   // g(infinity), +1 or -1
    QuadNumber v0;           // alpha - alphaBar (> 0, shared by both frames)
};

/// The vertical geodesic from the cusp at infinity down to `target`,
/// winding onto the closed geodesic.  Basepoint target + i at t = 0,
/// unit speed, t -> +infinity approaches the target.
struct LimitingGeodesic {
    ClosedGeodesic closed;
    bool to_alpha_bar = false;  // false: winds toward alpha; true: toward alphaBar

    QuadNumber target() const { return to_alpha_bar ? closed.alpha_bar : closed.alpha; }
    GeodesicFrame frame() const;
};

LimitingGeodesic build_limiting_geodesic(const QuadNumber& endpoint);

/// Point of the limiting geodesic at geodesic time t, in reduced
/// conjugated coordinates: w = beta' q^{-m} + i v with v in [v1, q v1),
/// where m counts windings.  The real part is exact; z is the
/// corresponding upper-half-plane representative g^{-1}(w), Gamma
/// equivalent to target + i e^{-t}.
struct GeodesicPoint {
    long m = 0;
    double v = 0;
    QuadNumber re_exact;        // beta' * q^{-m}
    std::complex<double> w;     // reduced conjugated coordinate
    std::complex<double> z;     // upper-half-plane representative
    double log_identity_residual = 0;  // |ln v + m L - t - ln v0|, exactness check
};

/// v1 defaults to v0 (then t = 0 gives m = 0, v = v0).
GeodesicPoint geodesic_point(const LimitingGeodesic& geo, double t);
GeodesicPoint geodesic_point(const LimitingGeodesic& geo, double t, double v1);

/// Hyperbolic distance from the geodesic point to the closed-geodesic
/// axis (exactly arcsinh(q^{-m} / v) in conjugated coordinates).
double distance_to_axis(const GeodesicPoint& p);

}  // namespace maassp
