#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "maassp/errors.hpp"
#include "maassp/fundamental_domain.hpp"
#include "maassp/geodesic.hpp"
#include "maassp/moebius.hpp"

using namespace maassp;
using cdouble = std::complex<double>;

TEST_CASE("moebius basics") {
    MoebiusMap inv(QuadNumber(0L), QuadNumber(-1L), QuadNumber(1L), QuadNumber(0L));
    cdouble i{0.0, 1.0};
    CHECK(std::abs(inv(i) - i) < 1e-15);

    MoebiusMap shift(QuadNumber(1L), QuadNumber(1L), QuadNumber(0L), QuadNumber(1L));
    CHECK(std::abs(shift(cdouble{0.5, 2.0}) - cdouble{1.5, 2.0}) < 1e-15);
}

TEST_CASE("canonical conjugator maps the endpoints as designed") {
    ClosedGeodesic geo = build_closed_geodesic(QuadNumber::sqrt_of(2));
    CHECK(!geo.g.apply_boundary(geo.alpha).has_value());          // alpha -> infinity
    CHECK(*geo.g.apply_boundary(geo.alpha_bar) == QuadNumber(0L));  // alphaBar -> 0
    CHECK(*geo.g.apply_boundary(kInfinity) == QuadNumber(-1L));     // infinity -> -1
}

TEST_CASE("reduction examples") {
    ReducedPoint r = reduce_to_fundamental_domain({0.3, 0.4});
    CHECK(r.z.real() == doctest::Approx(-0.2).epsilon(1e-12));
    CHECK(r.z.imag() == doctest::Approx(1.6).epsilon(1e-12));
    // M = T o S
    CHECK(r.map == IntMat2{1, 1, 0, 1} * IntMat2{0, -1, 1, 0});

    ReducedPoint high = reduce_to_fundamental_domain({0.1, 5.0});
    CHECK(high.z == cdouble{0.1, 5.0});
    CHECK(high.map == IntMat2{});

    ReducedPoint a = reduce_to_fundamental_domain({0.273, 0.41});
    ReducedPoint b = reduce_to_fundamental_domain({1.273, 0.41});
    CHECK(std::abs(a.z - b.z) < 1e-12);
}

TEST_CASE("reduction is idempotent") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.05, 2.0);
    for (int i = 0; i < 50; ++i) {
        ReducedPoint r = reduce_to_fundamental_domain({ux(rng), uy(rng)});
        CHECK(std::abs(r.z.real()) <= 0.5 + 1e-12);
        CHECK(std::norm(r.z) >= 1.0 - 1e-12);
        ReducedPoint again = reduce_to_fundamental_domain(r.z);
        CHECK(again.map == IntMat2{});
    }
}

TEST_CASE("reduction rejects lower half plane") {
    CHECK_THROWS_AS(reduce_to_fundamental_domain({0.0, -1.0}), DomainError);
}

TEST_CASE("golden closed geodesic data") {
    ClosedGeodesic geo = build_closed_geodesic(QuadNumber::golden());
    CHECK(geo.gamma == IntMat2{2, 1, 1, 1});
    CHECK(geo.q == QuadNumber(5, Rational(7, 2), Rational(3, 2)));
    CHECK(geo.length == doctest::Approx(2.0 * std::acosh(1.5)).epsilon(1e-12));
    CHECK(geo.length == doctest::Approx(1.9248473002).epsilon(1e-9));
    CHECK(geo.v0 == QuadNumber::sqrt_of(5));
}

TEST_CASE("sqrt2 closed geodesic data") {
    ClosedGeodesic geo = build_closed_geodesic(QuadNumber::sqrt_of(2));
    CHECK(geo.gamma == IntMat2{3, 4, 2, 3});
    CHECK(geo.q == QuadNumber(2, Rational(17), Rational(12)));
    CHECK(geo.length == doctest::Approx(2.0 * std::log(3.0 + 2.0 * std::sqrt(2.0))).epsilon(1e-12));
    CHECK(geo.length == doctest::Approx(3.5254943480).epsilon(1e-9));
}

TEST_CASE("building from either root gives the same canonical geodesic") {
    ClosedGeodesic a = build_closed_geodesic(QuadNumber::golden());
    ClosedGeodesic b = build_closed_geodesic(QuadNumber::golden().conj());
    CHECK(a.alpha == b.alpha);
    CHECK(a.gamma == b.gamma);
    CHECK(a.q == b.q);
}

TEST_CASE("conjugation identity g gamma g^{-1} = multiplication by q") {
    for (QuadNumber alpha : {QuadNumber::golden(), QuadNumber::sqrt_of(2), QuadNumber::sqrt_of(3)}) {
        ClosedGeodesic geo = build_closed_geodesic(alpha);
        double q = geo.q.to_double();
        MoebiusMap conj = geo.g * MoebiusMap(geo.gamma) * geo.g.inverse();
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> uv(0.1, 10.0);
        for (int i = 0; i < 100; ++i) {
            double v = uv(rng);
            cdouble image = conj(cdouble{0.0, v});
            CHECK(std::abs(image - cdouble{0.0, q * v}) < 1e-12 * q * v);
        }
    }
}

TEST_CASE("frame for the conjugate endpoint") {
    LimitingGeodesic lim = build_limiting_geodesic(QuadNumber::golden().conj());
    CHECK(lim.to_alpha_bar);
    GeodesicFrame f = lim.frame();
    CHECK(f.beta_prime == QuadNumber(1L));
    CHECK(!f.g.apply_boundary(lim.closed.alpha_bar).has_value());
    CHECK(*f.g.apply_boundary(lim.closed.alpha) == QuadNumber(0L));
    // Same multiplier for the reversed traversal.
    double q = lim.closed.q.to_double();
    MoebiusMap conj = f.g * MoebiusMap(f.gamma) * f.g.inverse();
    cdouble image = conj(cdouble{0.0, 1.0});
    CHECK(std::abs(image - cdouble{0.0, q}) < 1e-10 * q);
}

TEST_CASE("isometry for random words in PSL(2,Z)") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_real_distribution<double> ux(-0.4, 0.4), uy(0.7, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        IntMat2 m;
        for (int k = 0; k < 20; ++k) {
            int c = coin(rng);
            if (c == 0)
                m = m * IntMat2{1, 1, 0, 1};
            else if (c == 1)
                m = m * IntMat2{1, -1, 0, 1};
            else
                m = m * IntMat2{0, -1, 1, 0};
        }
        MoebiusMap map = (m.det() == 1) ? MoebiusMap(m)
                                        : MoebiusMap(m * IntMat2{0, -1, 1, 0});
        cdouble z{ux(rng), uy(rng)}, w{ux(rng), uy(rng)};
        double before = hyperbolic_distance(z, w);
        double after = hyperbolic_distance(map(z), map(w));
        CHECK(std::abs(before - after) < 1e-12 * (1.0 + before));
    }
}

TEST_CASE("geodesic point basics") {
    LimitingGeodesic lim = build_limiting_geodesic(QuadNumber::golden());
    GeodesicPoint p0 = geodesic_point(lim, 0.0);
    CHECK(p0.m == 0);
    CHECK(p0.re_exact == QuadNumber(-1L));
    CHECK(p0.v == doctest::Approx(lim.closed.v0.to_double()).epsilon(1e-14));
    // z at t=0 is the basepoint alpha + i.
    CHECK(std::abs(p0.z - cdouble{lim.closed.alpha.to_double(), 1.0}) < 1e-12);

    double L = lim.closed.length;
    GeodesicPoint p1 = geodesic_point(lim, 7.31);
    GeodesicPoint p2 = geodesic_point(lim, 7.31 + L);
    CHECK(p2.m == p1.m + 1);
    CHECK(p1.v == doctest::Approx(p2.v).epsilon(1e-12));
}

TEST_CASE("deep geodesic point keeps full precision") {
    LimitingGeodesic lim = build_limiting_geodesic(QuadNumber::golden());
    const double t = 200.0;
    GeodesicPoint p = geodesic_point(lim, t);
    double L = lim.closed.length;
    double v0 = lim.closed.v0.to_double();
    double v1 = v0;
    long expected_m = static_cast<long>(std::floor((t + std::log(v0) - std::log(v1)) / L));
    CHECK(p.m == expected_m);
    CHECK(p.v >= v1 * (1.0 - 1e-12));
    CHECK(p.v < lim.closed.q.to_double() * v1 * (1.0 + 1e-12));
    CHECK(p.log_identity_residual < 1e-12);
    CHECK(p.z.imag() > 0.0);
}

TEST_CASE("distance to the axis decays by one period") {
    LimitingGeodesic lim = build_limiting_geodesic(QuadNumber::sqrt_of(3));
    double L = lim.closed.length;
    for (double t : {0.0, 1.0, 2.5, 10.0, 40.0}) {
        double d1 = distance_to_axis(geodesic_point(lim, t));
        double d2 = distance_to_axis(geodesic_point(lim, t + L));
        CHECK(d2 < d1);
    }
}
