#include <random>

#include "doctest.h"
#include "maassp/continued_fraction.hpp"
#include "maassp/errors.hpp"
#include "maassp/quad_number.hpp"

using namespace maassp;

TEST_CASE("golden ratio times its negated conjugate is one") {
    QuadNumber golden = QuadNumber::golden();                      // (1+sqrt5)/2
    QuadNumber other(5, Rational(-1, 2), Rational(1, 2));          // (-1+sqrt5)/2
    CHECK(golden * other == QuadNumber(1L));
}

TEST_CASE("inverse of 3+2sqrt2 is 3-2sqrt2") {
    QuadNumber x(2, Rational(3), Rational(2));
    CHECK(x.inverse() == x.conj());
    CHECK(x.norm() == Rational(1));
}

TEST_CASE("conjugation of the golden ratio") {
    QuadNumber golden = QuadNumber::golden();
    CHECK(golden.conj() == QuadNumber(5, Rational(1, 2), Rational(-1, 2)));
}

TEST_CASE("canonical form folds square factors of D") {
    QuadNumber x(8, Rational(0), Rational(1));  // sqrt(8) = 2 sqrt(2)
    CHECK(x.d() == 2);
    CHECK(x.b() == Rational(2));
    CHECK(x == QuadNumber(2, Rational(0), Rational(2)));
}

TEST_CASE("mixed fields are rejected, rationals mix freely") {
    QuadNumber r2 = QuadNumber::sqrt_of(2);
    QuadNumber r3 = QuadNumber::sqrt_of(3);
    CHECK_THROWS_AS(r2 + r3, DomainError);
    CHECK(r2 + QuadNumber(Rational(1, 3)) == QuadNumber(2, Rational(1, 3), Rational(1)));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(QuadNumber(0L).inverse(), DomainError);
}

TEST_CASE("floor and comparisons are exact") {
    QuadNumber r2 = QuadNumber::sqrt_of(2);
    CHECK(r2.floor() == 1);
    CHECK((-r2).floor() == -2);
    CHECK(QuadNumber::golden().floor() == 1);
    CHECK(QuadNumber(Rational(7, 2)).floor() == 3);
    CHECK(r2 > QuadNumber(1L));
    CHECK(r2 < QuadNumber(Rational(3, 2)));
}

TEST_CASE("cf expansion of classic values") {
    ContinuedFraction golden = cf_expand(QuadNumber::golden());
    CHECK(golden.preperiod.empty());
    CHECK(golden.period == std::vector<long>{1});

    ContinuedFraction r2 = cf_expand(QuadNumber::sqrt_of(2));
    CHECK(r2.preperiod == std::vector<long>{1});
    CHECK(r2.period == std::vector<long>{2});

    ContinuedFraction r3 = cf_expand(QuadNumber::sqrt_of(3));
    CHECK(r3.preperiod == std::vector<long>{1});
    CHECK(r3.period == std::vector<long>{1, 2});
    CHECK(r3.value() == QuadNumber::sqrt_of(3));
}

TEST_CASE("cf expansion rejects rationals") {
    CHECK_THROWS_AS(cf_expand(QuadNumber(Rational(3, 7))), DomainError);
}

TEST_CASE("cf_to_hyperbolic on sqrt 2") {
    IntMat2 m = cf_to_hyperbolic(cf_expand(QuadNumber::sqrt_of(2)));
    CHECK(m == IntMat2{1, 2, 1, 1});
    CHECK(m.det() == -1);
    IntMat2 sq = m * m;
    CHECK(sq == IntMat2{3, 4, 2, 3});
    CHECK(sq.det() == 1);
    CHECK(m.apply(QuadNumber::sqrt_of(2)) == QuadNumber::sqrt_of(2));
}

TEST_CASE("cf_to_hyperbolic on the golden ratio") {
    IntMat2 m = cf_to_hyperbolic(cf_expand(QuadNumber::golden()));
    CHECK(m == IntMat2{1, 1, 1, 0});
    CHECK(m.det() == -1);
    CHECK((m * m) == IntMat2{2, 1, 1, 1});
    CHECK(m.apply(QuadNumber::golden()) == QuadNumber::golden());
}

TEST_CASE("single-step period product for 1+sqrt2") {
    ContinuedFraction cf;
    cf.period = {2};
    CHECK(cf_to_hyperbolic(cf) == IntMat2{2, 1, 1, 0});
    CHECK(cf.value() == QuadNumber(2, Rational(1), Rational(1)));
}

namespace {

QuadNumber random_quad(std::mt19937& rng) {
    std::uniform_int_distribution<long> dpick(2, 50);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    long d = dpick(rng);
    while (true) {
        long s = static_cast<long>(std::sqrt(static_cast<double>(d)));
        if (s * s != d) break;
        d = dpick(rng);
    }
    long bnum = num(rng);
    if (bnum == 0) bnum = 1;
    return QuadNumber(d, Rational(num(rng), den(rng)), Rational(bnum, den(rng)));
}

}  // namespace

TEST_CASE("round trip value(cf_expand(alpha)) == alpha for 100 random quadratics") {
    std::mt19937 rng(20240901);
    for (int i = 0; i < 100; ++i) {
        QuadNumber alpha = random_quad(rng);
        ContinuedFraction cf = cf_expand(alpha);
        CHECK(cf.value() == alpha);
    }
}

TEST_CASE("hyperbolic matrix fixes alpha exactly") {
    // Corpus built from random small expansions keeps the integer matrices
    // inside fixed width.
    std::mt19937 rng(31415);
    std::uniform_int_distribution<int> len(1, 5), digit(1, 6);
    for (int i = 0; i < 60; ++i) {
        ContinuedFraction cf;
        int np = len(rng), nq = len(rng);
        for (int k = 0; k < np - 1; ++k) cf.preperiod.push_back(digit(rng));
        for (int k = 0; k < nq; ++k) cf.period.push_back(digit(rng));
        QuadNumber alpha = cf.value();
        if (alpha.is_rational()) continue;
        ContinuedFraction expanded = cf_expand(alpha);
        CHECK(expanded.value() == alpha);
        IntMat2 m = cf_to_hyperbolic(expanded);
        CHECK(m.apply(alpha) == alpha);
    }
}

TEST_CASE("field axioms hold exactly") {
    std::mt19937 rng(77);
    for (int i = 0; i < 50; ++i) {
        QuadNumber x = random_quad(rng);
        QuadNumber y = random_quad(rng);
        // Put both in the same field.
        y = QuadNumber(x.d(), y.a(), y.b());
        if (y.is_zero()) continue;
        CHECK((x * y) / y == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
    }
}

TEST_CASE("to_double matches components") {
    QuadNumber x(5, Rational(1, 2), Rational(1, 2));
    CHECK(x.to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-15));
}
