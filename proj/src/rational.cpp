#include "maassp/rational.hpp"

#include <mpfr.h>

#include <stdexcept>

#include "maassp/errors.hpp"

namespace maassp {

long floor_rational(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (!q.fits_slong_p()) throw NumericalError("floor_rational: result does not fit a long");
    return q.get_si();
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw SchemaError("cannot parse rational '" + text + "'");
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) {
    return r.get_str();
}

double quad_value_to_double(const Rational& a, const Rational& b, long d) {
    mpfr_t t, s;
    mpfr_init2(t, 160);
    mpfr_init2(s, 160);
    mpfr_set_si(s, d, MPFR_RNDN);
    mpfr_sqrt(s, s, MPFR_RNDN);
    mpfr_mul_q(s, s, b.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(t, a.get_mpq_t(), MPFR_RNDN);
    mpfr_add(t, t, s, MPFR_RNDN);
    double out = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    mpfr_clear(s);
    return out;
}

}  // namespace maassp
