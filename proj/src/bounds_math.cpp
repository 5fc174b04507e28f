#include "wreathpow/bounds_math.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace wreathpow {

namespace {

constexpr mpfr_prec_t kPrec = 128;

Rational mpfr_to_rational(mpfr_t v) {
    if (mpfr_zero_p(v)) return Rational(0);
    mpz_class mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v);
    Rational r(mant);
    return r * Rational::pow2(static_cast<long>(e));
}

mpfr_rnd_t rnd(Round dir) { return dir == Round::Up ? MPFR_RNDU : MPFR_RNDD; }

} // namespace

Rational ln_bracket(long x, Round dir) {
    if (x < 1) throw std::invalid_argument("ln_bracket: x must be >= 1");
    if (x == 1) return Rational(0);
    mpfr_t v;
    mpfr_init2(v, kPrec);
    mpfr_set_si(v, x, MPFR_RNDN); // exact for desk-scale integers
    mpfr_log(v, v, rnd(dir));
    Rational out = mpfr_to_rational(v);
    mpfr_clear(v);
    return out;
}

Rational log_base_bracket(long n, long p, Round dir) {
    if (n < 1 || p < 2) throw std::invalid_argument("log_base_bracket: need n >= 1, p >= 2");
    // exact when n is a power of p (p >= 2 prime in all call sites, so these
    // are the only rational values)
    long e = 0, v = n;
    while (v % p == 0) { v /= p; ++e; }
    if (v == 1) return Rational(e);

    mpfr_t num, den;
    mpfr_init2(num, kPrec);
    mpfr_init2(den, kPrec);
    mpfr_set_si(num, n, MPFR_RNDN);
    mpfr_set_si(den, p, MPFR_RNDN);
    if (dir == Round::Up) {
        mpfr_log(num, num, MPFR_RNDU);
        mpfr_log(den, den, MPFR_RNDD);
        mpfr_div(num, num, den, MPFR_RNDU);
    } else {
        mpfr_log(num, num, MPFR_RNDD);
        mpfr_log(den, den, MPFR_RNDU);
        mpfr_div(num, num, den, MPFR_RNDD);
    }
    Rational out = mpfr_to_rational(num);
    mpfr_clear(num);
    mpfr_clear(den);
    return out;
}

Rational euler_gamma_bracket(Round dir) {
    mpfr_t v;
    mpfr_init2(v, kPrec);
    mpfr_const_euler(v, rnd(dir));
    Rational out = mpfr_to_rational(v);
    mpfr_clear(v);
    return out;
}

} // namespace wreathpow
