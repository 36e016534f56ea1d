#include "adeg/enclosure.hpp"

#include <mpfr.h>

namespace adeg {

namespace {

// Exact conversion: every finite mpfr value is a dyadic rational.
Rat mpfr_to_rat(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return Rat(0);
    mpz_t m;
    mpz_init(m);
    mpfr_exp_t e = mpfr_get_z_2exp(m, x);
    Int mant(m);
    mpz_clear(m);
    Rat r(mant);
    if (e >= 0) {
        r *= Rat(int_pow(Int(2), static_cast<unsigned>(e)));
    } else {
        r /= Rat(int_pow(Int(2), static_cast<unsigned>(-e)));
    }
    return r;
}

void set_from_rat(mpfr_ptr x, const Rat& q, mpfr_rnd_t rnd) {
    mpfr_set_q(x, q.backend().data(), rnd);
}

// Applies a unary mpfr function with both rounding directions. The argument
// itself is rounded outward first, using the function's monotonicity on the
// relevant domain (exp and log2 are both increasing).
RatInterval monotone_enclosure(const Rat& x, unsigned prec,
                               int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    mpfr_t lo, hi, out;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_init2(out, prec);
    set_from_rat(lo, x, MPFR_RNDD);
    set_from_rat(hi, x, MPFR_RNDU);
    fn(out, lo, MPFR_RNDD);
    Rat rlo = mpfr_to_rat(out);
    fn(out, hi, MPFR_RNDU);
    Rat rhi = mpfr_to_rat(out);
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(out);
    return {rlo, rhi};
}

}  // namespace

RatInterval exp_enclosure(const Rat& x, unsigned prec) {
    return monotone_enclosure(x, prec, mpfr_exp);
}

RatInterval log2_enclosure(const Rat& x, unsigned prec) {
    if (x <= 0) throw std::domain_error("log2_enclosure: nonpositive argument");
    return monotone_enclosure(x, prec, mpfr_log2);
}

RatInterval log_enclosure(const Rat& x, unsigned prec) {
    if (x <= 0) throw std::domain_error("log_enclosure: nonpositive argument");
    return monotone_enclosure(x, prec, mpfr_log);
}

RatInterval sqrt_enclosure(const Rat& x, unsigned prec) {
    if (x < 0) throw std::domain_error("sqrt_enclosure: negative argument");
    return monotone_enclosure(x, prec, mpfr_sqrt);
}

RatInterval root_enclosure(const Rat& x, unsigned k, unsigned prec) {
    if (x < 0) throw std::domain_error("root_enclosure: negative argument");
    if (k == 0) throw std::domain_error("root_enclosure: zeroth root");
    mpfr_t lo, hi, out;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_init2(out, prec);
    set_from_rat(lo, x, MPFR_RNDD);
    set_from_rat(hi, x, MPFR_RNDU);
    mpfr_rootn_ui(out, lo, k, MPFR_RNDD);
    Rat rlo = mpfr_to_rat(out);
    mpfr_rootn_ui(out, hi, k, MPFR_RNDU);
    Rat rhi = mpfr_to_rat(out);
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(out);
    return {rlo, rhi};
}

RatInterval entropy_enclosure(const std::vector<Rat>& p, unsigned prec) {
    RatInterval h{0, 0};
    for (const Rat& pi : p) {
        if (pi < 0) throw std::domain_error("entropy_enclosure: negative probability");
        if (pi == 0) continue;
        // p_i * log2(1/p_i) = -p_i * log2(p_i)
        h = h + log2_enclosure(pi, prec).scaled(-pi);
    }
    return h;
}

RatInterval binary_entropy_enclosure(const Rat& x, unsigned prec) {
    if (x < 0 || x > 1) throw std::domain_error("binary_entropy_enclosure: argument outside [0,1]");
    return entropy_enclosure({x, 1 - x}, prec);
}

}  // namespace adeg
