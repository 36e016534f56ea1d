#pragma once

#include "adeg/rational.hpp"

namespace adeg {

/// Closed rational interval [lo, hi] certified to contain a real value.
struct RatInterval {
    Rat lo, hi;

    Rat width() const { return hi - lo; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }

    /// Scale by an exact rational (sign-aware).
    RatInterval scaled(const Rat& c) const {
        if (c >= 0) return {c * lo, c * hi};
        return {c * hi, c * lo};
    }

    /// The whole interval lies strictly below q / at most q.
    bool certainly_lt(const Rat& q) const { return hi < q; }
    bool certainly_le(const Rat& q) const { return hi <= q; }
    bool certainly_gt(const Rat& q) const { return lo > q; }
    bool certainly_ge(const Rat& q) const { return lo >= q; }
};

/// Certified enclosures of transcendental values, computed with directed
/// rounding at `prec` bits and returned as exact rational endpoints.
RatInterval exp_enclosure(const Rat& x, unsigned prec = 128);
RatInterval log2_enclosure(const Rat& x, unsigned prec = 128);   // x > 0
RatInterval log_enclosure(const Rat& x, unsigned prec = 128);    // natural log, x > 0
RatInterval sqrt_enclosure(const Rat& x, unsigned prec = 128);   // x >= 0
RatInterval root_enclosure(const Rat& x, unsigned k, unsigned prec = 128);  // x^(1/k), x >= 0

/// Enclosure of Shannon entropy H(p) = sum p_i log2(1/p_i) of an exact
/// rational probability vector; zero entries contribute zero.
RatInterval entropy_enclosure(const std::vector<Rat>& p, unsigned prec = 128);

/// Binary entropy H(x) = -x log2 x - (1-x) log2(1-x) for rational x in [0,1].
RatInterval binary_entropy_enclosure(const Rat& x, unsigned prec = 128);

}  // namespace adeg
