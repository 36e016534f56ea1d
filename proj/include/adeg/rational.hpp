#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace adeg {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Raised when an exact enumeration would exceed the configured budget;
/// callers may retry with a bound-only or collapsed mode.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline int sgn(const Rat& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
    return Rat(int_pow(num(base), e), int_pow(den(base), e));
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

/// Integer floor of sqrt(x), x >= 0.
inline Int isqrt(const Int& x) {
    if (x < 0) throw std::domain_error("isqrt of negative");
    return boost::multiprecision::sqrt(x);
}

/// Smallest integer m with m >= sqrt(q), for rational q >= 0.
inline Int ceil_sqrt(const Rat& q) {
    if (q < 0) throw std::domain_error("ceil_sqrt of negative");
    if (q == 0) return 0;
    // m = ceil(sqrt(p/d)): binary-search-free via isqrt bounds.
    Int p = num(q), d = den(q);
    Int m = isqrt(p / d);  // floor sqrt of the floor, a lower bound - 0/+1
    while (m * m * d < p) ++m;
    return m;
}

/// Largest integer m with m <= sqrt(q), for rational q >= 0.
inline Int floor_sqrt(const Rat& q) {
    if (q < 0) throw std::domain_error("floor_sqrt of negative");
    Int m = ceil_sqrt(q);
    while (m > 0 && m * m * den(q) > num(q)) --m;
    return m;
}

inline Int rat_ceil(const Rat& q) {
    Int n = num(q), d = den(q);
    Int f = n / d;  // truncation toward zero
    if (f * d < n) ++f;
    return f;
}

inline Int rat_floor(const Rat& q) {
    Int n = num(q), d = den(q);
    Int f = n / d;
    if (f * d > n) --f;
    return f;
}

/// Parses "a", "a/b", or "-a/b" into an exact rational.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::string to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline long to_long(const Int& x) { return x.convert_to<long>(); }

}  // namespace adeg
