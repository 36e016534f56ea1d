#pragma once

#include "adeg/rational.hpp"

#include <bit>
#include <functional>
#include <optional>
#include <string>

namespace adeg {

// Sign convention used throughout the lower-bound code paths: a coordinate
// value of -1 means logical TRUE, +1 means FALSE. A point is stored as a
// bitmask over its n coordinates; bit i set means coordinate i equals -1.
// Hamming weight |x| counts the -1 entries.
struct CubePoint {
    int n = 0;
    std::uint64_t mask = 0;

    int bit(int i) const { return (mask >> i) & 1 ? -1 : +1; }
    int weight() const { return std::popcount(mask); }

    std::string to_string() const {
        std::string s(n, '+');
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) s[i] = '-';
        return s;
    }

    static CubePoint parse(const std::string& s);

    bool operator==(const CubePoint&) const = default;
};

inline int hamming_weight(std::uint64_t mask) { return std::popcount(mask); }

/// chi_S(x) = prod_{i in S} x_i over {-1,1}; S and x given as bitmasks.
inline int character(std::uint64_t subset, std::uint64_t x) {
    return (std::popcount(subset & x) & 1) ? -1 : +1;
}

/// A (possibly partial) Boolean function on {-1,1}^n. Returns -1/+1 on the
/// domain, nullopt off it. Symmetric functions additionally expose their
/// level profile so level-collapsed algorithms can use them.
struct PartialBoolFn {
    int n = 0;
    std::string label;
    std::function<std::optional<int>(std::uint64_t)> value;
    // For symmetric functions: value at every Hamming level (nullopt = off
    // the promise). Empty if the function is not known to be symmetric.
    std::vector<std::optional<int>> levels;

    std::optional<int> operator()(std::uint64_t x) const { return value(x); }
    bool symmetric() const { return !levels.empty(); }
    bool total() const;
};

// Built-in functions; all use the -1 = TRUE convention.
PartialBoolFn fn_and(int n);                 // -1 iff all coordinates are -1
PartialBoolFn fn_or(int n);                  // -1 iff some coordinate is -1
PartialBoolFn fn_parity(int n);              // -1 iff |x| odd
PartialBoolFn fn_majority(int n);            // -1 iff |x| > n/2
PartialBoolFn fn_threshold(int n, int k);    // -1 iff |x| >= k
PartialBoolFn fn_constant(int n, int v);

/// From a symmetric level profile (entry t = value at Hamming weight t).
PartialBoolFn fn_symmetric(int n, std::vector<std::optional<int>> levels,
                           std::string label);

/// Restriction of f to Hamming weight at most T (off-promise -> undefined).
PartialBoolFn restrict_hamming(const PartialBoolFn& f, int T);

/// Block composition f(g(x_1), ..., g(x_R)) over R blocks of N bits each.
PartialBoolFn compose_blocks(const PartialBoolFn& outer, const PartialBoolFn& inner);

/// GapAND_R^gamma: -1 on the all-TRUE point, +1 when at most gamma*R
/// coordinates are TRUE, undefined between.
PartialBoolFn fn_gap_and(int R, const Rat& gamma);

/// Membership test for the named promise domains.
struct PromiseDomain {
    enum class Kind { FullCube, HammingAtMost, BlockHammingAtMost, GapAndDomain };
    Kind kind = Kind::FullCube;
    int n = 0;       // total dimension
    int T = 0;       // HammingAtMost threshold
    int N = 0, R = 0;  // block parameters
    Rat gamma;       // GapAndDomain parameter

    bool contains(std::uint64_t x) const;

    static PromiseDomain full_cube(int n) { return {Kind::FullCube, n, 0, 0, 0, Rat(0)}; }
    static PromiseDomain hamming_at_most(int n, int T) {
        return {Kind::HammingAtMost, n, T, 0, 0, Rat(0)};
    }
    static PromiseDomain block_hamming_at_most(int N, int R) {
        return {Kind::BlockHammingAtMost, N * R, N, N, R, Rat(0)};
    }
    static PromiseDomain gap_and_domain(const Rat& gamma, int N, int R) {
        return {Kind::GapAndDomain, N * R, 0, N, R, gamma};
    }
};

}  // namespace adeg
