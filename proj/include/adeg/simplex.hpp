#pragma once

#include "adeg/rational.hpp"

namespace adeg {

/// Exact-rational LP: minimize c.x subject to A x <= b, x free.
/// Two-phase dense tableau simplex with Bland's anti-cycling rule.
struct SimplexResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Optimal;
    Rat value;            // optimal objective
    std::vector<Rat> x;   // primal solution
    std::vector<Rat> y;   // dual per constraint, y <= 0, with b.y = value
    long pivots = 0;
};

SimplexResult simplex_min(const std::vector<std::vector<Rat>>& A,
                          const std::vector<Rat>& b, const std::vector<Rat>& c);

}  // namespace adeg
