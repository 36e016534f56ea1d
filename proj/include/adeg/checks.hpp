#pragma once

#include <string>
#include <vector>

namespace adeg {

/// One verified inequality or identity, with exact values rendered as
/// strings. Informative checks report asymptotic claims that exact
/// small-scale runs are not expected to meet; they never gate a verdict.
struct Check {
    std::string name;
    std::string lhs, rhs;
    std::string relation;  // "<=", ">=", "=", "!="
    bool pass = false;
    bool informative = false;
    std::string note;
};

using CheckList = std::vector<Check>;

inline bool all_hard_pass(const CheckList& checks) {
    for (const auto& c : checks)
        if (!c.informative && !c.pass) return false;
    return true;
}

inline void append(CheckList& into, const CheckList& from) {
    into.insert(into.end(), from.begin(), from.end());
}

}  // namespace adeg
