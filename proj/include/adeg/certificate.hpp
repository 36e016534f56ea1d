#pragma once

#include "adeg/checks.hpp"
#include "adeg/dual.hpp"
#include "adeg/list_input.hpp"
#include "adeg/poly.hpp"
#include "adeg/witness.hpp"

#include <json.hpp>

namespace adeg {

using json = nlohmann::json;

/// Budgets and precision knobs; the defaults reproduce the acceptance suite
/// deterministically. Environment variables ADEG_BUDGET_INPUTS,
/// ADEG_BUDGET_SUBSETS and ADEG_PREC_BITS override.
struct RunConfig {
    Int input_budget = 1000000;   // R^N enumeration cap
    Int subset_budget = 10000;    // C(N,S) enumeration cap
    unsigned precision_bits = 128;
    int jobs = 1;

    static RunConfig from_env();
};

/// Machine-checkable record of a claim and the exact inequalities behind
/// it. All rationals are strings; no floats, no timestamps.
struct Certificate {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> parameters;
    CheckList checks;
    std::string witness_digest;  // FNV-1a of the canonical witness JSON

    /// certified: every hard check passed (and there is at least one);
    /// informative-only: no hard checks present; failed: otherwise.
    std::string verdict() const;
    json to_json() const;
};

// Witness/polynomial/list serialization. Entries are ordered by bitmask so
// identical objects serialize to identical bytes.
json witness_to_json(const DualWitness& w);
DualWitness witness_from_json(const json& j);

json univariate_witness_to_json(const UnivariateWitness& w);
UnivariateWitness univariate_witness_from_json(const json& j);

json poly_to_json(const MultilinearPoly& p);
MultilinearPoly poly_from_json(const json& j);

json list_to_json(const ListInput& s);
ListInput list_from_json(const json& j);

std::string fnv1a_hex(const std::string& bytes);

/// Writes via a temp file + rename so readers never see partial output.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace adeg
