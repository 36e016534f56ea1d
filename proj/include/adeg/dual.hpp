#pragma once

#include "adeg/cube.hpp"

#include <map>

namespace adeg {

/// Sparse function psi : {-1,1}^n -> Q keyed by TRUE-bitmask.
struct DualWitness {
    int n = 0;
    std::map<std::uint64_t, Rat> entries;

    DualWitness() = default;
    explicit DualWitness(int n_) : n(n_) {}

    Rat at(std::uint64_t x) const {
        auto it = entries.find(x);
        return it == entries.end() ? Rat(0) : it->second;
    }
    void add(std::uint64_t x, const Rat& v) {
        if (v == 0) return;
        auto [it, fresh] = entries.emplace(x, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) entries.erase(it);
        }
    }
    DualWitness scaled(const Rat& c) const;
    size_t support() const { return entries.size(); }
};

Rat l1_norm(const DualWitness& w);

/// Largest d such that every character of degree < d annihilates w, i.e.
/// the first degree whose sweep finds a nonzero inner product. Sweeps
/// degrees 0..cap and returns cap+1 if all pass (cap defaults to n).
int pure_high_degree(const DualWitness& w, int cap = -1, int jobs = 1);

/// <w, chi_S> for a single character.
Rat character_inner(const DualWitness& w, std::uint64_t subset);

struct CorrelationReport {
    Rat on_promise;    // sum over f's domain of psi * f
    Rat off_penalty;   // sum of |psi| off the domain
    Rat net;           // on_promise - off_penalty
};

CorrelationReport correlation(const DualWitness& w, const PartialBoolFn& f);

/// Error masses: (sum over E+ of |psi|, sum over E- of |psi|), where
/// E+ = {psi > 0, f = -1} and E- = {psi < 0, f = +1}; points off f's
/// domain belong to neither.
std::pair<Rat, Rat> error_masses(const DualWitness& w, const PartialBoolFn& f);

/// Dual block composition (Psi * psi)(x_1..x_M) =
/// 2^M Psi(sign psi(x_1), ..., sign psi(x_M)) prod |psi(x_i)|,
/// with sign(0) taken as +1 (immaterial: such points carry zero weight).
DualWitness dual_block_compose(const DualWitness& outer, const DualWitness& inner,
                               size_t support_budget = (1ULL << 22));

/// The single-TRUE-block error amplifier phi (phi(all +1) = 1/2,
/// phi(all -1) = -1/2) composed with psi, plus exact verification of the
/// amplification bounds against OR_M o f.
struct ErrorAmplifyReport {
    DualWitness composed;
    Rat pos_in, neg_in;    // masses of psi vs f
    Rat pos_out, neg_out;  // masses of composed vs OR_M o f
    Rat pos_bound, neg_bound;  // M*pos_in and (1/2)(2*neg_in)^M
    bool ok = false;
};
ErrorAmplifyReport amplify_error(const DualWitness& psi, const PartialBoolFn& f, int M);

/// Compose a supplied OR_M witness rho (norm 1, correlation >= 9/10) with
/// psi and verify <rho*psi, OR_M o f> >= 9/10 - 4 M pos - 4 neg.
struct DegreeAmplifyReport {
    DualWitness composed;
    Rat rho_corr;
    Rat corr;
    Rat bound;
    bool ok = false;
};
DegreeAmplifyReport amplify_degree(const DualWitness& psi, const PartialBoolFn& f, int M,
                                   const DualWitness& rho);

enum class OneSided { Yes, No, NotApplicable };

/// One-sided error with respect to OR_n: psi must be positive at the all-+1
/// point (the only input where OR = +1). Applicable when PHD >= 1 and
/// <psi, OR_n> > 0.
OneSided one_sided_check(const DualWitness& w);

}  // namespace adeg
