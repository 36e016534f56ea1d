#pragma once

#include "adeg/checks.hpp"
#include "adeg/list_input.hpp"
#include "adeg/poly.hpp"

namespace adeg {

// This module works in the 0/1 convention: functions map into {0,1} with 1
// = TRUE, and an eps-approximator satisfies p(x) in [0,eps] on 0-inputs and
// [1-eps,1] on 1-inputs. The character-basis world converts at this
// boundary and nowhere else.

/// NOR approximator assembled as r = p * q: p handles Hamming weight <= T
/// exactly-ish and may blow up above, q crushes everything above T to at
/// most 1/(3M) where M certifies p's off-promise maximum.
struct NorApproxReport {
    int n = 0, T = 0;
    UnivariatePoly p, q, r;        // univariate in the Hamming weight
    SymmetricProfile r_profile;
    Rat M;                         // certified max |p(t)| for t > T
    int q_base_degree = 0;
    Rat q_base_eps;
    int amplify_iterations = 0;
    Rat max_error;                 // exact max |r - NOR| over the cube
    CheckList checks;
};
NorApproxReport approximate_nor(int n, int T);

/// LP-built (eps-)approximator of AND_k in the 0/1 convention, constrained
/// to [0,1] on the whole cube (needed for the growth bound).
struct AndApprox {
    MultilinearPoly w;  // ZeroOne basis
    Rat eps;
    int degree = 0;
};
AndApprox and_approximator_01(int k, const Rat& eps_target);

/// Promise set: every item of Rcal appears at most T times.
struct HardPromise {
    std::vector<int> Rcal;  // subset of [R], ascending
    int T = 0;
    bool contains(const ListInput& x) const;
    int over_threshold_count(const ListInput& x) const;  // b_Rcal(x)
};

/// The restricted-surjectivity approximator w o V o indicators for a fixed
/// Rcal: exact on the promise, certified-growth outside it.
struct RestrictedSurjPoly {
    std::vector<int> Rcal;
    int N = 0, R = 0, T = 0;
    int width = 0;            // bits per item in the encoding
    AndApprox w;
    LowWeightOrApprox V;
    int degree_bound = 0;     // deg(w) * deg(V) * width
};
RestrictedSurjPoly build_p_R(const std::vector<int>& Rcal, int N, int R, int T);

/// Exact evaluation on a list input through the item frequencies.
Rat eval_p_R(const RestrictedSurjPoly& p, const ListInput& x);
/// SURJ_Rcal in the 0/1 convention: 1 iff every r in Rcal appears.
int surj_rcal_01(const std::vector<int>& Rcal, const ListInput& x);
/// Growth certificate prod_r (|1-z_r| + |z_r|) at the inner V values.
Rat p_R_growth_certificate(const RestrictedSurjPoly& p, const ListInput& x);

/// Materializes the polynomial over the N*width input bits (ZeroOne basis):
/// indicators 1[x_i = r] composed into V per block, then into w.
MultilinearPoly materialize_p_R(const RestrictedSurjPoly& p);

/// The fully assembled averaged polynomial
/// r = C(N,S)^{-1} sum_S sum_y 1_y(x_S) p_{R(y)} over the input bits;
/// agrees pointwise with the subset-sum evaluation on real list inputs.
MultilinearPoly materialize_r(int N, int R, int T, int S);

/// Exact Pr over size-S subsets that at least b unsampled items exceed T,
/// with the exp(-b(ST/N - log N)) reference bound.
struct MissProbability {
    bool exact = false;    // false = bound-only mode (budget refused)
    Rat probability;
    Int subsets;           // C(N,S)
    RatInterval bound;     // exp enclosure of the reference bound
    bool bound_vacuous = false;  // bound >= 1
    bool within_bound = true;    // probability <= upper bound (when exact)
};
MissProbability sample_miss_probability(int N, int S, int T, const ListInput& x, int b,
                                        const Int& subset_budget = Int(10000));

/// The averaged approximator r(x) = avg_S p_{R(x_S)}(x), evaluated
/// exhaustively over [R]^N with the (b = 0)/(b >= 1) decomposition and all
/// component inequalities checked on every evaluated input.
struct SurjUpperReport {
    int N = 0, R = 0, T = 0, S = 0;
    bool exhaustive = true;  // false = sampled-input mode (budget exceeded)
    Rat max_error;           // a lower bound on the true maximum when sampled
    std::string worst_input;
    Rat worst_tail_term;      // largest |b>=1 contribution| over inputs
    int degree_bound = 0;     // S*width + max deg(p_R)
    // Smallest constant with certificate <= exp(b C sqrt(T) ln N) across
    // all evaluated off-promise pairs (logged, zero when none occur).
    Rat growth_constant;
    CheckList checks;
};
SurjUpperReport build_surj_approximator(int N, int R, int T, int S,
                                        const Int& input_budget = Int(1000000),
                                        const Int& subset_budget = Int(10000));

struct GridRow {
    int T = 0, S = 0;
    Rat max_error;
    int degree_bound = 0;
    bool ok = false;  // all component checks passed
};
std::vector<GridRow> surj_upper_grid(int N, int R, const Int& input_budget = Int(1000000),
                                     const Int& subset_budget = Int(10000));

}  // namespace adeg
