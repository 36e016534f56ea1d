#pragma once

#include "adeg/checks.hpp"
#include "adeg/dual.hpp"
#include "adeg/enclosure.hpp"
#include "adeg/poly.hpp"

namespace adeg {

/// Univariate dual witness on levels 0..T: a signed, balanced, unit-norm
/// weight vector supported on an explicit node set.
struct UnivariateWitness {
    int T = 0;
    std::vector<Rat> values;  // omega(0..T), unit l1 norm
    std::vector<int> nodes;   // support, sorted
    int phd = 0;              // certified: all moments below this vanish

    // construction metadata
    std::string kind;  // "or", "thr", "custom"
    Rat delta;
    int k = 0;
    Int c;
    int m = 0;

    Rat at(int t) const { return values.at(t); }
    Rat l1() const;
    Rat sum() const;
    /// sum_t omega(t) t^j.
    Rat moment(int j) const;
    /// Largest d <= cap with all moments below d vanishing.
    int moment_phd(int cap) const;
    /// omega = omega_pos - omega_neg split into nonnegative parts.
    std::pair<std::vector<Rat>, std::vector<Rat>> signed_parts() const;
};

/// Thrown when the node-set recipe degenerates (m = 0: T too small for the
/// requested parameters). The formulas are meaningless there.
struct DegenerateParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The exp-decay condition |omega(t)| <= alpha e^{-beta t} / t^2, checked
/// per level against a certified lower enclosure of the exponential (a pass
/// is sound; a borderline truth may conservatively fail). beta is itself an
/// enclosure since the recipes define it through square roots.
struct DecayCheck {
    Rat alpha;
    RatInterval beta;
    std::vector<Check> per_level;
    bool all_pass = true;
};
DecayCheck check_decay(const UnivariateWitness& w, const Rat& alpha, const RatInterval& beta,
                       unsigned prec = 128);

struct OrWitness {
    UnivariateWitness w;
    CheckList checks;   // correlation, norm, phd, per-level decay
    Rat correlation;    // omega(0) - sum_{t>=1} omega(t)
    Rat alpha;          // 170/delta
    RatInterval beta;   // sqrt(delta)/(10 sqrt(T))
};

/// Node set {1, c} union {2ci^2 : 0 <= i <= m} with c = ceil(8/delta),
/// m = floor(sqrt(T/2c)); requires 1/T <= delta <= 1/2 and m >= 1.
OrWitness build_or_witness(int T, const Rat& delta);

struct ThrWitness {
    UnivariateWitness w;
    CheckList checks;  // E+/E- mass bounds, norm, phd, head/tail/decay bounds
    Rat pos_mass, neg_mass;
    Rat alpha;         // (2k)^k
    RatInterval beta;  // 1 / (2 sqrt(k T N^{1/k}))
};

/// Node set {1..k} union {c i^2 : 0 <= i <= m} with c = 2k ceil(N^{1/k}),
/// m = floor(sqrt(T/c)), signs fixed so omega(k) < 0. k = 1 returns the
/// two-point witness directly. N enters only through c and the mass target;
/// T > N is allowed and flagged.
ThrWitness build_thr_witness(int k, int T, const Int& N);

/// Balanced, unit-norm witness from explicit level values (validated).
UnivariateWitness custom_witness(int T, const std::vector<std::pair<int, Rat>>& vals);

/// Pointwise symmetrization psi(x) = omega(|x|)/C(N,|x|) on H_{<=T};
/// support size is sum_{t in S} C(N,t) and must fit the budget.
DualWitness symmetrize_witness(const UnivariateWitness& w, int N,
                               size_t support_budget = (1ULL << 22));

/// Exact pure high degree of the symmetrized witness, computed level-wise
/// through Krawtchouk sums (valid for any N, no pointwise materialization).
int symmetric_witness_phd(const UnivariateWitness& w, int N, int cap);

/// K_j(t) = sum_i (-1)^i C(j,i) C(N-j, t-i): the level-t sum of any
/// degree-j character over {-1,1}^N.
Int krawtchouk(int N, int j, int t);

/// A function on ({-1,1}^N)^R invariant under within-block permutations,
/// stored as one pointwise value per block-level vector (t_1..t_R).
struct BlockLevelFn {
    int N = 0, R = 0;
    std::vector<Rat> value;  // size (N+1)^R, C-order index sum t_i (N+1)^i

    BlockLevelFn() = default;
    BlockLevelFn(int N_, int R_);

    size_t index(const std::vector<int>& t) const;
    Rat& at(const std::vector<int>& t);
    const Rat& at(const std::vector<int>& t) const;

    /// Number of cube points in the orbit of a level vector.
    Int orbit_size(const std::vector<int>& t) const;

    Rat l1() const;
    Rat l1_tail() const;  // mass on total weight > N
    /// Inner product with prod_i chi_{S_i} for any degree profile
    /// (|S_1|,..,|S_R|) = j; covers every character of the big cube.
    Rat profile_inner(const std::vector<int>& j) const;
    /// Largest d <= cap such that all characters of degree < d annihilate.
    int phd(int cap) const;
    /// Exact correlation against a level-defined partial function
    /// (nullopt = off-domain, penalized by |value|).
    Rat correlate(const std::function<std::optional<int>(const std::vector<int>&)>& f) const;

    BlockLevelFn operator-(const BlockLevelFn& o) const;
    BlockLevelFn scaled(const Rat& c) const;

    DualWitness to_pointwise(size_t support_budget = (1ULL << 22)) const;

    template <class Fn>
    void for_each_level(Fn&& fn) const {
        std::vector<int> t(R, 0);
        for (size_t idx = 0;; ++idx) {
            fn(t, idx);
            int i = 0;
            while (i < R && ++t[i] > N) t[i++] = 0;
            if (i == R) break;
        }
    }
};

/// The dual block composition Phi * psi with psi the symmetrization of
/// omega into N bits, materialized in block-level form.
BlockLevelFn block_compose_level(const DualWitness& outer, const UnivariateWitness& omega, int N);

/// Exact mass that Phi * psi places outside H_{<=N}, computed per sign
/// pattern by convolving the per-level mass vectors (never by cube
/// enumeration).
Rat tail_mass(const DualWitness& outer, const UnivariateWitness& omega, int N);

/// Brute-force cross-check of tail_mass by materializing the composition
/// (N*R <= 22 or so).
Rat tail_mass_bruteforce(const DualWitness& outer, const UnivariateWitness& omega, int N);

/// Minimal-l1 correction nu with <nu, p> = 0 for deg p < D and nu = xi on
/// total weight > N, via an exact LP over block-level orbits (optimal among
/// all functions by the averaging argument).
struct CorrectionResult {
    BlockLevelFn nu;
    Rat nu_norm;
    int target_phd = 0;
    CheckList checks;  // norm <= 1/10 (post-asserted), phd re-verified
    long pivots = 0;
};
CorrectionResult build_correction(const BlockLevelFn& xi, int D);

/// Pointwise variant for arbitrary sparse witnesses in small dimension:
/// minimize l1 of nu subject to PHD >= D and nu = xi above weight N.
struct PointCorrectionResult {
    DualWitness nu;
    Rat nu_norm;
    CheckList checks;
    long pivots = 0;
};
PointCorrectionResult build_correction_pointwise(const DualWitness& xi, int n, int N, int D);

/// Full zeroing step: xi = Phi * psi, exact tail mass, effective window
/// Delta = max{D : tail <= (2NR)^{-2D}}, correction at min{D, Delta}, and
/// zeta = (xi - nu)/||xi - nu||.
struct ZeroOutResult {
    BlockLevelFn xi, zeta;
    Rat tail;
    int delta_effective = 0;   // from the exact tail mass
    int target_phd = 0;        // min{D, delta_effective}
    Rat nu_norm;
    Rat zeta_distance;         // ||zeta - xi||_1
    CheckList checks;
};
ZeroOutResult zero_out(const DualWitness& outer, const UnivariateWitness& omega, int N, int D,
                       int phd_cap = 8);

/// Exact parameter recipes for the three pipelines. Values that reproduce
/// stated constants verbatim carry consistency checks (flagged informative
/// when the source arithmetic does not cohere).
struct ParameterBlock {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;  // name -> exact value
    CheckList checks;

    std::string get(const std::string& key) const;
};
ParameterBlock surj_parameter_block(const Int& R);
ParameterBlock dist_parameter_block(const Int& R, int k);
ParameterBlock ist_parameter_block(const Int& R, const Rat& gamma);

/// Image-size-testing witness: two-point outer against an OR witness with
/// T = N, correlation measured exactly against GapAND o OR with off-domain
/// penalty, and compared to 1 - delta^R - exp(-(gamma-delta)R/3).
struct IstWitnessResult {
    DualWitness outer;          // two-point
    UnivariateWitness omega;    // inner OR witness (levels)
    BlockLevelFn composed;
    Rat correlation;            // double-promise correlation of Phi * psi
    Rat closed_form_lo;         // certified lower bound of the target value
    ZeroOutResult zeroed;
    CheckList checks;
};
IstWitnessResult build_ist_witness(int R, const Rat& gamma, int scale_override_N,
                                   int phd_cap = 6);

/// Desk-scale surjectivity / k-distinctness witness pipelines: inner
/// witness from the explicit recipe when its node set is nondegenerate at
/// the requested T, otherwise from the level-collapsed LP at the largest
/// degree that keeps the required correlation; outer witness LP-extracted;
/// composition zeroed onto H_{<=N}. All checks exact at the chosen scale;
/// recipe-scale identities are reported informatively.
struct PipelineResult {
    ParameterBlock params;
    UnivariateWitness omega;
    DualWitness outer;
    Rat outer_correlation;
    ZeroOutResult zeroed;
    Rat final_correlation;  // zeta against the target on H_{<=N}
    CheckList checks;
};
PipelineResult build_surj_pipeline(int R, int N, int T, int phd_cap = 6);
PipelineResult build_dist_pipeline(int R, int k, int N, int T, int phd_cap = 6);

}  // namespace adeg
