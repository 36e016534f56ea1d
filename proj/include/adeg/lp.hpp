#pragma once

#include "adeg/dual.hpp"
#include "adeg/list_input.hpp"
#include "adeg/poly.hpp"
#include "adeg/simplex.hpp"

#include <optional>

namespace adeg {

/// The three approximation regimes for partial functions: boundedness
/// everywhere off the promise, no constraint off the promise, or (for a
/// Hamming promise H and definedness set G) boundedness only on H minus G.
enum class Variant { Bounded, Unbounded, DoublePromise };

std::string variant_name(Variant v);

struct LPResult {
    SimplexResult::Status status = SimplexResult::Status::Optimal;
    int degree_cap = 0;
    Variant variant = Variant::Bounded;
    Rat eps;                  // optimal error, +-1 function values
    MultilinearPoly p;        // achieving polynomial (character basis)
    DualWitness dual;         // raw dual; orthogonal to degree <= cap
    Rat dual_objective;       // equals eps by strong duality (verified)
    Rat dual_norm;            // <= 1
    bool degenerate_dual = false;  // zero dual (happens iff eps = 0)
    bool duality_ok = false;       // exact primal = dual objective
    long pivots = 0;

    /// The same optimum in acceptance-probability units (functions valued
    /// in {0,1}): deviations there are exactly half the +-1 deviations.
    Rat eps_accept() const { return eps / 2; }
};

/// Minimizes the approximation error of degree <= d polynomials for f under
/// the given variant. For DoublePromise, H is the Hamming-promise domain and
/// f's domain plays the role of H intersect G. Dense enumeration; callers
/// must respect the dimension budget (n <= 22 or so).
LPResult optimal_error(const PartialBoolFn& f, int d, Variant variant,
                       const std::optional<PromiseDomain>& H = std::nullopt);

/// Least degree d with optimal error <= eps (ascending search; the error is
/// non-increasing in d).
std::pair<int, LPResult> approximate_degree(const PartialBoolFn& f, const Rat& eps,
                                            Variant variant,
                                            const std::optional<PromiseDomain>& H = std::nullopt);

/// Normalized dual witness from a solved instance: unit norm, pure high
/// degree > cap, net correlation >= eps. Throws if the dual is degenerate.
DualWitness extract_dual(const LPResult& r);

/// Level-collapsed LP for symmetric functions: q is univariate in the
/// Hamming weight, one constraint pair per level. levels[t] is the target
/// value at weight t or nullopt (off promise). Valid because averaging an
/// approximator over coordinate permutations preserves degree and error.
struct SymmetricLPResult {
    SimplexResult::Status status = SimplexResult::Status::Optimal;
    int degree_cap = 0;
    Rat eps;
    UnivariatePoly q;
    std::vector<Rat> omega;  // per-level dual; sum or moments vanish up to cap
    Rat dual_objective;
    long pivots = 0;
};

SymmetricLPResult optimal_error_symmetric(const std::vector<std::optional<int>>& levels, int d,
                                          Variant variant);

/// Bit-encoded dummy surjectivity / k-distinctness as total Boolean
/// functions over N * width bits, where width = bits for codes 0..R and
/// out-of-range codes collapse to item R (power-of-two padding).
PartialBoolFn fn_dsurj_encoded(int N, int R);
PartialBoolFn fn_ddist_encoded(int N, int R, int k);

/// Computes both sides of the property-vs-block-composition degree
/// inequality by LP: eps-approximate degree of the encoded list function
/// versus the unbounded approximate degree of the block composition
/// restricted to Hamming weight <= N.
struct ReductionReport {
    int list_degree = 0;
    int block_degree = 0;
    Rat eps;
    bool holds = false;  // list_degree >= block_degree
    std::string label;
};

ReductionReport reduction_consistency_surj(int N, int R, const Rat& eps);
ReductionReport reduction_consistency_dist(int N, int R, int k, const Rat& eps);

/// Subset masks of [n] with popcount <= dmax, ordered by degree then value.
std::vector<std::uint64_t> subsets_up_to(int n, int dmax);

}  // namespace adeg
