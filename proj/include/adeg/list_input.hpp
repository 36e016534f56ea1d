#pragma once

#include "adeg/cube.hpp"
#include "adeg/enclosure.hpp"

#include <vector>

namespace adeg {

/// A list of N items over range [R]; 0 is the dummy element and may appear
/// only when the consuming operation allows it.
struct ListInput {
    int N = 0;
    int R = 0;
    std::vector<int> items;  // each in [0, R]

    ListInput() = default;
    ListInput(int N_, int R_, std::vector<int> items_);

    /// f[r] = frequency of item r, indexed 0..R (0 = dummy).
    std::vector<int> frequencies() const;

    /// Empirical distribution p_r = f_r / N over the non-dummy range [R].
    std::vector<Rat> distribution() const;
};

struct EntropyPair {
    ListInput v;  // fresh-flag list: range items tagged with an independent bit
    ListInput w;  // source-flag list: range items tagged with their origin
};

/// Surjectivity: -1 iff every r in [R] appears at least once. With
/// dummy=false, items must lie in [R]; with dummy=true, item 0 is ignored.
int eval_surj(const ListInput& s, bool dummy);

/// k-distinctness: -1 iff some r in [R] (r != 0 when dummy=true) has
/// frequency >= k. Requires k <= N.
int eval_dist_k(const ListInput& s, int k, bool dummy);

/// Image size testing: -1 if all of [R] appears, +1 if at most gamma*R
/// items appear, nullopt on gap inputs. Dummy item ignored.
std::optional<int> eval_ist(const ListInput& s, const Rat& gamma);

/// (1/2) sum_r |p_r - 1/R|, exact.
Rat statistical_distance_from_uniform(const ListInput& s);

/// Certified enclosure of H(p), width below 2^-prec/2-ish; callers should
/// check .width() against their tolerance.
RatInterval shannon_entropy(const ListInput& s, unsigned prec = 128);

/// Maps items over [R]_0 to [R+1] (0 -> R+1) and appends one R+1 item, so
/// surjectivity without a dummy agrees with dummy-surjectivity of the input.
ListInput reduce_dsurj_to_surj(const ListInput& s);

/// Position-dependent map sending the i-th dummy slot to fresh item R+i, so
/// plain k-distinctness over range R+N agrees with the dummy variant.
/// Only valid for k >= 2.
ListInput reduce_ddist_to_dist(const ListInput& s, int k);

/// The R-block indicator encoding: block r holds (1[s_1=r],...,1[s_N=r])
/// with TRUE = -1. Total Hamming weight <= N, equal iff no dummies.
CubePoint property_to_block(const ListInput& s);

/// The two length-4N lists over [R] x {0,1} of the entropy-comparison
/// transformation (pairs (r, b) encoded as r + b*R in [2R]). Requires R | N.
EntropyPair entropy_pair_transform(const ListInput& u);

}  // namespace adeg
