#include "adeg/list_input.hpp"

#include <algorithm>

namespace adeg {

ListInput::ListInput(int N_, int R_, std::vector<int> items_)
    : N(N_), R(R_), items(std::move(items_)) {
    if (static_cast<int>(items.size()) != N)
        throw std::invalid_argument("ListInput: items length differs from N");
    for (int v : items)
        if (v < 0 || v > R) throw std::invalid_argument("ListInput: item out of range");
}

std::vector<int> ListInput::frequencies() const {
    std::vector<int> f(R + 1, 0);
    for (int v : items) ++f[v];
    return f;
}

std::vector<Rat> ListInput::distribution() const {
    auto f = frequencies();
    std::vector<Rat> p(R);
    for (int r = 1; r <= R; ++r) p[r - 1] = Rat(f[r], N);
    return p;
}

int eval_surj(const ListInput& s, bool dummy) {
    if (!dummy) {
        for (int v : s.items)
            if (v == 0) throw std::invalid_argument("eval_surj: dummy item present");
    }
    auto f = s.frequencies();
    for (int r = 1; r <= s.R; ++r)
        if (f[r] == 0) return +1;
    return -1;
}

int eval_dist_k(const ListInput& s, int k, bool dummy) {
    if (k < 1 || k > s.N) throw std::invalid_argument("eval_dist_k: need 1 <= k <= N");
    if (!dummy) {
        for (int v : s.items)
            if (v == 0) throw std::invalid_argument("eval_dist_k: dummy item present");
    }
    auto f = s.frequencies();
    for (int r = 1; r <= s.R; ++r)
        if (f[r] >= k) return -1;
    return +1;
}

std::optional<int> eval_ist(const ListInput& s, const Rat& gamma) {
    auto f = s.frequencies();
    int image = 0;
    for (int r = 1; r <= s.R; ++r)
        if (f[r] > 0) ++image;
    if (image == s.R) return -1;
    if (Rat(image) <= gamma * s.R) return +1;
    return std::nullopt;
}

Rat statistical_distance_from_uniform(const ListInput& s) {
    Rat d = 0;
    const Rat u(1, s.R);
    for (const Rat& p : s.distribution()) d += rat_abs(p - u);
    return d / 2;
}

RatInterval shannon_entropy(const ListInput& s, unsigned prec) {
    return entropy_enclosure(s.distribution(), prec);
}

ListInput reduce_dsurj_to_surj(const ListInput& s) {
    std::vector<int> out;
    out.reserve(s.N + 1);
    for (int v : s.items) out.push_back(v == 0 ? s.R + 1 : v);
    out.push_back(s.R + 1);
    return ListInput(s.N + 1, s.R + 1, std::move(out));
}

ListInput reduce_ddist_to_dist(const ListInput& s, int k) {
    if (k < 2)
        throw std::invalid_argument(
            "reduce_ddist_to_dist: k=1 has no dummy-elimination reduction");
    std::vector<int> out(s.N);
    for (int i = 0; i < s.N; ++i) out[i] = s.items[i] == 0 ? s.R + 1 + i : s.items[i];
    return ListInput(s.N, s.R + s.N, std::move(out));
}

CubePoint property_to_block(const ListInput& s) {
    if (s.N * s.R > 63) throw std::invalid_argument("property_to_block: dimension too large");
    CubePoint x;
    x.n = s.N * s.R;
    for (int r = 1; r <= s.R; ++r)
        for (int i = 0; i < s.N; ++i)
            if (s.items[i] == r) x.mask |= 1ULL << ((r - 1) * s.N + i);
    return x;
}

EntropyPair entropy_pair_transform(const ListInput& u) {
    if (u.R <= 0 || u.N % u.R != 0)
        throw std::invalid_argument("entropy_pair_transform: R must divide N");
    for (int v : u.items)
        if (v == 0) throw std::invalid_argument("entropy_pair_transform: dummy item present");
    const int N = u.N, R = u.R;
    auto pair_item = [R](int r, int b) { return r + b * R; };

    // Four slots per source position i: two copies of the input item u_i and
    // two copies of the uniform filler ceil(R*i/N), tagged per construction.
    std::vector<int> v, w;
    v.reserve(4 * N);
    w.reserve(4 * N);
    for (int i = 1; i <= N; ++i) {
        int filler = (R * i + N - 1) / N;  // ceil(R*i/N), hits each of [R] exactly N/R times
        int ui = u.items[i - 1];
        // w: item tagged by its origin (input -> 0, filler -> 1)
        w.push_back(pair_item(ui, 0));
        w.push_back(pair_item(ui, 0));
        w.push_back(pair_item(filler, 1));
        w.push_back(pair_item(filler, 1));
        // v: same items, tag replaced by a fresh alternating bit
        v.push_back(pair_item(ui, 0));
        v.push_back(pair_item(ui, 1));
        v.push_back(pair_item(filler, 0));
        v.push_back(pair_item(filler, 1));
    }
    return {ListInput(4 * N, 2 * R, std::move(v)), ListInput(4 * N, 2 * R, std::move(w))};
}

}  // namespace adeg
