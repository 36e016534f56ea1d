#include "adeg/cube.hpp"

namespace adeg {

CubePoint CubePoint::parse(const std::string& s) {
    CubePoint p;
    p.n = static_cast<int>(s.size());
    for (int i = 0; i < p.n; ++i) {
        if (s[i] == '-')
            p.mask |= (1ULL << i);
        else if (s[i] != '+')
            throw std::invalid_argument("CubePoint::parse: expected '+'/'-' string");
    }
    return p;
}

bool PartialBoolFn::total() const {
    if (symmetric()) {
        for (const auto& v : levels)
            if (!v) return false;
        return true;
    }
    for (std::uint64_t x = 0; x < (1ULL << n); ++x)
        if (!value(x)) return false;
    return true;
}

PartialBoolFn fn_symmetric(int n, std::vector<std::optional<int>> levels, std::string label) {
    PartialBoolFn f;
    f.n = n;
    f.label = std::move(label);
    f.levels = std::move(levels);
    auto lv = f.levels;
    f.value = [lv](std::uint64_t x) { return lv[hamming_weight(x)]; };
    return f;
}

namespace {
std::vector<std::optional<int>> total_levels(int n, const std::function<int(int)>& at) {
    std::vector<std::optional<int>> lv(n + 1);
    for (int t = 0; t <= n; ++t) lv[t] = at(t);
    return lv;
}
}  // namespace

PartialBoolFn fn_and(int n) {
    return fn_symmetric(n, total_levels(n, [n](int t) { return t == n ? -1 : +1; }), "AND");
}

PartialBoolFn fn_or(int n) {
    return fn_symmetric(n, total_levels(n, [](int t) { return t >= 1 ? -1 : +1; }), "OR");
}

PartialBoolFn fn_parity(int n) {
    return fn_symmetric(n, total_levels(n, [](int t) { return (t & 1) ? -1 : +1; }), "PARITY");
}

PartialBoolFn fn_majority(int n) {
    return fn_symmetric(n, total_levels(n, [n](int t) { return 2 * t > n ? -1 : +1; }), "MAJ");
}

PartialBoolFn fn_threshold(int n, int k) {
    return fn_symmetric(n, total_levels(n, [k](int t) { return t >= k ? -1 : +1; }),
                        "THR" + std::to_string(k));
}

PartialBoolFn fn_constant(int n, int v) {
    return fn_symmetric(n, total_levels(n, [v](int) { return v; }), v < 0 ? "TRUE" : "FALSE");
}

PartialBoolFn restrict_hamming(const PartialBoolFn& f, int T) {
    PartialBoolFn g;
    g.n = f.n;
    g.label = f.label + "|H<=" + std::to_string(T);
    if (f.symmetric()) {
        g.levels = f.levels;
        for (int t = T + 1; t <= f.n; ++t) g.levels[t] = std::nullopt;
        auto lv = g.levels;
        g.value = [lv](std::uint64_t x) { return lv[hamming_weight(x)]; };
    } else {
        auto base = f.value;
        g.value = [base, T](std::uint64_t x) -> std::optional<int> {
            if (hamming_weight(x) > T) return std::nullopt;
            return base(x);
        };
    }
    return g;
}

PartialBoolFn compose_blocks(const PartialBoolFn& outer, const PartialBoolFn& inner) {
    PartialBoolFn g;
    const int R = outer.n, N = inner.n;
    if (R * N > 63) throw std::invalid_argument("compose_blocks: dimension too large");
    g.n = R * N;
    g.label = outer.label + "o" + inner.label;
    auto fo = outer.value;
    auto fi = inner.value;
    g.value = [fo, fi, R, N](std::uint64_t x) -> std::optional<int> {
        std::uint64_t z = 0;
        const std::uint64_t blockmask = (N == 64) ? ~0ULL : ((1ULL << N) - 1);
        for (int i = 0; i < R; ++i) {
            auto v = fi((x >> (i * N)) & blockmask);
            if (!v) return std::nullopt;
            if (*v == -1) z |= (1ULL << i);
        }
        return fo(z);
    };
    return g;
}

PartialBoolFn fn_gap_and(int R, const Rat& gamma) {
    std::vector<std::optional<int>> lv(R + 1);
    for (int t = 0; t <= R; ++t) {
        if (t == R)
            lv[t] = -1;
        else if (Rat(t) <= gamma * R)
            lv[t] = +1;
        // else undefined
    }
    return fn_symmetric(R, std::move(lv), "GapAND");
}

bool PromiseDomain::contains(std::uint64_t x) const {
    switch (kind) {
        case Kind::FullCube:
            return true;
        case Kind::HammingAtMost:
            return hamming_weight(x) <= T;
        case Kind::BlockHammingAtMost:
            return hamming_weight(x) <= N;
        case Kind::GapAndDomain: {
            // Image of per-block ORs lies in H_{<= gamma R} or is all-TRUE.
            int on = 0;
            const std::uint64_t blockmask = (1ULL << N) - 1;
            for (int i = 0; i < R; ++i)
                if (((x >> (i * N)) & blockmask) != 0) ++on;
            return on == R || Rat(on) <= gamma * R;
        }
    }
    return false;
}

}  // namespace adeg
