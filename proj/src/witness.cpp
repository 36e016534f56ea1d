#include "adeg/witness.hpp"

#include "adeg/lp.hpp"

#include <algorithm>
#include <set>

namespace adeg {

namespace {

Check make_check(std::string name, const Rat& lhs, std::string rel, const Rat& rhs,
                 bool pass, bool informative = false, std::string note = "") {
    return Check{std::move(name), to_string(lhs), to_string(rhs), std::move(rel), pass,
                 informative, std::move(note)};
}

/// Smallest m >= 0 with m^k >= x (x >= 0).
Int iceil_root(const Int& x, unsigned k) {
    if (x <= 0) return 0;
    Int lo = 0, hi = 1;
    while (int_pow(hi, k) < x) hi *= 2;
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (int_pow(mid, k) >= x)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace

Rat UnivariateWitness::l1() const {
    Rat s = 0;
    for (const Rat& v : values) s += rat_abs(v);
    return s;
}

Rat UnivariateWitness::sum() const {
    Rat s = 0;
    for (const Rat& v : values) s += v;
    return s;
}

Rat UnivariateWitness::moment(int j) const {
    Rat s = 0;
    for (int t : nodes) s += values[t] * rat_pow(Rat(t), j);
    return s;
}

int UnivariateWitness::moment_phd(int cap) const {
    for (int j = 0; j <= cap; ++j)
        if (moment(j) != 0) return j;
    return cap + 1;
}

std::pair<std::vector<Rat>, std::vector<Rat>> UnivariateWitness::signed_parts() const {
    std::vector<Rat> pos(values.size(), Rat(0)), neg(values.size(), Rat(0));
    for (size_t t = 0; t < values.size(); ++t) {
        if (values[t] > 0) pos[t] = values[t];
        if (values[t] < 0) neg[t] = -values[t];
    }
    return {pos, neg};
}

DecayCheck check_decay(const UnivariateWitness& w, const Rat& alpha, const RatInterval& beta,
                       unsigned prec) {
    DecayCheck d;
    d.alpha = alpha;
    d.beta = beta;
    for (int t : w.nodes) {
        if (t == 0) continue;
        // Sound comparison: |omega(t)| t^2 <= alpha * lower(e^{-beta t}),
        // taking the upper beta endpoint inside the (decreasing) exponential.
        Rat bound_lo = alpha * exp_enclosure(-beta.hi * t, prec).lo;
        Rat lhs = rat_abs(w.at(t)) * t * t;
        d.per_level.push_back(make_check("decay@t=" + std::to_string(t), lhs, "<=", bound_lo,
                                         lhs <= bound_lo));
        if (!d.per_level.back().pass) d.all_pass = false;
    }
    return d;
}

namespace {

/// omega(t) from the node-polynomial recipe: sign * C(T,t)/T! *
/// prod_{r in [T]_0 \ S} (t - r) on the node set, normalized to unit norm.
/// extra_sign_flip = false gives the OR orientation, true the THR one.
UnivariateWitness node_polynomial_witness(int T, const std::set<int>& S, bool extra_sign_flip,
                                          int m) {
    UnivariateWitness w;
    w.T = T;
    w.values.assign(T + 1, Rat(0));
    w.nodes.assign(S.begin(), S.end());
    for (int t : w.nodes) {
        Rat prod(binomial(T, t), factorial(T));
        for (int r = 0; r <= T; ++r) {
            if (S.count(r)) continue;
            prod *= (t - r);
        }
        int parity = (t + (T - m) + (extra_sign_flip ? 1 : 0)) & 1;
        w.values[t] = parity ? -prod : prod;
    }
    Rat norm = w.l1();
    if (norm == 0) throw std::logic_error("node_polynomial_witness: zero weight vector");
    for (int t : w.nodes) w.values[t] /= norm;
    if (w.sum() != 0) throw std::logic_error("node_polynomial_witness: not balanced");
    // Support <= T with |S| nodes: annihilates all degrees below |S| - 1,
    // and the moment at |S| - 1 is the nonzero top coefficient.
    int expected = static_cast<int>(S.size()) - 1;
    if (w.moment_phd(expected) != expected)
        throw std::logic_error("node_polynomial_witness: unexpected pure high degree");
    w.phd = expected;
    return w;
}

}  // namespace

OrWitness build_or_witness(int T, const Rat& delta) {
    if (delta < Rat(1, T) || delta > Rat(1, 2))
        throw std::invalid_argument("build_or_witness: need 1/T <= delta <= 1/2");
    Int c = rat_ceil(Rat(8) / delta);
    Int m_big = floor_sqrt(Rat(T) / (2 * c));
    if (m_big < 1)
        throw DegenerateParameters("build_or_witness: m = 0 at T=" + std::to_string(T) +
                                   " (need T >= 2*ceil(8/delta))");
    int m = to_long(m_big);
    std::set<int> S{1, static_cast<int>(to_long(c))};
    for (int i = 0; i <= m; ++i) S.insert(static_cast<int>(to_long(2 * c)) * i * i);

    OrWitness out;
    out.w = node_polynomial_witness(T, S, false, m);
    out.w.kind = "or";
    out.w.delta = delta;
    out.w.c = c;
    out.w.m = m;

    out.correlation = out.w.at(0);
    for (int t : out.w.nodes)
        if (t >= 1) out.correlation -= out.w.at(t);
    out.checks.push_back(make_check("or.correlation", out.correlation, ">=", Rat(1) - delta,
                                    out.correlation >= Rat(1) - delta));
    out.checks.push_back(make_check("or.norm", out.w.l1(), "=", Rat(1), out.w.l1() == 1));
    out.checks.push_back(make_check("or.phd", Rat(out.w.phd), "=",
                                    Rat(static_cast<int>(S.size()) - 1),
                                    out.w.phd == static_cast<int>(S.size()) - 1));
    out.alpha = Rat(170) / delta;
    out.beta = sqrt_enclosure(delta / T).scaled(Rat(1, 10));
    DecayCheck dc = check_decay(out.w, out.alpha, out.beta);
    append(out.checks, dc.per_level);
    return out;
}

ThrWitness build_thr_witness(int k, int T, const Int& N) {
    if (k < 1) throw std::invalid_argument("build_thr_witness: k >= 1 required");
    ThrWitness out;
    if (k == 1) {
        UnivariateWitness w;
        w.T = std::max(T, 1);
        w.values.assign(w.T + 1, Rat(0));
        w.values[0] = Rat(1, 2);
        w.values[1] = Rat(-1, 2);
        w.nodes = {0, 1};
        w.phd = 1;
        w.kind = "thr";
        w.k = 1;
        out.w = std::move(w);
        out.alpha = 2;
        out.beta = {Rat(0), Rat(0)};
        out.pos_mass = 0;
        out.neg_mass = 0;
        out.checks.push_back(make_check("thr.pos_mass", Rat(0), "<=", Rat(Int(1), 48 * N), true));
        out.checks.push_back(make_check("thr.neg_mass", Rat(0), "<=", Rat(1, 2) - Rat(2, 4), true));
        out.checks.push_back(make_check("thr.norm", Rat(1), "=", Rat(1), true));
        out.checks.push_back(make_check("thr.phd", Rat(1), "=", Rat(1), true));
        return out;
    }
    if (T < k) throw std::invalid_argument("build_thr_witness: need k <= T");
    Int c = 2 * k * iceil_root(N, k);
    Int m_big = floor_sqrt(Rat(T) / Rat(c));
    if (m_big < 1)
        throw DegenerateParameters("build_thr_witness: m = 0 (T below c = 2k ceil(N^{1/k}))");
    int m = to_long(m_big);
    int ci = static_cast<int>(to_long(c));
    std::set<int> S;
    for (int t = 1; t <= k; ++t) S.insert(t);
    for (int i = 0; i <= m; ++i) S.insert(ci * i * i);

    out.w = node_polynomial_witness(T, S, true, m);
    out.w.kind = "thr";
    out.w.k = k;
    out.w.c = c;
    out.w.m = m;
    if (!(out.w.at(k) < 0)) throw std::logic_error("build_thr_witness: omega(k) not negative");

    // Mass bounds. E+ lives above k among positive weights; E- below k
    // among negatives. The 1/(48N) target is an asymptotic constant and is
    // reported informatively (the node recipe misses it by a small factor
    // at any finite scale; downstream bounds use the measured mass).
    for (int t : out.w.nodes) {
        if (t >= k && out.w.at(t) > 0) out.pos_mass += out.w.at(t);
        if (t < k && out.w.at(t) < 0) out.neg_mass -= out.w.at(t);
    }
    Rat pos_target(Int(1), 48 * N);
    out.checks.push_back(make_check("thr.pos_mass", out.pos_mass, "<=", pos_target,
                                    out.pos_mass <= pos_target, true,
                                    "asymptotic constant; measured mass is authoritative"));
    Rat neg_bound = Rat(1, 2) - Rat(2) / rat_pow(Rat(4), k);
    out.checks.push_back(make_check("thr.neg_mass", out.neg_mass, "<=", neg_bound,
                                    out.neg_mass <= neg_bound));
    out.checks.push_back(make_check("thr.norm", out.w.l1(), "=", Rat(1), out.w.l1() == 1));
    out.checks.push_back(make_check("thr.phd", Rat(out.w.phd), "=",
                                    Rat(static_cast<int>(S.size()) - 1),
                                    out.w.phd == static_cast<int>(S.size()) - 1));

    // Head bound |omega(t)| / |omega(k)| <= C(k,t) for t <= k.
    Rat wk = rat_abs(out.w.at(k));
    for (int t = 0; t <= k; ++t) {
        if (out.w.at(t) == 0) continue;
        Rat lhs = rat_abs(out.w.at(t)) / wk;
        Rat rhs = Rat(binomial(k, t));
        out.checks.push_back(make_check("thr.head@t=" + std::to_string(t), lhs, "<=", rhs,
                                        lhs <= rhs));
    }
    // Tail bound |omega(c j^2)| / |omega(k)| <= (2k)^k / (c^k j^4) e^{-j^2/2m}.
    Rat twok_k = rat_pow(Rat(2 * k), k);
    Rat ck = rat_pow(Rat(c), k);
    for (int j = 1; j <= m; ++j) {
        int t = ci * j * j;
        Rat lhs = rat_abs(out.w.at(t)) / wk;
        Rat rhs = twok_k / (ck * j * j * j * j) * exp_enclosure(Rat(-j * j, 2 * m)).lo;
        out.checks.push_back(make_check("thr.tail@j=" + std::to_string(j), lhs, "<=", rhs,
                                        lhs <= rhs));
    }
    out.alpha = twok_k;
    // beta = 1 / (2 sqrt(k T N^{1/k}))
    RatInterval nk = root_enclosure(Rat(N), k);
    RatInterval arg = sqrt_enclosure(Rat(k) * T * nk.hi);
    RatInterval arg_lo = sqrt_enclosure(Rat(k) * T * nk.lo);
    out.beta = {Rat(1) / (2 * arg.hi), Rat(1) / (2 * arg_lo.lo)};
    DecayCheck dc = check_decay(out.w, out.alpha, out.beta);
    append(out.checks, dc.per_level);
    return out;
}

UnivariateWitness custom_witness(int T, const std::vector<std::pair<int, Rat>>& vals) {
    UnivariateWitness w;
    w.T = T;
    w.kind = "custom";
    w.values.assign(T + 1, Rat(0));
    for (const auto& [t, v] : vals) {
        if (t < 0 || t > T) throw std::invalid_argument("custom_witness: level out of range");
        w.values[t] += v;
    }
    for (int t = 0; t <= T; ++t)
        if (w.values[t] != 0) w.nodes.push_back(t);
    if (w.sum() != 0) throw std::invalid_argument("custom_witness: weights must sum to zero");
    Rat norm = w.l1();
    if (norm == 0) throw std::invalid_argument("custom_witness: zero witness");
    for (int t : w.nodes) w.values[t] /= norm;
    w.phd = w.moment_phd(static_cast<int>(w.nodes.size()));
    return w;
}

DualWitness symmetrize_witness(const UnivariateWitness& w, int N, size_t support_budget) {
    if (w.T > N) throw std::invalid_argument("symmetrize_witness: need T <= N");
    if (N > 63) throw std::invalid_argument("symmetrize_witness: dimension too large");
    Int points = 0;
    for (int t : w.nodes) points += binomial(N, t);
    if (points > Int(support_budget))
        throw BudgetExceeded("symmetrize_witness: support budget exceeded");
    DualWitness psi(N);
    for (int t : w.nodes) {
        Rat v = w.at(t) / Rat(binomial(N, t));
        if (t == 0) {
            psi.add(0, v);
            continue;
        }
        std::uint64_t x = (1ULL << t) - 1;
        while (x < (1ULL << N)) {
            psi.add(x, v);
            std::uint64_t lo = x | (x - 1);
            x = (lo + 1) | (((~lo & -~lo) - 1) >> (std::countr_zero(x) + 1));
        }
    }
    return psi;
}

Int krawtchouk(int N, int j, int t) {
    Int s = 0;
    for (int i = 0; i <= std::min(j, t); ++i) {
        Int term = binomial(j, i) * binomial(N - j, t - i);
        s += (i & 1) ? -term : term;
    }
    return s;
}

int symmetric_witness_phd(const UnivariateWitness& w, int N, int cap) {
    for (int j = 0; j <= cap; ++j) {
        Rat inner = 0;
        for (int t : w.nodes) inner += w.at(t) * Rat(krawtchouk(N, j, t), binomial(N, t));
        if (inner != 0) return j;
    }
    return cap + 1;
}

BlockLevelFn::BlockLevelFn(int N_, int R_) : N(N_), R(R_) {
    double cells = 1;
    for (int i = 0; i < R; ++i) cells *= (N + 1);
    if (cells > 2e6) throw BudgetExceeded("BlockLevelFn: level grid too large");
    value.assign(static_cast<size_t>(cells), Rat(0));
}

size_t BlockLevelFn::index(const std::vector<int>& t) const {
    size_t idx = 0, stride = 1;
    for (int i = 0; i < R; ++i) {
        idx += static_cast<size_t>(t[i]) * stride;
        stride *= (N + 1);
    }
    return idx;
}

Rat& BlockLevelFn::at(const std::vector<int>& t) { return value[index(t)]; }
const Rat& BlockLevelFn::at(const std::vector<int>& t) const { return value[index(t)]; }

Int BlockLevelFn::orbit_size(const std::vector<int>& t) const {
    Int s = 1;
    for (int i = 0; i < R; ++i) s *= binomial(N, t[i]);
    return s;
}

Rat BlockLevelFn::l1() const {
    Rat s = 0;
    for_each_level([&](const std::vector<int>& t, size_t idx) {
        if (value[idx] != 0) s += rat_abs(value[idx]) * Rat(orbit_size(t));
    });
    return s;
}

Rat BlockLevelFn::l1_tail() const {
    Rat s = 0;
    for_each_level([&](const std::vector<int>& t, size_t idx) {
        if (value[idx] == 0) return;
        int total = 0;
        for (int ti : t) total += ti;
        if (total > N) s += rat_abs(value[idx]) * Rat(orbit_size(t));
    });
    return s;
}

Rat BlockLevelFn::profile_inner(const std::vector<int>& j) const {
    Rat s = 0;
    for_each_level([&](const std::vector<int>& t, size_t idx) {
        if (value[idx] == 0) return;
        Int k = 1;
        for (int i = 0; i < R; ++i) k *= krawtchouk(N, j[i], t[i]);
        if (k != 0) s += value[idx] * Rat(k);
    });
    return s;
}

namespace {

// Enumerates degree profiles (j_1..j_R), j_i <= N, summing to total.
bool profiles_clean(const BlockLevelFn& f, std::vector<int>& j, int pos, int left) {
    if (pos == f.R - 1) {
        if (left > f.N) return true;
        j[pos] = left;
        return f.profile_inner(j) == 0;
    }
    for (int v = 0; v <= std::min(left, f.N); ++v) {
        j[pos] = v;
        if (!profiles_clean(f, j, pos + 1, left - v)) return false;
    }
    return true;
}

}  // namespace

int BlockLevelFn::phd(int cap) const {
    std::vector<int> j(R, 0);
    for (int d = 0; d <= cap; ++d)
        if (!profiles_clean(*this, j, 0, d)) return d;
    return cap + 1;
}

Rat BlockLevelFn::correlate(
    const std::function<std::optional<int>(const std::vector<int>&)>& f) const {
    Rat s = 0;
    for_each_level([&](const std::vector<int>& t, size_t idx) {
        if (value[idx] == 0) return;
        auto fv = f(t);
        Rat mass = value[idx] * Rat(orbit_size(t));
        s += fv ? Rat(*fv) * mass : -rat_abs(mass);
    });
    return s;
}

BlockLevelFn BlockLevelFn::operator-(const BlockLevelFn& o) const {
    if (N != o.N || R != o.R) throw std::invalid_argument("BlockLevelFn: shape mismatch");
    BlockLevelFn r(N, R);
    for (size_t i = 0; i < value.size(); ++i) r.value[i] = value[i] - o.value[i];
    return r;
}

BlockLevelFn BlockLevelFn::scaled(const Rat& c) const {
    BlockLevelFn r(N, R);
    for (size_t i = 0; i < value.size(); ++i) r.value[i] = value[i] * c;
    return r;
}

DualWitness BlockLevelFn::to_pointwise(size_t support_budget) const {
    if (N * R > 63) throw std::invalid_argument("to_pointwise: dimension too large");
    Rat support = 0;
    for_each_level([&](const std::vector<int>& t, size_t idx) {
        if (value[idx] != 0) support += Rat(orbit_size(t));
    });
    if (support > Rat(Int(support_budget)))
        throw BudgetExceeded("to_pointwise: support budget exceeded");

    DualWitness out(N * R);
    std::vector<std::vector<std::uint64_t>> level_masks(N + 1);
    for (int t = 0; t <= N; ++t) {
        if (t == 0) {
            level_masks[0] = {0};
            continue;
        }
        std::uint64_t x = (1ULL << t) - 1;
        while (x < (1ULL << N)) {
            level_masks[t].push_back(x);
            std::uint64_t lo = x | (x - 1);
            x = (lo + 1) | (((~lo & -~lo) - 1) >> (std::countr_zero(x) + 1));
        }
    }
    for_each_level([&](const std::vector<int>& t, size_t idx) {
        if (value[idx] == 0) return;
        std::vector<size_t> pick(R, 0);
        for (;;) {
            std::uint64_t mask = 0;
            for (int i = 0; i < R; ++i) mask |= level_masks[t[i]][pick[i]] << (i * N);
            out.add(mask, value[idx]);
            int i = 0;
            while (i < R && ++pick[i] == level_masks[t[i]].size()) pick[i++] = 0;
            if (i == R) break;
        }
    });
    return out;
}

BlockLevelFn block_compose_level(const DualWitness& outer, const UnivariateWitness& omega,
                                 int N) {
    const int R = outer.n;
    if (omega.T > N) throw std::invalid_argument("block_compose_level: need T <= N");
    BlockLevelFn xi(N, R);
    const Rat two_r = rat_pow(Rat(2), R);
    xi.for_each_level([&](const std::vector<int>& t, size_t idx) {
        std::uint64_t z = 0;
        Rat prod = two_r;
        for (int i = 0; i < R && prod != 0; ++i) {
            Rat wv = t[i] <= omega.T ? omega.at(t[i]) : Rat(0);
            if (wv == 0) {
                prod = 0;
                break;
            }
            if (wv < 0) z |= (1ULL << i);
            prod *= rat_abs(wv) / Rat(binomial(N, t[i]));
        }
        if (prod == 0) return;
        Rat ov = outer.at(z);
        if (ov != 0) xi.value[idx] = ov * prod;
    });
    return xi;
}

Rat tail_mass(const DualWitness& outer, const UnivariateWitness& omega, int N) {
    const int R = outer.n;
    auto [pos, neg] = omega.signed_parts();
    const Rat two_r = rat_pow(Rat(2), R);
    Rat total = 0;
    for (const auto& [z, phi] : outer.entries) {
        // Convolve the per-block level masses, capping sums at N+1.
        std::vector<Rat> conv{Rat(1)};
        for (int i = 0; i < R; ++i) {
            const auto& a = (z >> i) & 1 ? neg : pos;
            std::vector<Rat> next(std::min<size_t>(conv.size() + a.size() - 1,
                                                   static_cast<size_t>(N) + 2),
                                  Rat(0));
            for (size_t s = 0; s < conv.size(); ++s) {
                if (conv[s] == 0) continue;
                for (size_t t = 0; t < a.size(); ++t) {
                    if (a[t] == 0) continue;
                    size_t bucket = std::min(s + t, static_cast<size_t>(N) + 1);
                    next[bucket] += conv[s] * a[t];
                }
            }
            conv = std::move(next);
        }
        if (conv.size() > static_cast<size_t>(N) + 1)
            total += two_r * rat_abs(phi) * conv[N + 1];
    }
    return total;
}

Rat tail_mass_bruteforce(const DualWitness& outer, const UnivariateWitness& omega, int N) {
    const int R = outer.n;
    const int n = N * R;
    if (n > 24) throw BudgetExceeded("tail_mass_bruteforce: dimension too large");
    const std::uint64_t blockmask = (1ULL << N) - 1;
    const Rat two_r = rat_pow(Rat(2), R);
    Rat total = 0;
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        if (hamming_weight(x) <= N) continue;
        std::uint64_t z = 0;
        Rat prod = two_r;
        for (int i = 0; i < R && prod != 0; ++i) {
            int t = hamming_weight((x >> (i * N)) & blockmask);
            Rat wv = t <= omega.T ? omega.at(t) : Rat(0);
            if (wv == 0) {
                prod = 0;
                break;
            }
            if (wv < 0) z |= (1ULL << i);
            prod *= rat_abs(wv) / Rat(binomial(N, t));
        }
        if (prod == 0) continue;
        total += rat_abs(outer.at(z) * prod);
    }
    return total;
}

CorrectionResult build_correction(const BlockLevelFn& xi, int D) {
    if (D <= 0) throw std::invalid_argument("build_correction: D >= 1 required");
    const int N = xi.N, R = xi.R;
    // Free orbits (total weight <= N) get variables; tail orbits are pinned
    // to xi. Profiles of total degree < D give the orthogonality rows.
    std::vector<std::vector<int>> free_orbits;
    std::vector<Rat> free_weight;  // orbit sizes (l1 objective weights)
    xi.for_each_level([&](const std::vector<int>& t, size_t) {
        int total = 0;
        for (int ti : t) total += ti;
        if (total <= N) {
            free_orbits.push_back(t);
            free_weight.push_back(Rat(xi.orbit_size(t)));
        }
    });
    std::vector<std::vector<int>> profiles;
    {
        std::vector<int> j(R, 0);
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == R) {
                if (left == 0) profiles.push_back(j);
                return;
            }
            for (int v = 0; v <= std::min(left, N); ++v) {
                j[pos] = v;
                rec(pos + 1, left - v);
            }
            j[pos] = 0;
        };
        for (int d = 0; d < D; ++d) rec(0, d);
    }

    const int no = static_cast<int>(free_orbits.size());
    const int nv = 2 * no;  // nu_o then u_o
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    // |nu_o| <= u_o as two rows each.
    for (int o = 0; o < no; ++o) {
        std::vector<Rat> row(nv, Rat(0));
        row[o] = 1;
        row[no + o] = -1;
        A.push_back(row);
        b.push_back(Rat(0));
        row[o] = -1;
        A.push_back(std::move(row));
        b.push_back(Rat(0));
    }
    // Orthogonality: sum_o nu_o K_prof(o) = -tail contribution, per profile.
    for (const auto& j : profiles) {
        std::vector<Rat> row(nv, Rat(0));
        for (int o = 0; o < no; ++o) {
            Int k = 1;
            for (int i = 0; i < R; ++i) k *= krawtchouk(N, j[i], free_orbits[o][i]);
            row[o] = Rat(k);
        }
        Rat rhs = 0;
        xi.for_each_level([&](const std::vector<int>& t, size_t idx) {
            if (xi.value[idx] == 0) return;
            int total = 0;
            for (int ti : t) total += ti;
            if (total <= N) return;
            Int k = 1;
            for (int i = 0; i < R; ++i) k *= krawtchouk(N, j[i], t[i]);
            rhs -= xi.value[idx] * Rat(k);
        });
        A.push_back(row);
        b.push_back(rhs);
        for (auto& v : row) v = -v;
        A.push_back(std::move(row));
        b.push_back(-rhs);
    }
    std::vector<Rat> c(nv, Rat(0));
    for (int o = 0; o < no; ++o) c[no + o] = free_weight[o];

    SimplexResult s = simplex_min(A, b, c);
    if (s.status != SimplexResult::Status::Optimal)
        throw std::runtime_error("build_correction: correction LP " +
                                 std::string(s.status == SimplexResult::Status::Infeasible
                                                 ? "infeasible"
                                                 : "unbounded") +
                                 " at D=" + std::to_string(D));

    CorrectionResult res;
    res.pivots = s.pivots;
    res.target_phd = D;
    res.nu = BlockLevelFn(N, R);
    xi.for_each_level([&](const std::vector<int>& t, size_t idx) {
        int total = 0;
        for (int ti : t) total += ti;
        if (total > N) res.nu.value[idx] = xi.value[idx];
    });
    for (int o = 0; o < no; ++o) res.nu.at(free_orbits[o]) = s.x[o];
    res.nu_norm = res.nu.l1();
    res.checks.push_back(make_check("correction.norm", res.nu_norm, "<=", Rat(1, 10),
                                    res.nu_norm <= Rat(1, 10)));
    bool phd_ok = res.nu.phd(D - 1) >= D || res.nu.l1() == 0;
    res.checks.push_back(make_check("correction.phd", Rat(res.nu.phd(D - 1)), ">=", Rat(D),
                                    phd_ok));
    return res;
}

PointCorrectionResult build_correction_pointwise(const DualWitness& xi, int n, int N, int D) {
    if (n > 14) throw std::invalid_argument("build_correction_pointwise: n <= 14 only");
    std::vector<std::uint64_t> free_pts;
    for (std::uint64_t x = 0; x < (1ULL << n); ++x)
        if (hamming_weight(x) <= N) free_pts.push_back(x);
    auto chars = subsets_up_to(n, D - 1);

    const int np = static_cast<int>(free_pts.size());
    const int nv = 2 * np;
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    for (int o = 0; o < np; ++o) {
        std::vector<Rat> row(nv, Rat(0));
        row[o] = 1;
        row[np + o] = -1;
        A.push_back(row);
        b.push_back(Rat(0));
        row[o] = -1;
        A.push_back(std::move(row));
        b.push_back(Rat(0));
    }
    for (std::uint64_t sset : chars) {
        std::vector<Rat> row(nv, Rat(0));
        for (int o = 0; o < np; ++o) row[o] = character(sset, free_pts[o]);
        Rat rhs = 0;
        for (const auto& [x, v] : xi.entries)
            if (hamming_weight(x) > N) rhs -= Rat(character(sset, x)) * v;
        A.push_back(row);
        b.push_back(rhs);
        for (auto& v : row) v = -v;
        A.push_back(std::move(row));
        b.push_back(-rhs);
    }
    std::vector<Rat> c(nv, Rat(0));
    for (int o = 0; o < np; ++o) c[np + o] = 1;

    SimplexResult s = simplex_min(A, b, c);
    if (s.status != SimplexResult::Status::Optimal)
        throw std::runtime_error("build_correction_pointwise: LP not optimal");

    PointCorrectionResult res;
    res.pivots = s.pivots;
    res.nu = DualWitness(n);
    for (const auto& [x, v] : xi.entries)
        if (hamming_weight(x) > N) res.nu.add(x, v);
    for (int o = 0; o < np; ++o) res.nu.add(free_pts[o], s.x[o]);
    res.nu_norm = l1_norm(res.nu);
    res.checks.push_back(make_check("correction.norm", res.nu_norm, "<=", Rat(1, 10),
                                    res.nu_norm <= Rat(1, 10)));
    res.checks.push_back(make_check("correction.phd", Rat(pure_high_degree(res.nu, D - 1)),
                                    ">=", Rat(D), pure_high_degree(res.nu, D - 1) >= D));
    return res;
}

ZeroOutResult zero_out(const DualWitness& outer, const UnivariateWitness& omega, int N, int D,
                       int phd_cap) {
    ZeroOutResult res;
    res.xi = block_compose_level(outer, omega, N);
    res.tail = tail_mass(outer, omega, N);
    {
        Rat xi_tail = res.xi.l1_tail();
        res.checks.push_back(make_check("zero.tail_consistency", res.tail, "=", xi_tail,
                                        res.tail == xi_tail));
    }

    const int R = outer.n;
    if (res.tail == 0) {
        res.delta_effective = D;
    } else {
        // Largest Delta with tail <= (2NR)^{-2 Delta}.
        const Rat base = Rat(1) / Rat(Int(2 * N * R));
        int delta = 0;
        while (delta < 64 && res.tail <= rat_pow(base, 2 * (delta + 1))) ++delta;
        res.delta_effective = delta;
    }
    res.target_phd = std::min(D, res.delta_effective);

    if (res.target_phd > 0 && res.tail != 0) {
        CorrectionResult corr = build_correction(res.xi, res.target_phd);
        append(res.checks, corr.checks);
        res.nu_norm = corr.nu_norm;
        BlockLevelFn diff = res.xi - corr.nu;
        Rat dn = diff.l1();
        if (dn == 0) throw std::runtime_error("zero_out: xi - nu vanished");
        res.zeta = diff.scaled(Rat(1) / dn);
    } else if (res.tail == 0) {
        res.nu_norm = 0;
        res.zeta = res.xi;
    } else {
        // No usable correction window; zero the tail by truncation is NOT
        // degree-preserving, so fail loudly.
        throw std::runtime_error("zero_out: tail mass too large for any correction window");
    }

    BlockLevelFn delta_fn = res.zeta - res.xi;
    res.zeta_distance = delta_fn.l1();
    Rat rederived = res.nu_norm < 1 ? 2 * res.nu_norm / (1 - res.nu_norm) : Rat(1);
    res.checks.push_back(make_check("zero.distance_rederived", res.zeta_distance, "<=",
                                    rederived, res.zeta_distance <= rederived));
    res.checks.push_back(make_check("zero.distance", res.zeta_distance, "<=", Rat(2, 9),
                                    res.zeta_distance <= Rat(2, 9)));
    res.checks.push_back(make_check("zero.support", res.zeta.l1_tail(), "=", Rat(0),
                                    res.zeta.l1_tail() == 0));
    res.checks.push_back(make_check("zero.norm", res.zeta.l1(), "=", Rat(1),
                                    res.zeta.l1() == 1));
    int zphd = res.zeta.phd(std::max(phd_cap, res.target_phd));
    res.checks.push_back(make_check("zero.phd", Rat(zphd), ">=", Rat(res.target_phd),
                                    zphd >= res.target_phd));
    return res;
}

std::string ParameterBlock::get(const std::string& key) const {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    throw std::out_of_range("ParameterBlock: no parameter " + key);
}

ParameterBlock surj_parameter_block(const Int& R) {
    ParameterBlock pb;
    pb.name = "surj";
    const Rat delta(1, 20);
    const Rat alpha = Rat(170) / delta;  // 3400
    const Int N = 693 * R;
    pb.params.emplace_back("R", R.str());
    pb.params.emplace_back("delta", to_string(delta));
    pb.params.emplace_back("alpha", to_string(alpha));
    pb.params.emplace_back("N", N.str());
    pb.params.emplace_back("beta_sq_times_T", to_string(delta / 100));  // beta^2 = delta/(100 T)
    pb.checks.push_back(make_check("surj.alpha", alpha, "=", Rat(3400), alpha == 3400));
    pb.checks.push_back(make_check("surj.N", Rat(N), "=", Rat(693) * Rat(R), true));
    // The stated multiplier 693 does not equal ceil(20 sqrt(3400)) = 1167;
    // the literal value is reproduced and the identity reported informatively.
    Int formula = ceil_sqrt(Rat(400) * alpha);
    pb.checks.push_back(make_check("surj.N_formula_consistency", Rat(formula), "=", Rat(693),
                                   formula == 693, true,
                                   "source arithmetic: ceil(20 sqrt(alpha)) = " + formula.str()));
    return pb;
}

ParameterBlock dist_parameter_block(const Int& R, int k) {
    if (k < 2) throw std::invalid_argument("dist_parameter_block: k >= 2");
    ParameterBlock pb;
    pb.name = "dist";
    const Rat alpha = rat_pow(Rat(2 * k), k);
    const Int T = isqrt(int_pow(Int(8 * k), k) * R);      // floor((8k)^{k/2} sqrt(R))
    const Int mult = ceil_sqrt(Rat(400) * alpha);         // ceil(20 sqrt(alpha))
    const Int N = mult * R;
    const Int c = 2 * k * iceil_root(N, k);
    pb.params.emplace_back("R", R.str());
    pb.params.emplace_back("k", std::to_string(k));
    pb.params.emplace_back("alpha", to_string(alpha));
    pb.params.emplace_back("T", T.str());
    pb.params.emplace_back("N", N.str());
    pb.params.emplace_back("c", c.str());
    pb.checks.push_back(make_check("dist.alpha", alpha, "=", rat_pow(Rat(2 * k), k), true));
    // T = floor((8k)^{k/2} sqrt(R)) <=> T^2 <= (8k)^k R < (T+1)^2.
    Int lhs = T * T, rhs = int_pow(Int(8 * k), k) * R;
    pb.checks.push_back(make_check("dist.T_floor", Rat(lhs), "<=", Rat(rhs),
                                   lhs <= rhs && rhs < (T + 1) * (T + 1)));
    pb.checks.push_back(make_check("dist.N_identity", Rat(N), "=", Rat(mult) * Rat(R), true));
    return pb;
}

ParameterBlock ist_parameter_block(const Int& R, const Rat& gamma) {
    if (gamma <= 0 || gamma >= 1) throw std::invalid_argument("ist_parameter_block: gamma in (0,1)");
    ParameterBlock pb;
    pb.name = "ist";
    const Rat delta = gamma / 4;
    const Rat alpha = Rat(170) / delta;
    const Int mult = ceil_sqrt(Rat(400) * alpha);
    const Int N = mult * R;
    pb.params.emplace_back("R", R.str());
    pb.params.emplace_back("gamma", to_string(gamma));
    pb.params.emplace_back("delta", to_string(delta));
    pb.params.emplace_back("alpha", to_string(alpha));
    pb.params.emplace_back("T", N.str());
    pb.params.emplace_back("N", N.str());
    pb.checks.push_back(make_check("ist.delta", delta, "=", gamma / 4, true));
    pb.checks.push_back(make_check("ist.T_equals_N", Rat(N), "=", Rat(N), true));
    return pb;
}

namespace {

/// Among unit-norm level witnesses with vanishing moments through degree d
/// and OR-correlation at least 1 - delta, the one minimizing the
/// level-weighted mass sum_t t |omega(t)| (so the downstream tail outside
/// H_{<=N} stays as small as the degree allows). Infeasible when the
/// correlation target is unreachable at this pure high degree.
std::optional<UnivariateWitness> tail_light_or_witness(int T, const Rat& delta, int d) {
    const int nv = 2 * (T + 1);  // omega+ then omega-
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    auto push = [&](std::vector<Rat> row, const Rat& rhs) {
        A.push_back(std::move(row));
        b.push_back(rhs);
    };
    // Nonnegativity of the split parts.
    for (int v = 0; v < nv; ++v) {
        std::vector<Rat> row(nv, Rat(0));
        row[v] = -1;
        push(std::move(row), Rat(0));
    }
    // Moments 0..d vanish (as equality pairs).
    for (int j = 0; j <= d; ++j) {
        std::vector<Rat> row(nv, Rat(0));
        for (int t = 0; t <= T; ++t) {
            Rat tj = rat_pow(Rat(t), j);
            row[t] = tj;
            row[T + 1 + t] = -tj;
        }
        push(row, Rat(0));
        for (auto& v : row) v = -v;
        push(std::move(row), Rat(0));
    }
    // Unit norm (equality pair).
    {
        std::vector<Rat> row(nv, Rat(1));
        push(row, Rat(1));
        for (auto& v : row) v = -v;
        push(std::move(row), Rat(-1));
    }
    // Correlation omega(0) - sum_{t>=1} omega(t) >= 1 - delta.
    {
        std::vector<Rat> row(nv, Rat(0));
        row[0] = -1;
        row[T + 1] = 1;
        for (int t = 1; t <= T; ++t) {
            row[t] = 1;
            row[T + 1 + t] = -1;
        }
        push(std::move(row), -(Rat(1) - delta));
    }
    std::vector<Rat> c(nv, Rat(0));
    for (int t = 0; t <= T; ++t) c[t] = c[T + 1 + t] = t;
    SimplexResult s = simplex_min(A, b, c);
    if (s.status != SimplexResult::Status::Optimal) return std::nullopt;
    std::vector<std::pair<int, Rat>> vals;
    for (int t = 0; t <= T; ++t) {
        Rat v = s.x[t] - s.x[T + 1 + t];
        if (v != 0) vals.emplace_back(t, v);
    }
    UnivariateWitness w = custom_witness(T, vals);
    if (w.phd < d + 1) return std::nullopt;  // cancellation degraded the degree
    return w;
}

/// Inner OR witness at levels 0..T: the explicit recipe when nondegenerate,
/// otherwise the tail-light LP witness at the largest degree that keeps
/// correlation >= 1 - delta.
UnivariateWitness inner_or_witness(int T, const Rat& delta, CheckList& checks) {
    bool recipe_ok = delta >= Rat(1, T) && delta <= Rat(1, 2) &&
                     floor_sqrt(Rat(T) / (2 * rat_ceil(Rat(8) / delta))) >= 1;
    if (recipe_ok) {
        OrWitness ow = build_or_witness(T, delta);
        append(checks, ow.checks);
        return ow.w;
    }
    for (int d = std::min(T - 1, 6); d >= 0; --d) {
        auto w = tail_light_or_witness(T, delta, d);
        if (!w) continue;
        w->kind = "or-lp";
        w->delta = delta;
        Rat corr = w->at(0);
        for (int t = 1; t <= T; ++t) corr -= w->at(t);
        checks.push_back(make_check("or.lp_correlation", corr, ">=", Rat(1) - delta,
                                    corr >= Rat(1) - delta));
        return *w;
    }
    throw std::runtime_error("inner_or_witness: no LP witness reaches 1-delta");
}

/// LP-extracted symmetric dual for f at the largest degree cap with
/// correlation >= threshold; returned as a pointwise witness over R bits.
DualWitness outer_lp_witness(const std::vector<std::optional<int>>& levels, int R,
                             const Rat& threshold, Rat& corr_out) {
    int best = -1;
    SymmetricLPResult best_r;
    for (int d = 0; d < R; ++d) {
        SymmetricLPResult r = optimal_error_symmetric(levels, d, Variant::Bounded);
        if (r.status != SimplexResult::Status::Optimal) break;
        if (r.eps >= threshold) {
            best = d;
            best_r = r;
        } else {
            break;
        }
    }
    if (best < 0) throw std::runtime_error("outer_lp_witness: no degree reaches the threshold");
    std::vector<std::pair<int, Rat>> vals;
    for (int t = 0; t <= R; ++t)
        if (best_r.omega[t] != 0) vals.emplace_back(t, best_r.omega[t]);
    UnivariateWitness w = custom_witness(R, vals);
    corr_out = 0;
    for (int t = 0; t <= R; ++t)
        if (levels[t]) corr_out += w.at(t) * *levels[t];
    return symmetrize_witness(w, R);
}

}  // namespace

namespace {

// Recipe-scale zeroing window beta sqrt(alpha) R / (4 ln^2 R), reported
// informatively: it presumes sufficiently large R.
void push_delta_formula_check(CheckList& checks, const RatInterval& beta, const Rat& alpha,
                              int R, int delta_effective) {
    if (R < 2) return;
    RatInterval lnR = log_enclosure(Rat(R));
    RatInterval sa = sqrt_enclosure(alpha);
    Rat hi = beta.hi * sa.hi * R / (4 * lnR.lo * lnR.lo);
    checks.push_back(make_check("zero.delta_formula", Rat(delta_effective), ">=", hi,
                                Rat(delta_effective) >= hi, true,
                                "window formula; requires sufficiently large R"));
}

}  // namespace

IstWitnessResult build_ist_witness(int R, const Rat& gamma, int scale_override_N, int phd_cap) {
    IstWitnessResult res;
    ParameterBlock pb = ist_parameter_block(R, gamma);
    const Rat delta = gamma / 4;
    int N;
    if (scale_override_N > 0) {
        N = scale_override_N;
    } else {
        Int recipe(pb.get("N"));
        if (recipe > 1000)
            throw std::invalid_argument(
                "build_ist_witness: recipe N too large for exact mode; pass a scale override");
        N = static_cast<int>(to_long(recipe));
    }
    append(res.checks, pb.checks);

    res.omega = inner_or_witness(N, delta, res.checks);

    res.outer = DualWitness(R);
    res.outer.add(0, Rat(1, 2));
    res.outer.add((1ULL << R) - 1, Rat(-1, 2));
    res.checks.push_back(make_check("ist.outer_norm", l1_norm(res.outer), "=", Rat(1), true));

    // psi correlation precondition: <psi, OR_N> >= 1 - delta.
    Rat psi_corr = res.omega.at(0);
    for (int t = 1; t <= res.omega.T; ++t) psi_corr -= res.omega.at(t);
    res.checks.push_back(make_check("ist.psi_correlation", psi_corr, ">=", Rat(1) - delta,
                                    psi_corr >= Rat(1) - delta));

    res.composed = block_compose_level(res.outer, res.omega, N);

    // Double-promise correlation: G holds when every block is TRUE or at
    // most gamma*R blocks are; the target is GapAND o OR.
    auto gap_target = [&](const std::vector<int>& t) -> std::optional<int> {
        int on = 0;
        for (int ti : t)
            if (ti >= 1) ++on;
        if (on == R) return -1;
        if (Rat(on) <= gamma * R) return +1;
        return std::nullopt;
    };
    res.correlation = res.composed.correlate(gap_target);

    // Closed form 1 - delta^R - exp(-(gamma-delta) R / 3), certified from
    // above so the comparison is sound.
    Rat exp_lo = exp_enclosure(-(gamma - delta) * R / 3).lo;
    res.closed_form_lo = Rat(1) - rat_pow(delta, R) - exp_lo;
    res.checks.push_back(make_check("ist.correlation_closed_form", res.correlation, ">=",
                                    res.closed_form_lo,
                                    res.correlation >= res.closed_form_lo));

    // One-sidedness: the all-TRUE sign pattern never leaves G.
    Rat bad = 0;
    res.composed.for_each_level([&](const std::vector<int>& t, size_t idx) {
        if (res.composed.value[idx] == 0) return;
        bool all_neg = true;
        for (int i = 0; i < R; ++i) {
            Rat wv = t[i] <= res.omega.T ? res.omega.at(t[i]) : Rat(0);
            if (!(wv < 0)) all_neg = false;
        }
        if (all_neg && !gap_target(t))
            bad += rat_abs(res.composed.value[idx]) * Rat(res.composed.orbit_size(t));
    });
    res.checks.push_back(make_check("ist.one_sided_pattern_mass", bad, "=", Rat(0), bad == 0));

    int D = res.omega.phd;  // outer PHD is 1
    res.zeroed = zero_out(res.outer, res.omega, N, D, phd_cap);
    append(res.checks, res.zeroed.checks);
    push_delta_formula_check(res.checks, sqrt_enclosure(delta / N).scaled(Rat(1, 10)),
                             Rat(170) / delta, R, res.zeroed.delta_effective);

    Rat zeta_corr = res.zeroed.zeta.correlate(gap_target);
    res.checks.push_back(make_check("ist.zeta_correlation", zeta_corr, ">", Rat(1, 3),
                                    zeta_corr > Rat(1, 3)));
    return res;
}

PipelineResult build_surj_pipeline(int R, int N, int T, int phd_cap) {
    PipelineResult res;
    res.params = surj_parameter_block(R);
    append(res.checks, res.params.checks);
    const Rat delta(1, 20);

    UnivariateWitness omega = inner_or_witness(T, delta, res.checks);
    if (omega.T > N) throw std::invalid_argument("build_surj_pipeline: need T <= N");
    res.omega = omega;

    // Outer witness for AND_R at the largest PHD keeping correlation 9/10.
    std::vector<std::optional<int>> and_levels(R + 1);
    for (int t = 0; t < R; ++t) and_levels[t] = +1;
    and_levels[R] = -1;
    res.outer = outer_lp_witness(and_levels, R, Rat(9, 10), res.outer_correlation);
    res.checks.push_back(make_check("surj.outer_correlation", res.outer_correlation, ">=",
                                    Rat(9, 10), res.outer_correlation >= Rat(9, 10)));

    int D = pure_high_degree(res.outer, R) * omega.phd;
    res.zeroed = zero_out(res.outer, omega, N, D, phd_cap);
    append(res.checks, res.zeroed.checks);
    push_delta_formula_check(res.checks, sqrt_enclosure(delta / (100 * T)), Rat(3400), R,
                             res.zeroed.delta_effective);

    auto target = [&](const std::vector<int>& t) -> std::optional<int> {
        int total = 0;
        bool all_on = true;
        for (int ti : t) {
            total += ti;
            if (ti == 0) all_on = false;
        }
        if (total > N) return std::nullopt;
        return all_on ? -1 : +1;
    };
    res.final_correlation = res.zeroed.zeta.correlate(target);
    res.checks.push_back(make_check("surj.final_correlation", res.final_correlation, ">",
                                    Rat(1, 3), res.final_correlation > Rat(1, 3)));
    return res;
}

PipelineResult build_dist_pipeline(int R, int k, int N, int T, int phd_cap) {
    PipelineResult res;
    res.params = dist_parameter_block(R, k);
    append(res.checks, res.params.checks);

    ThrWitness tw = build_thr_witness(k, T, N);
    append(res.checks, tw.checks);
    if (tw.w.T > N)
        throw std::invalid_argument("build_dist_pipeline: T > N; pick a larger override N");
    res.omega = tw.w;

    // Outer witness for OR_R; composed correlation is computed exactly, so
    // the outer only needs correlation 9/10 against OR.
    std::vector<std::optional<int>> or_levels(R + 1);
    or_levels[0] = +1;
    for (int t = 1; t <= R; ++t) or_levels[t] = -1;
    res.outer = outer_lp_witness(or_levels, R, Rat(9, 10), res.outer_correlation);
    res.checks.push_back(make_check("dist.outer_correlation", res.outer_correlation, ">=",
                                    Rat(9, 10), res.outer_correlation >= Rat(9, 10)));

    int D = pure_high_degree(res.outer, R) * res.omega.phd;
    res.zeroed = zero_out(res.outer, res.omega, N, D, phd_cap);
    append(res.checks, res.zeroed.checks);
    push_delta_formula_check(res.checks, tw.beta, tw.alpha, R, res.zeroed.delta_effective);

    auto target = [&](const std::vector<int>& t) -> std::optional<int> {
        int total = 0;
        bool some_k = false;
        for (int ti : t) {
            total += ti;
            if (ti >= k) some_k = true;
        }
        if (total > N) return std::nullopt;
        return some_k ? -1 : +1;
    };
    res.final_correlation = res.zeroed.zeta.correlate(target);
    res.checks.push_back(make_check("dist.final_correlation", res.final_correlation, ">",
                                    Rat(1, 3), res.final_correlation > Rat(1, 3)));
    return res;
}

}  // namespace adeg
