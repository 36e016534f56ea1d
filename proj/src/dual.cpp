#include "adeg/dual.hpp"

#include <thread>

namespace adeg {

DualWitness DualWitness::scaled(const Rat& c) const {
    DualWitness r(n);
    if (c == 0) return r;
    for (const auto& [x, v] : entries) r.entries[x] = v * c;
    return r;
}

Rat l1_norm(const DualWitness& w) {
    Rat s = 0;
    for (const auto& [x, v] : w.entries) s += rat_abs(v);
    return s;
}

Rat character_inner(const DualWitness& w, std::uint64_t subset) {
    Rat s = 0;
    for (const auto& [x, v] : w.entries) s += character(subset, x) * v;
    return s;
}

namespace {

// Enumerates all n-bit masks of popcount k (Gosper), invoking fn until it
// returns false.
template <class Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
    if (k == 0) return fn(0ULL);
    if (k > n) return true;
    std::uint64_t v = (1ULL << k) - 1;
    const std::uint64_t limit = (n == 64) ? ~0ULL : (1ULL << n);
    while (v < limit) {
        if (!fn(v)) return false;
        std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    }
    return true;
}

}  // namespace

int pure_high_degree(const DualWitness& w, int cap, int jobs) {
    if (w.entries.empty()) return (cap < 0 ? w.n : cap) + 1;
    if (cap < 0) cap = w.n;
    for (int d = 0; d <= cap; ++d) {
        bool clean = true;
        if (jobs <= 1 || d == 0) {
            clean = for_each_subset(w.n, d, [&](std::uint64_t s) {
                return character_inner(w, s) == 0;
            });
        } else {
            // Partition the degree-d characters across threads.
            std::vector<std::uint64_t> subsets;
            for_each_subset(w.n, d, [&](std::uint64_t s) {
                subsets.push_back(s);
                return true;
            });
            std::vector<char> hit(jobs, 0);
            std::vector<std::thread> ts;
            int chunk = static_cast<int>((subsets.size() + jobs - 1) / jobs);
            for (int t = 0; t < jobs; ++t) {
                ts.emplace_back([&, t] {
                    size_t lo = static_cast<size_t>(t) * chunk;
                    size_t hi = std::min(subsets.size(), lo + chunk);
                    for (size_t i = lo; i < hi; ++i)
                        if (character_inner(w, subsets[i]) != 0) {
                            hit[t] = 1;
                            return;
                        }
                });
            }
            for (auto& th : ts) th.join();
            for (char h : hit)
                if (h) clean = false;
        }
        if (!clean) return d;
    }
    return cap + 1;
}

CorrelationReport correlation(const DualWitness& w, const PartialBoolFn& f) {
    if (w.n != f.n) throw std::invalid_argument("correlation: dimension mismatch");
    CorrelationReport r{0, 0, 0};
    for (const auto& [x, v] : w.entries) {
        auto fv = f(x);
        if (fv)
            r.on_promise += v * *fv;
        else
            r.off_penalty += rat_abs(v);
    }
    r.net = r.on_promise - r.off_penalty;
    return r;
}

std::pair<Rat, Rat> error_masses(const DualWitness& w, const PartialBoolFn& f) {
    if (w.n != f.n) throw std::invalid_argument("error_masses: dimension mismatch");
    Rat pos = 0, neg = 0;
    for (const auto& [x, v] : w.entries) {
        auto fv = f(x);
        if (!fv) continue;
        if (v > 0 && *fv == -1) pos += v;
        if (v < 0 && *fv == +1) neg -= v;
    }
    return {pos, neg};
}

DualWitness dual_block_compose(const DualWitness& outer, const DualWitness& inner,
                               size_t support_budget) {
    const int M = outer.n, m = inner.n;
    if (m * M > 63) throw std::invalid_argument("dual_block_compose: dimension too large");
    if (outer.entries.empty() || inner.entries.empty())
        throw std::invalid_argument("dual_block_compose: identically zero argument");

    double est = 1;
    for (int i = 0; i < M; ++i) est *= static_cast<double>(inner.support());
    if (est > static_cast<double>(support_budget))
        throw BudgetExceeded("dual_block_compose: support budget exceeded");

    std::vector<std::pair<std::uint64_t, Rat>> pts(inner.entries.begin(), inner.entries.end());
    const Rat two_m = rat_pow(Rat(2), M);

    DualWitness out(m * M);
    std::vector<size_t> idx(M, 0);
    for (;;) {
        std::uint64_t sign_pattern = 0, x = 0;
        Rat prod = two_m;
        for (int i = 0; i < M; ++i) {
            const auto& [xi, vi] = pts[idx[i]];
            x |= xi << (i * m);
            if (vi < 0) sign_pattern |= (1ULL << i);  // sign -1 = TRUE bit
            prod *= rat_abs(vi);
        }
        Rat oz = outer.at(sign_pattern);
        if (oz != 0) out.add(x, oz * prod);
        int i = 0;
        while (i < M && ++idx[i] == pts.size()) idx[i++] = 0;
        if (i == M) break;
    }
    return out;
}

ErrorAmplifyReport amplify_error(const DualWitness& psi, const PartialBoolFn& f, int M) {
    if (l1_norm(psi) != 1)
        throw std::invalid_argument("amplify_error: witness must have unit norm");
    DualWitness phi(M);
    phi.add(0, Rat(1, 2));
    phi.add((1ULL << M) - 1, Rat(-1, 2));

    ErrorAmplifyReport rep;
    std::tie(rep.pos_in, rep.neg_in) = error_masses(psi, f);
    rep.composed = dual_block_compose(phi, psi);
    PartialBoolFn target = compose_blocks(fn_or(M), f);
    std::tie(rep.pos_out, rep.neg_out) = error_masses(rep.composed, target);
    rep.pos_bound = Rat(M) * rep.pos_in;
    rep.neg_bound = rat_pow(2 * rep.neg_in, M) / 2;
    rep.ok = rep.pos_out <= rep.pos_bound && rep.neg_out <= rep.neg_bound;
    return rep;
}

DegreeAmplifyReport amplify_degree(const DualWitness& psi, const PartialBoolFn& f, int M,
                                   const DualWitness& rho) {
    if (rho.n != M) throw std::invalid_argument("amplify_degree: rho dimension mismatch");
    if (l1_norm(rho) != 1) throw std::invalid_argument("amplify_degree: rho must have unit norm");
    DegreeAmplifyReport rep;
    rep.rho_corr = correlation(rho, fn_or(M)).net;
    if (rep.rho_corr < Rat(9, 10))
        throw std::invalid_argument("amplify_degree: rho correlation below 9/10");
    auto [pos, neg] = error_masses(psi, f);
    rep.composed = dual_block_compose(rho, psi);
    rep.corr = correlation(rep.composed, compose_blocks(fn_or(M), f)).net;
    rep.bound = Rat(9, 10) - Rat(4 * M) * pos - Rat(4) * neg;
    rep.ok = rep.corr >= rep.bound;
    return rep;
}

OneSided one_sided_check(const DualWitness& w) {
    if (pure_high_degree(w, 1) < 1) return OneSided::NotApplicable;
    if (correlation(w, fn_or(w.n)).net <= 0) return OneSided::NotApplicable;
    return w.at(0) > 0 ? OneSided::Yes : OneSided::No;
}

}  // namespace adeg
