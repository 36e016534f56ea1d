#include "adeg/lp.hpp"

#include <algorithm>

namespace adeg {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Bounded: return "bounded";
        case Variant::Unbounded: return "unbounded";
        case Variant::DoublePromise: return "double-promise";
    }
    return "?";
}

std::vector<std::uint64_t> subsets_up_to(int n, int dmax) {
    std::vector<std::uint64_t> out;
    for (int d = 0; d <= std::min(n, dmax); ++d) {
        if (d == 0) {
            out.push_back(0);
            continue;
        }
        std::uint64_t v = (1ULL << d) - 1;
        while (v < (1ULL << n)) {
            out.push_back(v);
            std::uint64_t t = v | (v - 1);
            v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
        }
    }
    return out;
}

namespace {

struct PointSets {
    std::vector<std::pair<std::uint64_t, int>> approx;  // (point, target value)
    std::vector<std::uint64_t> bounded;                 // |p| <= 1 + eps here
};

PointSets collect_points(const PartialBoolFn& f, Variant variant,
                         const std::optional<PromiseDomain>& H) {
    if (f.n > 22) throw BudgetExceeded("optimal_error: dimension budget exceeded (n <= 22); use the symmetric collapse for symmetric functions");
    if (variant == Variant::DoublePromise && !H)
        throw std::invalid_argument("optimal_error: double-promise variant needs a promise domain");
    PointSets ps;
    for (std::uint64_t x = 0; x < (1ULL << f.n); ++x) {
        bool in_H = !H || H->contains(x);
        auto v = f(x);
        switch (variant) {
            case Variant::Bounded:
                if (v)
                    ps.approx.push_back({x, *v});
                else
                    ps.bounded.push_back(x);
                break;
            case Variant::Unbounded:
                if (v && in_H) ps.approx.push_back({x, *v});
                break;
            case Variant::DoublePromise:
                if (!in_H) break;
                if (v)
                    ps.approx.push_back({x, *v});
                else
                    ps.bounded.push_back(x);
                break;
        }
    }
    if (ps.approx.empty()) throw std::invalid_argument("optimal_error: empty approximation set");
    return ps;
}

}  // namespace

LPResult optimal_error(const PartialBoolFn& f, int d, Variant variant,
                       const std::optional<PromiseDomain>& H) {
    PointSets ps = collect_points(f, variant, H);
    const auto cols = subsets_up_to(f.n, d);
    const int nc = static_cast<int>(cols.size());
    const int nv = nc + 1;  // coefficients + eps

    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    auto add_pair = [&](std::uint64_t x, const Rat& rhs) {
        // p(x) - eps <= rhs  and  -p(x) - eps <= rhs'
        std::vector<Rat> row(nv, Rat(0));
        for (int j = 0; j < nc; ++j) row[j] = character(cols[j], x);
        row[nc] = -1;
        A.push_back(row);
        for (int j = 0; j < nc; ++j) row[j] = -row[j];
        A.push_back(std::move(row));
        b.push_back(rhs);
        b.push_back(-rhs);
    };
    for (const auto& [x, v] : ps.approx) add_pair(x, Rat(v));
    // Boundedness rows: |p(x)| <= 1 + eps.
    for (std::uint64_t x : ps.bounded) {
        std::vector<Rat> row(nv, Rat(0));
        for (int j = 0; j < nc; ++j) row[j] = character(cols[j], x);
        row[nc] = -1;
        A.push_back(row);
        for (int j = 0; j < nc; ++j) row[j] = -row[j];
        A.push_back(std::move(row));
        b.push_back(Rat(1));
        b.push_back(Rat(1));
    }

    std::vector<Rat> c(nv, Rat(0));
    c[nc] = 1;
    SimplexResult s = simplex_min(A, b, c);

    LPResult r;
    r.status = s.status;
    r.degree_cap = d;
    r.variant = variant;
    r.pivots = s.pivots;
    if (s.status != SimplexResult::Status::Optimal) return r;

    r.eps = s.value;
    r.p = MultilinearPoly(f.n, Basis::Character);
    for (int j = 0; j < nc; ++j) r.p.add_term(cols[j], s.x[j]);

    // Dual rows come in (+,-) pairs per point; psi(x) = y+ - y-.
    r.dual = DualWitness(f.n);
    size_t row = 0;
    Rat dual_obj = 0;
    for (const auto& [x, v] : ps.approx) {
        Rat psi = s.y[row] - s.y[row + 1];
        dual_obj += Rat(v) * psi;
        r.dual.add(x, psi);
        row += 2;
    }
    for (std::uint64_t x : ps.bounded) {
        Rat psi = s.y[row] - s.y[row + 1];
        dual_obj += s.y[row] + s.y[row + 1];  // b = 1 on both rows
        r.dual.add(x, psi);
        row += 2;
    }
    r.dual_objective = dual_obj;
    r.dual_norm = l1_norm(r.dual);
    r.degenerate_dual = r.dual_norm == 0;
    r.duality_ok = dual_obj == r.eps;
    return r;
}

std::pair<int, LPResult> approximate_degree(const PartialBoolFn& f, const Rat& eps,
                                            Variant variant,
                                            const std::optional<PromiseDomain>& H) {
    for (int d = 0; d <= f.n; ++d) {
        LPResult r = optimal_error(f, d, variant, H);
        if (r.status == SimplexResult::Status::Optimal && r.eps <= eps) return {d, r};
    }
    throw std::runtime_error("approximate_degree: no degree up to n achieves the target error");
}

DualWitness extract_dual(const LPResult& r) {
    if (r.status != SimplexResult::Status::Optimal)
        throw std::invalid_argument("extract_dual: instance not solved to optimality");
    if (r.degenerate_dual)
        throw std::invalid_argument(
            "extract_dual: degenerate zero dual (error is 0; no witness exists at this degree)");
    return r.dual.scaled(Rat(1) / r.dual_norm);
}

SymmetricLPResult optimal_error_symmetric(const std::vector<std::optional<int>>& levels, int d,
                                          Variant variant) {
    const int n = static_cast<int>(levels.size()) - 1;
    const int nv = d + 2;  // monomial coefficients 0..d plus eps
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    std::vector<int> row_level;

    auto monomials = [&](int t) {
        std::vector<Rat> m(d + 1);
        Rat p = 1;
        for (int j = 0; j <= d; ++j) {
            m[j] = p;
            p *= t;
        }
        return m;
    };
    auto add_pair = [&](int t, const Rat& rhs) {
        std::vector<Rat> row(nv, Rat(0));
        auto m = monomials(t);
        for (int j = 0; j <= d; ++j) row[j] = m[j];
        row[d + 1] = -1;
        A.push_back(row);
        for (int j = 0; j <= d; ++j) row[j] = -row[j];
        A.push_back(std::move(row));
        b.push_back(rhs);
        b.push_back(-rhs);
        row_level.push_back(t);
        row_level.push_back(t);
    };

    int napprox = 0;
    for (int t = 0; t <= n; ++t)
        if (levels[t]) {
            add_pair(t, Rat(*levels[t]));
            ++napprox;
        }
    if (napprox == 0) throw std::invalid_argument("optimal_error_symmetric: empty promise");
    std::vector<int> bounded_levels;
    if (variant != Variant::Unbounded) {
        for (int t = 0; t <= n; ++t)
            if (!levels[t]) {
                std::vector<Rat> row(nv, Rat(0));
                auto m = monomials(t);
                for (int j = 0; j <= d; ++j) row[j] = m[j];
                row[d + 1] = -1;
                A.push_back(row);
                for (int j = 0; j <= d; ++j) row[j] = -row[j];
                A.push_back(std::move(row));
                b.push_back(Rat(1));
                b.push_back(Rat(1));
                bounded_levels.push_back(t);
            }
    }

    std::vector<Rat> c(nv, Rat(0));
    c[d + 1] = 1;
    SimplexResult s = simplex_min(A, b, c);

    SymmetricLPResult r;
    r.status = s.status;
    r.degree_cap = d;
    r.pivots = s.pivots;
    if (s.status != SimplexResult::Status::Optimal) return r;
    r.eps = s.value;
    r.q = UnivariatePoly(std::vector<Rat>(s.x.begin(), s.x.begin() + d + 1));
    r.omega.assign(n + 1, Rat(0));
    size_t row = 0;
    Rat dual_obj = 0;
    for (int t = 0; t <= n; ++t)
        if (levels[t]) {
            Rat w = s.y[row] - s.y[row + 1];
            r.omega[t] += w;
            dual_obj += Rat(*levels[t]) * w;
            row += 2;
        }
    for (int t : bounded_levels) {
        Rat w = s.y[row] - s.y[row + 1];
        r.omega[t] += w;
        dual_obj += s.y[row] + s.y[row + 1];
        row += 2;
    }
    r.dual_objective = dual_obj;
    return r;
}

namespace {

int code_width(int top_code) {
    int w = 1;
    while ((1 << w) <= top_code) ++w;
    return w;
}

// Decodes the i-th item from the mask; set bits are binary 1s. Codes above
// R collapse to item R so padding preserves the function.
int decode_item(std::uint64_t mask, int i, int width, int R) {
    int code = static_cast<int>((mask >> (i * width)) & ((1ULL << width) - 1));
    return code > R ? R : code;
}

PartialBoolFn encoded_list_fn(int N, int R, std::string label,
                              std::function<int(const ListInput&)> eval) {
    const int width = code_width(R);
    const int n = N * width;
    if (n > 22) throw BudgetExceeded("encoded_list_fn: bit dimension budget exceeded");
    PartialBoolFn f;
    f.n = n;
    f.label = std::move(label);
    f.value = [N, R, width, eval](std::uint64_t mask) -> std::optional<int> {
        std::vector<int> items(N);
        for (int i = 0; i < N; ++i) items[i] = decode_item(mask, i, width, R);
        return eval(ListInput(N, R, std::move(items)));
    };
    return f;
}

}  // namespace

PartialBoolFn fn_dsurj_encoded(int N, int R) {
    return encoded_list_fn(N, R, "dSURJ", [](const ListInput& s) { return eval_surj(s, true); });
}

PartialBoolFn fn_ddist_encoded(int N, int R, int k) {
    return encoded_list_fn(N, R, "dDIST" + std::to_string(k),
                           [k](const ListInput& s) { return eval_dist_k(s, k, true); });
}

namespace {

ReductionReport reduction_report(const PartialBoolFn& list_fn, const PartialBoolFn& outer,
                                 const PartialBoolFn& inner, int N, const Rat& eps,
                                 std::string label) {
    ReductionReport rep;
    rep.eps = eps;
    rep.label = std::move(label);
    rep.list_degree = approximate_degree(list_fn, eps, Variant::Bounded).first;
    PartialBoolFn block = restrict_hamming(compose_blocks(outer, inner), N);
    rep.block_degree = approximate_degree(block, eps, Variant::Unbounded).first;
    rep.holds = rep.list_degree >= rep.block_degree;
    return rep;
}

}  // namespace

ReductionReport reduction_consistency_surj(int N, int R, const Rat& eps) {
    return reduction_report(fn_dsurj_encoded(N, R), fn_and(R), fn_or(N), N, eps,
                            "dSURJ vs AND o OR");
}

ReductionReport reduction_consistency_dist(int N, int R, int k, const Rat& eps) {
    return reduction_report(fn_ddist_encoded(N, R, k), fn_or(R), fn_threshold(N, k), N, eps,
                            "dDIST^k vs OR o THR^k");
}

}  // namespace adeg
