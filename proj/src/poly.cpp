#include "adeg/poly.hpp"

#include <algorithm>

namespace adeg {

void UnivariatePoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rat UnivariatePoly::operator()(const Rat& x) const {
    Rat v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
    std::vector<Rat> c(std::max(coeffs.size(), o.coeffs.size()), Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] += o.coeffs[i];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
    return *this + o.scaled(Rat(-1));
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
    if (zero() || o.zero()) return {};
    std::vector<Rat> c(coeffs.size() + o.coeffs.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (size_t j = 0; j < o.coeffs.size(); ++j) c[i + j] += coeffs[i] * o.coeffs[j];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::scaled(const Rat& c) const {
    std::vector<Rat> out(coeffs);
    for (auto& v : out) v *= c;
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::compose(const UnivariatePoly& inner) const {
    UnivariatePoly r;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        r = r * inner + UnivariatePoly::constant(*it);
    return r;
}

UnivariatePoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    UnivariatePoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        UnivariatePoly li = UnivariatePoly::constant(Rat(1));
        Rat denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = li * UnivariatePoly({-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + li.scaled(ys[i] / denom);
    }
    return acc;
}

UnivariatePoly chebyshev(int d) {
    if (d < 0) throw std::invalid_argument("chebyshev: negative degree");
    UnivariatePoly t0 = UnivariatePoly::constant(Rat(1));
    if (d == 0) return t0;
    UnivariatePoly t1 = UnivariatePoly::identity();
    for (int i = 2; i <= d; ++i) {
        UnivariatePoly t2 = t1 * UnivariatePoly({Rat(0), Rat(2)}) - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

Rat alternating_binomial_moment(int T, int j) {
    Rat s = 0;
    for (int t = 0; t <= T; ++t) {
        Rat term = Rat(binomial(T, t)) * rat_pow(Rat(t), j);
        s += (t & 1) ? -term : term;
    }
    return s;
}

MultilinearPoly MultilinearPoly::constant(int n, Basis b, const Rat& c) {
    MultilinearPoly p(n, b);
    if (c != 0) p.terms[0] = c;
    return p;
}

MultilinearPoly MultilinearPoly::variable(int n, Basis b, int i) {
    MultilinearPoly p(n, b);
    p.terms[1ULL << i] = 1;
    return p;
}

int MultilinearPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, hamming_weight(m));
    return d;
}

void MultilinearPoly::add_term(std::uint64_t mask, const Rat& c) {
    auto it = terms.find(mask);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(mask, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rat MultilinearPoly::evaluate(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("MultilinearPoly::evaluate: dimension mismatch");
    Rat v = 0;
    for (const auto& [m, c] : terms) {
        Rat prod = c;
        for (std::uint64_t rest = m; rest; rest &= rest - 1)
            prod *= x[std::countr_zero(rest)];
        v += prod;
    }
    return v;
}

Rat MultilinearPoly::evaluate_mask(std::uint64_t x) const {
    Rat v = 0;
    if (basis == Basis::Character) {
        for (const auto& [m, c] : terms) v += (hamming_weight(m & x) & 1) ? -c : c;
    } else {
        for (const auto& [m, c] : terms)
            if ((m & x) == m) v += c;  // all variables of the monomial are 1
    }
    return v;
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& o) const {
    if (n != o.n || basis != o.basis) throw std::invalid_argument("poly add: mismatch");
    MultilinearPoly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

MultilinearPoly MultilinearPoly::operator-(const MultilinearPoly& o) const {
    return *this + o.scaled(Rat(-1));
}

MultilinearPoly MultilinearPoly::operator*(const MultilinearPoly& o) const {
    if (n != o.n || basis != o.basis) throw std::invalid_argument("poly mul: mismatch");
    MultilinearPoly r(n, basis);
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) {
            // Character: x_i^2 = 1 so monomials combine by symmetric
            // difference; ZeroOne: y_i^2 = y_i so they combine by union.
            std::uint64_t m = basis == Basis::Character ? (m1 ^ m2) : (m1 | m2);
            r.add_term(m, c1 * c2);
        }
    return r;
}

MultilinearPoly MultilinearPoly::scaled(const Rat& c) const {
    MultilinearPoly r(n, basis);
    if (c == 0) return r;
    for (const auto& [m, v] : terms) r.terms[m] = v * c;
    return r;
}

MultilinearPoly MultilinearPoly::to_basis(Basis target) const {
    if (target == basis) return *this;
    // x_i = 1 - 2 y_i maps {-1,1} to {0,1} values and vice versa y_i = (1-x_i)/2.
    MultilinearPoly r(n, target);
    for (const auto& [m, c] : terms) {
        MultilinearPoly term = MultilinearPoly::constant(n, target, c);
        for (std::uint64_t rest = m; rest; rest &= rest - 1) {
            int i = std::countr_zero(rest);
            MultilinearPoly sub(n, target);
            if (target == Basis::ZeroOne) {
                sub.add_term(0, Rat(1));
                sub.add_term(1ULL << i, Rat(-2));
            } else {
                sub.add_term(0, Rat(1, 2));
                sub.add_term(1ULL << i, Rat(-1, 2));
            }
            term = term * sub;
        }
        r = r + term;
    }
    return r;
}

UnivariatePoly symmetrize(const MultilinearPoly& p) {
    const int n = p.n;
    // Average of each monomial over the level-t slice depends only on |S|:
    // in the Character basis it is K_j(t)/C(n,t) with
    // K_j(t) = sum_i (-1)^i C(j,i) C(n-j,t-i); in ZeroOne it is
    // C(t,j)/C(n,j) (fraction of j-subsets inside the support).
    std::vector<std::vector<Rat>> avg(n + 1, std::vector<Rat>(n + 1, Rat(0)));
    for (int j = 0; j <= n; ++j)
        for (int t = 0; t <= n; ++t) {
            if (p.basis == Basis::Character) {
                Int k = 0;
                for (int i = 0; i <= std::min(j, t); ++i) {
                    Int term = binomial(j, i) * binomial(n - j, t - i);
                    k += (i & 1) ? -term : term;
                }
                avg[j][t] = Rat(k, binomial(n, t));
            } else {
                avg[j][t] = Rat(binomial(t, j), binomial(n, j));
            }
        }
    std::vector<Rat> xs(n + 1), ys(n + 1, Rat(0));
    for (int t = 0; t <= n; ++t) xs[t] = t;
    for (const auto& [m, c] : p.terms) {
        int j = hamming_weight(m);
        for (int t = 0; t <= n; ++t) ys[t] += c * avg[j][t];
    }
    return interpolate(xs, ys);
}

MultilinearPoly symmetric_from_univariate(int n, Basis basis, const UnivariatePoly& q) {
    // |x| as a multilinear polynomial: sum y_i (ZeroOne) or (n - sum x_i)/2.
    MultilinearPoly weight(n, basis);
    if (basis == Basis::ZeroOne) {
        for (int i = 0; i < n; ++i) weight.add_term(1ULL << i, Rat(1));
    } else {
        weight.add_term(0, Rat(n, 2));
        for (int i = 0; i < n; ++i) weight.add_term(1ULL << i, Rat(-1, 2));
    }
    MultilinearPoly r(n, basis);
    for (auto it = q.coeffs.rbegin(); it != q.coeffs.rend(); ++it)
        r = r * weight + MultilinearPoly::constant(n, basis, *it);
    return r;
}

MultilinearPoly compose_blockwise(const MultilinearPoly& outer,
                                  const std::vector<MultilinearPoly>& inner) {
    if (static_cast<int>(inner.size()) != outer.n)
        throw std::invalid_argument("compose_blockwise: need one inner polynomial per variable");
    if (inner.empty()) {
        MultilinearPoly r(0, outer.basis);
        for (const auto& [m, c] : outer.terms) r.add_term(0, c);
        return r;
    }
    const int n = inner[0].n;
    std::uint64_t seen = 0;
    for (const auto& q : inner) {
        if (q.n != n || q.basis != outer.basis)
            throw std::invalid_argument("compose_blockwise: inner polynomial mismatch");
        std::uint64_t support = 0;
        for (const auto& [m, c] : q.terms) support |= m;
        if (support & seen) throw std::invalid_argument("compose_blockwise: overlapping blocks");
        seen |= support;
    }
    MultilinearPoly r(n, outer.basis);
    for (const auto& [m, c] : outer.terms) {
        MultilinearPoly prod = MultilinearPoly::constant(n, outer.basis, c);
        for (std::uint64_t rest = m; rest; rest &= rest - 1)
            prod = prod * inner[std::countr_zero(rest)];
        r = r + prod;
    }
    return r;
}

LowWeightOrApprox build_V(int T, const Rat& eps, int N) {
    if (T < 1 || T > N) throw std::invalid_argument("build_V: need 1 <= T <= N");
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("build_V: eps outside (0,1)");
    const Rat arg = Rat(1) + Rat(1, T);
    int d = 0;
    Rat M;
    for (;; ++d) {
        M = chebyshev(d)(arg) + 1;
        if (M >= Rat(2) / eps) break;
    }
    UnivariatePoly td = chebyshev(d);
    // V(t) = (1 - 1/M) - T_d(1 + 1/T - t/T) / M
    UnivariatePoly shifted = td.compose(UnivariatePoly({arg, Rat(-1, T)}));
    UnivariatePoly v = UnivariatePoly::constant(Rat(1) - Rat(1) / M) - shifted.scaled(Rat(1) / M);
    LowWeightOrApprox out;
    out.v = v;
    out.d = d;
    out.M = M;
    out.profile.n = N;
    out.profile.values.resize(N + 1);
    for (int t = 0; t <= N; ++t) out.profile.values[t] = v(Rat(t));
    out.off_promise_bound = Rat(1) + td(Rat(N, T)) / M;
    return out;
}

Rat growth_bound(const MultilinearPoly& p, const std::vector<Rat>& x, bool skip_check) {
    if (p.basis != Basis::ZeroOne)
        throw std::invalid_argument("growth_bound: expects ZeroOne basis");
    if (!skip_check) {
        if (p.n > 20) throw std::invalid_argument("growth_bound: boundedness check needs n <= 20");
        for (std::uint64_t y = 0; y < (1ULL << p.n); ++y) {
            Rat v = p.evaluate_mask(y);
            if (v < 0 || v > 1)
                throw std::invalid_argument("growth_bound: polynomial not [0,1]-bounded on cube");
        }
    }
    Rat b = 1;
    for (const Rat& xi : x) b *= rat_abs(Rat(1) - xi) + rat_abs(xi);
    return b;
}

UnivariatePoly amplifier() { return UnivariatePoly({Rat(0), Rat(0), Rat(3), Rat(-2)}); }

AmplifyResult amplify_univariate(const UnivariatePoly& q, const Rat& err_in,
                                 const Rat& eps_target) {
    if (err_in >= Rat(1, 2)) throw std::invalid_argument("amplify: error must be below 1/2");
    AmplifyResult r{q, err_in, 0};
    const UnivariatePoly a = amplifier();
    while (r.err > eps_target) {
        r.q = a.compose(r.q);
        // A is monotone on [0,1]; the new worst-case error is A(err).
        r.err = a(r.err);
        ++r.iterations;
    }
    return r;
}

MultilinearPoly amplify(const MultilinearPoly& p, const Rat& err_in, const Rat& eps_target) {
    if (p.basis != Basis::ZeroOne)
        throw std::invalid_argument("amplify: expects ZeroOne basis");
    AmplifyResult stages = amplify_univariate(UnivariatePoly::identity(), err_in, eps_target);
    MultilinearPoly r = p;
    for (int i = 0; i < stages.iterations; ++i) {
        // A(r) = 3r^2 - 2r^3 with multilinear reduction.
        MultilinearPoly r2 = r * r;
        r = r2.scaled(Rat(3)) - (r2 * r).scaled(Rat(2));
    }
    return r;
}

}  // namespace adeg
