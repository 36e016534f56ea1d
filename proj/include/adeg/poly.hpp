#pragma once

#include "adeg/cube.hpp"

#include <map>

namespace adeg {

/// Univariate polynomial with exact rational coefficients (monomial basis,
/// trailing coefficient nonzero unless zero).
struct UnivariatePoly {
    std::vector<Rat> coeffs;  // coeffs[i] multiplies x^i

    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rat> c) : coeffs(std::move(c)) { trim(); }
    static UnivariatePoly constant(const Rat& c) { return UnivariatePoly({c}); }
    static UnivariatePoly identity() { return UnivariatePoly({Rat(0), Rat(1)}); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    bool zero() const { return coeffs.empty(); }

    Rat operator()(const Rat& x) const;
    UnivariatePoly operator+(const UnivariatePoly& o) const;
    UnivariatePoly operator-(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const UnivariatePoly& o) const;
    UnivariatePoly scaled(const Rat& c) const;
    /// this(inner(x)), exact.
    UnivariatePoly compose(const UnivariatePoly& inner) const;

    void trim();
};

/// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
UnivariatePoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// Chebyshev polynomial T_d via the recurrence T_d = 2x T_{d-1} - T_{d-2}.
UnivariatePoly chebyshev(int d);

/// sum_{t=0}^{T} (-1)^t C(T,t) t^j; zero exactly for j < T.
Rat alternating_binomial_moment(int T, int j);

/// Values of a symmetric function/polynomial per Hamming level 0..n.
struct SymmetricProfile {
    int n = 0;
    std::vector<Rat> values;  // size n+1

    Rat operator()(int t) const { return values.at(t); }
};

enum class Basis { Character, ZeroOne };

/// Exact multilinear polynomial over n variables. In the Character basis the
/// variables live on {-1,1} and monomials are chi_S with x_i^2 = 1; in the
/// ZeroOne basis variables live on {0,1} with y_i^2 = y_i.
struct MultilinearPoly {
    int n = 0;
    Basis basis = Basis::Character;
    std::map<std::uint64_t, Rat> terms;  // subset mask -> coefficient

    MultilinearPoly() = default;
    MultilinearPoly(int n_, Basis b) : n(n_), basis(b) {}

    static MultilinearPoly constant(int n, Basis b, const Rat& c);
    static MultilinearPoly variable(int n, Basis b, int i);

    int degree() const;
    bool zero() const { return terms.empty(); }

    void add_term(std::uint64_t mask, const Rat& c);

    /// Exact evaluation at a rational point (length n).
    Rat evaluate(const std::vector<Rat>& x) const;
    /// Evaluation at a cube point given as a TRUE-bitmask. In the Character
    /// basis a set bit means coordinate -1; in ZeroOne it means 1.
    Rat evaluate_mask(std::uint64_t x) const;

    MultilinearPoly operator+(const MultilinearPoly& o) const;
    MultilinearPoly operator-(const MultilinearPoly& o) const;
    MultilinearPoly operator*(const MultilinearPoly& o) const;
    MultilinearPoly scaled(const Rat& c) const;

    MultilinearPoly to_basis(Basis target) const;
};

/// Average of p over each Hamming level, interpolated into a univariate
/// polynomial of degree <= deg p (Minsky-Papert symmetrization).
UnivariatePoly symmetrize(const MultilinearPoly& p);

/// The symmetric multilinear polynomial agreeing with q(|x|) on the cube.
MultilinearPoly symmetric_from_univariate(int n, Basis basis, const UnivariatePoly& q);

/// outer(inner_1, ..., inner_k) where the inner polynomials share outer's
/// basis and live on pairwise disjoint variable sets of a common n-variable
/// space. Throws on overlapping supports.
MultilinearPoly compose_blockwise(const MultilinearPoly& outer,
                                  const std::vector<MultilinearPoly>& inner);

/// OR-approximator on low Hamming weight: least Chebyshev degree d with
/// M = T_d(1+1/T)+1 >= 2/eps, and V(t) = (1-1/M) - T_d(1 + 1/T - t/T)/M.
/// profile(0) = 0, profile(t) in [1-eps, 1] for 1 <= t <= T, and
/// |profile(t)| <= 1 + T_d(N/T)/M above T.
struct LowWeightOrApprox {
    UnivariatePoly v;         // univariate in the Hamming weight t
    SymmetricProfile profile; // values on [N]_0
    int d = 0;                // Chebyshev degree used
    Rat M;
    Rat off_promise_bound;    // 1 + T_d(N/T)/M
};
LowWeightOrApprox build_V(int T, const Rat& eps, int N);

/// prod_i (|1-x_i| + |x_i|), an upper bound on |p(x)| for any multilinear p
/// (ZeroOne basis) bounded in [0,1] on the cube. Boundedness is checked
/// exhaustively (n <= 20) unless skip_check.
Rat growth_bound(const MultilinearPoly& p, const std::vector<Rat>& x,
                 bool skip_check = false);

/// The cubic amplifier A(z) = 3z^2 - 2z^3 (fixed points 0, 1/2, 1).
UnivariatePoly amplifier();

/// Iterates A on q until a [0,err]/[1-err,1] approximator reaches
/// eps_target; returns the composed polynomial and the certified error.
struct AmplifyResult {
    UnivariatePoly q;
    Rat err;
    int iterations = 0;
};
AmplifyResult amplify_univariate(const UnivariatePoly& q, const Rat& err_in,
                                 const Rat& eps_target);

/// Same amplification applied to a multilinear polynomial in the ZeroOne
/// basis (a 1/3-or-better approximator of a Boolean function).
MultilinearPoly amplify(const MultilinearPoly& p, const Rat& err_in, const Rat& eps_target);

}  // namespace adeg
