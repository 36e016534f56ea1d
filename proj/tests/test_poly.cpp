#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adeg/poly.hpp"

#include <cmath>
#include <random>

using namespace adeg;

namespace {

// Brute-force level averages, the oracle for symmetrization.
std::vector<Rat> level_averages(const MultilinearPoly& p) {
    std::vector<Rat> sum(p.n + 1, Rat(0));
    for (std::uint64_t x = 0; x < (1ULL << p.n); ++x)
        sum[hamming_weight(x)] += p.evaluate_mask(x);
    for (int t = 0; t <= p.n; ++t) sum[t] /= Rat(binomial(p.n, t));
    return sum;
}

MultilinearPoly random_poly(int n, int terms, std::mt19937_64& rng) {
    MultilinearPoly p(n, Basis::Character);
    for (int i = 0; i < terms; ++i) {
        std::uint64_t mask = rng() & ((1ULL << n) - 1);
        p.add_term(mask, Rat(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7)));
    }
    return p;
}

}  // namespace

TEST_CASE("multilinear evaluation") {
    MultilinearPoly chi1 = MultilinearPoly::variable(2, Basis::Character, 0);
    CHECK(chi1.evaluate({Rat(-1), Rat(1)}) == -1);
    CHECK(MultilinearPoly::constant(2, Basis::Character, Rat(1)).evaluate({Rat(5), Rat(7)}) == 1);

    MultilinearPoly chi12(2, Basis::Character);
    chi12.add_term(0b11, Rat(1));
    CHECK(chi12.evaluate({Rat(1, 2), Rat(1, 3)}) == Rat(1, 6));
    CHECK_THROWS_AS(chi12.evaluate({Rat(1)}), std::invalid_argument);
}

TEST_CASE("character multiplication uses x^2 = 1") {
    MultilinearPoly x0 = MultilinearPoly::variable(3, Basis::Character, 0);
    MultilinearPoly sq = x0 * x0;
    CHECK(sq.degree() == 0);
    CHECK(sq.evaluate_mask(0b101) == 1);

    MultilinearPoly y0 = MultilinearPoly::variable(3, Basis::ZeroOne, 0);
    MultilinearPoly ysq = y0 * y0;
    CHECK(ysq.degree() == 1);  // y^2 = y
}

TEST_CASE("basis conversion round-trips") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        MultilinearPoly p = random_poly(4, 5, rng);
        MultilinearPoly q = p.to_basis(Basis::ZeroOne);
        for (std::uint64_t x = 0; x < 16; ++x) CHECK(p.evaluate_mask(x) == q.evaluate_mask(x));
        MultilinearPoly back = q.to_basis(Basis::Character);
        for (std::uint64_t x = 0; x < 16; ++x) CHECK(p.evaluate_mask(x) == back.evaluate_mask(x));
    }
}

TEST_CASE("chebyshev recurrence and bounds") {
    UnivariatePoly t2 = chebyshev(2);
    CHECK(t2.coeffs == std::vector<Rat>{Rat(-1), Rat(0), Rat(2)});
    CHECK(t2(Rat(3, 2)) == Rat(7, 2));

    // T_2(2) = 7 >= e^2/2 ~ 3.694
    CHECK(chebyshev(2)(Rat(2)) == 7);
    CHECK(Rat(7) >= Rat(3694, 1000));

    // |T_3(2)| = 26 <= (2*2)^3 = 64
    CHECK(rat_abs(chebyshev(3)(Rat(2))) == 26);
    CHECK(rat_abs(chebyshev(3)(Rat(2))) <= 64);

    for (int d = 0; d <= 16; ++d) {
        UnivariatePoly td = chebyshev(d);
        for (int i = -25; i <= 25; ++i) {
            Rat x(i, 25);
            CHECK(rat_abs(td(x)) <= 1);
        }
    }
}

TEST_CASE("alternating binomial moments vanish below T") {
    for (int T = 1; T <= 12; ++T) {
        for (int j = 0; j < T; ++j) CHECK(alternating_binomial_moment(T, j) == 0);
        CHECK(alternating_binomial_moment(T, T) != 0);
    }
}

TEST_CASE("symmetrization matches brute-force level averages") {
    MultilinearPoly chi1 = MultilinearPoly::variable(2, Basis::Character, 0);
    UnivariatePoly q = symmetrize(chi1);
    CHECK(q.coeffs == std::vector<Rat>{Rat(1), Rat(-1)});  // q(t) = 1 - t

    UnivariatePoly qc = symmetrize(MultilinearPoly::constant(3, Basis::Character, Rat(5, 7)));
    CHECK(qc.degree() == 0);
    CHECK(qc(Rat(2)) == Rat(5, 7));

    MultilinearPoly chi12(3, Basis::Character);
    chi12.add_term(0b011, Rat(1));
    UnivariatePoly q12 = symmetrize(chi12);
    auto avg = level_averages(chi12);
    for (int t = 0; t <= 3; ++t) CHECK(q12(Rat(t)) == avg[t]);
}

TEST_CASE("symmetrization: degree never grows (random)") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + static_cast<int>(rng() % 9);
        MultilinearPoly p = random_poly(n, 4, rng);
        UnivariatePoly q = symmetrize(p);
        CHECK(q.degree() <= p.degree());
        if (it % 20 == 0) {
            auto avg = level_averages(p);
            for (int t = 0; t <= n; ++t) CHECK(q(Rat(t)) == avg[t]);
        }
    }
}

TEST_CASE("symmetric polynomial from univariate values") {
    UnivariatePoly q({Rat(1), Rat(-2), Rat(1, 3)});
    for (Basis b : {Basis::Character, Basis::ZeroOne}) {
        MultilinearPoly p = symmetric_from_univariate(4, b, q);
        for (std::uint64_t x = 0; x < 16; ++x)
            CHECK(p.evaluate_mask(x) == q(Rat(hamming_weight(x))));
        CHECK(p.degree() <= 2);
    }
}

TEST_CASE("blockwise composition") {
    MultilinearPoly outer = MultilinearPoly::variable(1, Basis::Character, 0);
    std::mt19937_64 rng(5);
    MultilinearPoly inner = random_poly(3, 4, rng);
    MultilinearPoly composed = compose_blockwise(outer, {inner});
    for (std::uint64_t x = 0; x < 8; ++x)
        CHECK(composed.evaluate_mask(x) == inner.evaluate_mask(x));

    // AND_2 = (1 + x + y - xy)/2 composed with single variables is itself.
    MultilinearPoly and2(2, Basis::Character);
    and2.add_term(0b00, Rat(1, 2));
    and2.add_term(0b01, Rat(1, 2));
    and2.add_term(0b10, Rat(1, 2));
    and2.add_term(0b11, Rat(-1, 2));
    PartialBoolFn f = fn_and(2);
    for (std::uint64_t x = 0; x < 4; ++x) CHECK(and2.evaluate_mask(x) == *f(x));
    MultilinearPoly vars0 = MultilinearPoly::variable(2, Basis::Character, 0);
    MultilinearPoly vars1 = MultilinearPoly::variable(2, Basis::Character, 1);
    MultilinearPoly same = compose_blockwise(and2, {vars0, vars1});
    for (std::uint64_t x = 0; x < 4; ++x) CHECK(same.evaluate_mask(x) == and2.evaluate_mask(x));

    CHECK_THROWS_AS(compose_blockwise(and2, {vars0, vars0}), std::invalid_argument);
}

TEST_CASE("blockwise composition: degree multiplies at most") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 20; ++it) {
        MultilinearPoly outer = random_poly(2, 3, rng);
        MultilinearPoly in0(6, Basis::Character), in1(6, Basis::Character);
        for (int t = 0; t < 3; ++t) {
            in0.add_term(rng() & 0b000111, Rat(1 + static_cast<long>(rng() % 5)));
            in1.add_term(rng() & 0b111000, Rat(1 + static_cast<long>(rng() % 5)));
        }
        if (in0.zero() || in1.zero()) continue;
        MultilinearPoly comp = compose_blockwise(outer, {in0, in1});
        int bound = outer.degree() * std::max(in0.degree(), in1.degree());
        CHECK(comp.degree() <= bound);
    }
}

TEST_CASE("composition error bound eps + delta*n, exhaustively") {
    const Rat eps(1, 20), delta(1, 30);
    MultilinearPoly outer(2, Basis::ZeroOne);
    outer.add_term(0, eps / 2);
    outer.add_term(0b11, Rat(1) - eps);
    auto inner_or = [&](int shift) {
        MultilinearPoly prod = MultilinearPoly::constant(6, Basis::ZeroOne, Rat(1));
        for (int i = 0; i < 3; ++i) {
            MultilinearPoly fpoly(6, Basis::ZeroOne);
            fpoly.add_term(0, Rat(1));
            fpoly.add_term(1ULL << (shift + i), Rat(-1));
            prod = prod * fpoly;
        }
        MultilinearPoly orp = MultilinearPoly::constant(6, Basis::ZeroOne, Rat(1)) - prod;
        MultilinearPoly q = orp.scaled(Rat(1) - delta);
        q.add_term(0, delta / 2);
        return q;
    };
    MultilinearPoly q0 = inner_or(0), q1 = inner_or(3);
    MultilinearPoly comp = compose_blockwise(outer, {q0, q1});
    for (std::uint64_t y = 0; y < 64; ++y) {
        int or0 = (y & 0b000111) ? 1 : 0;
        int or1 = (y & 0b111000) ? 1 : 0;
        int target = or0 & or1;
        Rat err = rat_abs(comp.evaluate_mask(y) - target);
        CHECK(err <= eps + 2 * delta);
    }
}

TEST_CASE("low-weight OR approximator") {
    const int T = 4, N = 16;
    const Rat eps(1, 10);
    LowWeightOrApprox V = build_V(T, eps, N);
    CHECK(V.profile(0) == 0);
    CHECK(V.M >= Rat(2) / eps);
    if (V.d > 0) CHECK(chebyshev(V.d - 1)(Rat(1) + Rat(1, T)) + 1 < Rat(2) / eps);
    for (int t = 1; t <= T; ++t) {
        CHECK(V.profile(t) >= Rat(1) - eps);
        CHECK(V.profile(t) <= 1);
    }
    for (int t = T + 1; t <= N; ++t) CHECK(rat_abs(V.profile(t)) <= V.off_promise_bound);

    LowWeightOrApprox Vfull = build_V(6, Rat(1, 10), 6);
    for (int t = 1; t <= 6; ++t) {
        CHECK(Vfull.profile(t) >= Rat(9, 10));
        CHECK(Vfull.profile(t) <= 1);
    }
}

TEST_CASE("low-weight OR approximator: degree scaling logged") {
    for (int T : {2, 4, 8, 16}) {
        for (int loge : {2, 4, 6}) {
            Rat eps = Rat(1) / Rat(Int(1) << loge);
            LowWeightOrApprox V = build_V(T, eps, T);
            double bound = 4.0 * std::sqrt(static_cast<double>(T)) * loge;
            CHECK(V.d <= bound);
        }
    }
}

TEST_CASE("growth bound") {
    MultilinearPoly p(2, Basis::ZeroOne);
    p.add_term(0b01, Rat(1, 2));
    p.add_term(0b10, Rat(1, 2));
    CHECK(growth_bound(p, {Rat(0), Rat(1)}) == 1);
    CHECK(growth_bound(p, {Rat(2), Rat(0)}) == 3);

    MultilinearPoly bad(1, Basis::ZeroOne);
    bad.add_term(0b1, Rat(2));
    CHECK_THROWS_AS(growth_bound(bad, {Rat(1, 2)}), std::invalid_argument);

    // Random [0,1]-interpolating polynomials on n=4 obey the bound at a
    // point with one coordinate pushed to 3.
    std::mt19937_64 rng(41);
    for (int it = 0; it < 100; ++it) {
        MultilinearPoly q(4, Basis::ZeroOne);
        std::vector<Rat> vals(16);
        for (auto& v : vals) v = Rat(static_cast<long>(rng() % 11), 10);
        for (std::uint64_t s = 0; s < 16; ++s) {
            Rat c = 0;
            for (std::uint64_t a = s;; a = (a - 1) & s) {
                int sign = (hamming_weight(s) - hamming_weight(a)) & 1;
                c += sign ? -vals[a] : vals[a];
                if (a == 0) break;
            }
            q.add_term(s, c);
        }
        std::vector<Rat> x{Rat(3), Rat(0), Rat(1), Rat(static_cast<long>(rng() % 2))};
        Rat bound = growth_bound(q, x);
        CHECK(bound == 5);
        CHECK(rat_abs(q.evaluate(x)) <= bound);
    }
}

TEST_CASE("amplifier polynomial") {
    UnivariatePoly a = amplifier();
    CHECK(a(Rat(0)) == 0);
    CHECK(a(Rat(1)) == 1);
    CHECK(a(Rat(1, 2)) == Rat(1, 2));
    CHECK(a(Rat(1, 3)) == Rat(7, 27));
    CHECK(a(Rat(2, 3)) == Rat(20, 27));
    CHECK(a(Rat(1, 3)) < Rat(1, 3));
    CHECK(a(Rat(2, 3)) > Rat(2, 3));

    AmplifyResult one = amplify_univariate(UnivariatePoly::identity(), Rat(1, 3), Rat(7, 27));
    CHECK(one.iterations == 1);
    CHECK(one.err == Rat(7, 27));

    AmplifyResult res =
        amplify_univariate(UnivariatePoly::identity(), Rat(1, 3), Rat(1, 1000000));
    CHECK(res.err <= Rat(1, 1000000));
    CHECK(res.q(Rat(0)) == 0);
    CHECK(res.q(Rat(1)) == 1);
    CHECK(res.q(Rat(1, 3)) <= res.err);
    CHECK(res.q(Rat(2, 3)) >= 1 - res.err);
}

TEST_CASE("multilinear amplification") {
    // A 1/3-approximator of OR_2 in the ZeroOne basis, amplified to 1/100.
    MultilinearPoly p(2, Basis::ZeroOne);
    MultilinearPoly prod(2, Basis::ZeroOne);
    prod.add_term(0, Rat(1));
    for (int i = 0; i < 2; ++i) {
        MultilinearPoly f(2, Basis::ZeroOne);
        f.add_term(0, Rat(1));
        f.add_term(1ULL << i, Rat(-1));
        prod = prod * f;
    }
    p = MultilinearPoly::constant(2, Basis::ZeroOne, Rat(1)) - prod;
    p = p.scaled(Rat(2, 3));
    p.add_term(0, Rat(1, 6));  // values 1/6 and 5/6: a 1/3-approximator

    MultilinearPoly amped = amplify(p, Rat(1, 3), Rat(1, 100));
    for (std::uint64_t y = 0; y < 4; ++y) {
        int target = y ? 1 : 0;
        CHECK(rat_abs(amped.evaluate_mask(y) - target) <= Rat(1, 100));
    }
}
