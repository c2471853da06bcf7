#include "n2vx/affine_sl2.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

using namespace n2vx;

namespace {

std::vector<AffineMode> mode_sweep(long max_index) {
    std::vector<AffineMode> ms;
    for (long n = -max_index; n <= max_index; ++n) {
        ms.push_back(AffineMode::e(n));
        ms.push_back(AffineMode::h(n));
        ms.push_back(AffineMode::f(n));
    }
    ms.push_back(AffineMode::k());
    return ms;
}

AffineElement adjoint_elem(const AffineElement& e) {
    AffineElement out;
    for (const auto& [m, c] : e) add_term(out, affine_adjoint(m), c);
    return out;
}

AffineVec unit(const AffineMonomial& m) {
    AffineVec v;
    v.emplace(m, Rational(1));
    return v;
}

AffineVec apply_elem(const AffineVerma& M, const AffineElement& e, const AffineVec& v) {
    AffineVec out;
    for (const auto& [m, c] : e) AffinePbw::axpy(out, c, M.apply(m, v));
    return out;
}

Rational rnd_rat(std::mt19937& gen) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(gen), den(gen));
}

}  // namespace

TEST_CASE("mode printing and adjoint") {
    CHECK(AffineMode::e(-2).str() == "e(-2)");
    CHECK(AffineMode::h(0).str() == "h(0)");
    CHECK(AffineMode::f(3).str() == "f(3)");
    CHECK(AffineMode::k().str() == "k");
    CHECK(affine_adjoint(AffineMode::e(2)) == AffineMode::f(-2));
    CHECK(affine_adjoint(AffineMode::f(-1)) == AffineMode::e(1));
    CHECK(affine_adjoint(AffineMode::h(3)) == AffineMode::h(-3));
    CHECK(affine_adjoint(AffineMode::k()) == AffineMode::k());
}

TEST_CASE("bracket oracles") {
    AffineElement want;

    // [e(1), f(-1)] = h(0) + k
    add_term(want, AffineMode::h(0), Rational(1));
    add_term(want, AffineMode::k(), Rational(1));
    CHECK(affine_bracket(AffineMode::e(1), AffineMode::f(-1)) == want);

    // [e(2), f(-2)] = h(0) + 2k
    want.clear();
    add_term(want, AffineMode::h(0), Rational(1));
    add_term(want, AffineMode::k(), Rational(2));
    CHECK(affine_bracket(AffineMode::e(2), AffineMode::f(-2)) == want);

    // [e(1), f(2)] = h(3), no pairing term away from total mode zero
    want.clear();
    add_term(want, AffineMode::h(3), Rational(1));
    CHECK(affine_bracket(AffineMode::e(1), AffineMode::f(2)) == want);

    // [h(a), e(b)] = 2 e(a+b), [h(a), f(b)] = -2 f(a+b)
    want.clear();
    add_term(want, AffineMode::e(1), Rational(2));
    CHECK(affine_bracket(AffineMode::h(2), AffineMode::e(-1)) == want);
    want.clear();
    add_term(want, AffineMode::f(-3), Rational(-2));
    CHECK(affine_bracket(AffineMode::h(-1), AffineMode::f(-2)) == want);

    // [h(2), h(-2)] = 4k, [h(1), h(1)] = 0
    want.clear();
    add_term(want, AffineMode::k(), Rational(4));
    CHECK(affine_bracket(AffineMode::h(2), AffineMode::h(-2)) == want);
    CHECK(affine_bracket(AffineMode::h(1), AffineMode::h(1)).empty());

    // nilpotent directions commute with themselves
    CHECK(affine_bracket(AffineMode::e(3), AffineMode::e(-3)).empty());
    CHECK(affine_bracket(AffineMode::f(2), AffineMode::f(-2)).empty());

    // k is central
    for (const auto& m : mode_sweep(2)) {
        CHECK(affine_bracket(AffineMode::k(), m).empty());
        CHECK(affine_bracket(m, AffineMode::k()).empty());
    }
}

TEST_CASE("antisymmetry") {
    const auto ms = mode_sweep(3);
    for (const auto& a : ms)
        for (const auto& b : ms)
            CHECK(affine_bracket(a, b) == scale(affine_bracket(b, a), Rational(-1)));
}

TEST_CASE("jacobi identity") {
    const auto ms = mode_sweep(3);
    for (const auto& a : ms) {
        for (const auto& b : ms) {
            for (const auto& c : ms) {
                AffineElement t1 = affine_bracket(a, affine_bracket(b, c));
                AffineElement t2 = affine_bracket(b, affine_bracket(c, a));
                AffineElement t3 = affine_bracket(c, affine_bracket(a, b));
                for (const auto& [m, co] : t2) add_term(t1, m, co);
                for (const auto& [m, co] : t3) add_term(t1, m, co);
                if (!t1.empty()) {
                    CAPTURE(a.str());
                    CAPTURE(b.str());
                    CAPTURE(c.str());
                    CHECK(t1.empty());
                }
            }
        }
    }
}

TEST_CASE("adjoint is an anti involution compatible with the bracket") {
    const auto ms = mode_sweep(3);
    for (const auto& a : ms) {
        CHECK(affine_adjoint(affine_adjoint(a)) == a);
        for (const auto& b : ms)
            CHECK(adjoint_elem(affine_bracket(a, b)) ==
                  affine_bracket(affine_adjoint(b), affine_adjoint(a)));
    }
}

TEST_CASE("admissibility and N") {
    CHECK(is_admissible(Rational(1)));
    CHECK(is_admissible(Rational(2)));
    CHECK(is_admissible(Rational(0)));
    CHECK(is_admissible(Rational(1, 2)));
    CHECK(is_admissible(Rational(-1, 2)));
    CHECK(is_admissible(Rational(-4, 3)));
    CHECK_FALSE(is_admissible(Rational(-1)));
    CHECK_FALSE(is_admissible(Rational(-2)));
    CHECK_FALSE(is_admissible(Rational(-3, 2)));

    CHECK(admissible_N(Rational(1)) == 1);
    CHECK(admissible_N(Rational(2)) == 2);
    CHECK(admissible_N(Rational(0)) == 0);
    CHECK(admissible_N(Rational(1, 2)) == 3);
    CHECK(admissible_N(Rational(-1, 2)) == 1);
    CHECK(admissible_N(Rational(-4, 3)) == 0);
    CHECK_THROWS_AS(admissible_N(Rational(-2)), std::domain_error);

    // N = m for nonnegative integer levels
    for (long m = 0; m <= 6; ++m) CHECK(admissible_N(Rational(m)) == m);
}

TEST_CASE("the set S") {
    CHECK(enumerate_S(Rational(1)) == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(enumerate_S(Rational(2)) ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(2)});

    const std::vector<Rational> s_half = {Rational(-5, 2), Rational(-3, 2), Rational(-1, 2),
                                          Rational(0),     Rational(1, 2),  Rational(1),
                                          Rational(2),     Rational(3)};
    CHECK(enumerate_S(Rational(1, 2)) == s_half);

    const std::vector<Rational> s_neg_half = {Rational(-3, 2), Rational(-1, 2), Rational(0),
                                              Rational(1)};
    CHECK(enumerate_S(Rational(-1, 2)) == s_neg_half);

    // S consists of nonnegative integers exactly for nonnegative integer m
    auto nonneg_integral = [](const std::vector<Rational>& S) {
        return std::all_of(S.begin(), S.end(),
                           [](const Rational& r) { return r.is_integer() && r.sign() >= 0; });
    };
    for (long m = 0; m <= 4; ++m) CHECK(nonneg_integral(enumerate_S(Rational(m))));
    CHECK_FALSE(nonneg_integral(enumerate_S(Rational(1, 2))));
    CHECK_FALSE(nonneg_integral(enumerate_S(Rational(-1, 2))));
    CHECK_FALSE(nonneg_integral(enumerate_S(Rational(-4, 3))));
}

TEST_CASE("the set P") {
    const auto p1 = enumerate_P(Rational(1));
    REQUIRE(p1.size() == 2);
    CHECK(p1[0] == AdmissibleWeight{Rational(1), Rational(0)});
    CHECK(p1[1] == AdmissibleWeight{Rational(0), Rational(1)});

    const auto p0 = enumerate_P(Rational(0));
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == AdmissibleWeight{Rational(0), Rational(0)});

    const auto ph = enumerate_P(Rational(1, 2));
    CHECK(ph.size() == 8);
    for (const auto& w : ph) CHECK(w.lambda0 + w.lambda1 == Rational(1, 2));
    CHECK(std::find(ph.begin(), ph.end(), AdmissibleWeight{Rational(3), Rational(-5, 2)}) !=
          ph.end());
    CHECK(std::find(ph.begin(), ph.end(), AdmissibleWeight{Rational(0), Rational(1, 2)}) !=
          ph.end());

    // lambda1 values of P^m enumerate S^m
    std::vector<Rational> l1;
    for (const auto& w : ph) l1.push_back(w.lambda1);
    std::sort(l1.begin(), l1.end());
    CHECK(l1 == enumerate_S(Rational(1, 2)));
}

TEST_CASE("membership in T") {
    CHECK(membership_T(Rational(1, 2), Rational(-5, 2), Rational(1, 3)));
    CHECK(membership_T(Rational(1, 2), Rational(1, 2), Rational(1, 5)));
    // r - s integral
    CHECK_FALSE(membership_T(Rational(1, 2), Rational(-5, 2), Rational(1, 2)));
    // s integral
    CHECK_FALSE(membership_T(Rational(1, 2), Rational(-5, 2), Rational(2)));
    // r integral
    CHECK_FALSE(membership_T(Rational(1, 2), Rational(1), Rational(1, 3)));
    // r not in S
    CHECK_FALSE(membership_T(Rational(1, 2), Rational(7, 3), Rational(1, 5)));
}

TEST_CASE("finite top level action") {
    const FiniteTopLevel V(2);
    Sl2Vec w1{{1, Rational(1)}};
    CHECK(V.apply(Sl2Gen::E, w1) == Sl2Vec{{0, Rational(2)}});
    Sl2Vec w2{{2, Rational(1)}};
    CHECK(V.apply(Sl2Gen::E, w2) == Sl2Vec{{1, Rational(2)}});
    CHECK(V.apply(Sl2Gen::E, Sl2Vec{{0, Rational(1)}}).empty());
    CHECK(V.apply(Sl2Gen::F, w2).empty());
    CHECK(V.apply(Sl2Gen::F, Sl2Vec{{0, Rational(1)}}) == Sl2Vec{{1, Rational(1)}});
    CHECK(V.apply(Sl2Gen::H, Sl2Vec{{0, Rational(1)}}) == Sl2Vec{{0, Rational(2)}});
    CHECK(V.apply(Sl2Gen::H, w1).empty());
    CHECK(V.apply(Sl2Gen::H, w2) == Sl2Vec{{2, Rational(-2)}});
    CHECK_THROWS_AS(V.apply(Sl2Gen::E, Sl2Vec{{3, Rational(1)}}), std::out_of_range);
    CHECK_THROWS_AS(FiniteTopLevel(-1), std::invalid_argument);
}

TEST_CASE("dense top level action oracles") {
    // r = -5/2 lies in S^{1/2} \ Z
    const DenseTopLevel E(Rational(-5, 2), Rational(1, 3), 10);
    CHECK(E.apply(Sl2Gen::E, Sl2Vec{{0, Rational(1)}}) == Sl2Vec{{-1, Rational(-1, 3)}});
    CHECK(E.apply(Sl2Gen::H, Sl2Vec{{2, Rational(1)}}) == Sl2Vec{{2, Rational(-43, 6)}});
    CHECK(E.apply(Sl2Gen::F, Sl2Vec{{1, Rational(1)}}) == Sl2Vec{{2, Rational(23, 6)}});
}

TEST_CASE("sl2 relations hold on both top level families") {
    // [e,f] = h and [h,e] = 2e, [h,f] = -2f as operators
    auto comm = [](const auto& M, Sl2Gen a, Sl2Gen b, const Sl2Vec& v) {
        Sl2Vec out = M.apply(a, M.apply(b, v));
        for (const auto& [i, c] : M.apply(b, M.apply(a, v))) add_term(out, i, -c);
        return out;
    };

    for (long r : {1L, 2L, 5L}) {
        const FiniteTopLevel V(r);
        for (long i = 0; i <= r; ++i) {
            const Sl2Vec wi{{i, Rational(1)}};
            CHECK(comm(V, Sl2Gen::E, Sl2Gen::F, wi) == V.apply(Sl2Gen::H, wi));
            Sl2Vec he = comm(V, Sl2Gen::H, Sl2Gen::E, wi);
            Sl2Vec e2 = V.apply(Sl2Gen::E, wi);
            for (auto& [k, c] : e2) c *= Rational(2);
            CHECK(he == e2);
            Sl2Vec hf = comm(V, Sl2Gen::H, Sl2Gen::F, wi);
            Sl2Vec f2 = V.apply(Sl2Gen::F, wi);
            for (auto& [k, c] : f2) c *= Rational(-2);
            CHECK(hf == f2);
        }
    }

    std::mt19937 gen(20260818);
    for (int trial = 0; trial < 10; ++trial) {
        const DenseTopLevel E(rnd_rat(gen), rnd_rat(gen), 10);
        for (long i = -5; i <= 5; ++i) {
            const Sl2Vec Ei{{i, Rational(1)}};
            CHECK(comm(E, Sl2Gen::E, Sl2Gen::F, Ei) == E.apply(Sl2Gen::H, Ei));
            Sl2Vec he = comm(E, Sl2Gen::H, Sl2Gen::E, Ei);
            Sl2Vec e2 = E.apply(Sl2Gen::E, Ei);
            for (auto& [k, c] : e2) c *= Rational(2);
            CHECK(he == e2);
            Sl2Vec hf = comm(E, Sl2Gen::H, Sl2Gen::F, Ei);
            Sl2Vec f2 = E.apply(Sl2Gen::F, Ei);
            for (auto& [k, c] : f2) c *= Rational(-2);
            CHECK(hf == f2);
        }
    }
}

TEST_CASE("casimir acts as r(r+2)/2 and commutes with the action") {
    for (long r : {1L, 2L, 4L}) {
        const FiniteTopLevel V(r);
        const Rational scalar = Rational(r) * Rational(r + 2) / Rational(2);
        for (long i = 0; i <= r; ++i) {
            const Sl2Vec wi{{i, Rational(1)}};
            CHECK(casimir_apply(V, wi) == Sl2Vec{{i, scalar}});
        }
        for (Sl2Gen g : {Sl2Gen::E, Sl2Gen::H, Sl2Gen::F}) {
            const Sl2Vec v{{r / 2, Rational(1)}};
            CHECK(casimir_apply(V, V.apply(g, v)) == V.apply(g, casimir_apply(V, v)));
        }
    }
    CHECK(casimir_apply(FiniteTopLevel(2), Sl2Vec{{1, Rational(1)}}) ==
          Sl2Vec{{1, Rational(4)}});
    CHECK(casimir_apply(FiniteTopLevel(1), Sl2Vec{{0, Rational(1)}}) ==
          Sl2Vec{{0, Rational(3, 2)}});

    std::mt19937 gen(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational r = rnd_rat(gen);
        const DenseTopLevel E(r, rnd_rat(gen), 10);
        const Rational scalar = r * (r + Rational(2)) / Rational(2);
        for (long i = -4; i <= 4; ++i) {
            const Sl2Vec Ei{{i, Rational(1)}};
            Sl2Vec want;
            add_term(want, i, scalar);  // empty when r is 0 or -2
            CHECK(casimir_apply(E, Ei) == want);
            for (Sl2Gen g : {Sl2Gen::E, Sl2Gen::H, Sl2Gen::F})
                CHECK(casimir_apply(E, E.apply(g, Ei)) == E.apply(g, casimir_apply(E, Ei)));
        }
    }
}

TEST_CASE("dense window is a hard boundary") {
    const DenseTopLevel E(Rational(1, 3), Rational(1, 7), 2);
    CHECK_THROWS_AS(E.apply(Sl2Gen::F, Sl2Vec{{2, Rational(1)}}), WindowExceeded);
    CHECK_THROWS_AS(E.apply(Sl2Gen::E, Sl2Vec{{-2, Rational(1)}}), WindowExceeded);
    CHECK_THROWS_AS(E.apply(Sl2Gen::H, Sl2Vec{{5, Rational(1)}}), WindowExceeded);
    // a vanishing step coefficient is not a window violation
    const DenseTopLevel Z(Rational(1, 3), Rational(2), 2);
    CHECK(Z.apply(Sl2Gen::E, Sl2Vec{{-2, Rational(1)}}).empty());
}

TEST_CASE("irreducibility certificate in the window") {
    CHECK(DenseTopLevel(Rational(-5, 2), Rational(1, 3), 50).irreducible_in_window());
    CHECK_FALSE(DenseTopLevel(Rational(-5, 2), Rational(1, 2), 50).irreducible_in_window());
    CHECK_FALSE(DenseTopLevel(Rational(-5, 2), Rational(2), 50).irreducible_in_window());

    // agreement with the T^m membership predicate at m = 1/2, r = -5/2
    for (const Rational& s : {Rational(1, 3), Rational(1, 2), Rational(2), Rational(-7, 3)}) {
        const bool in_T = membership_T(Rational(1, 2), Rational(-5, 2), s);
        CHECK(DenseTopLevel(Rational(-5, 2), s, 50).irreducible_in_window() == in_T);
    }
}

TEST_CASE("vacuum verma module weight spaces") {
    const auto M = make_affine_verma(Rational(5, 7));
    CHECK(M->basis(HalfInt::whole(0), 0).size() == 1);
    CHECK(M->basis(HalfInt::whole(1), 2).size() == 1);
    CHECK(M->basis(HalfInt::whole(1), 0).size() == 1);
    CHECK(M->basis(HalfInt::whole(1), -2).size() == 1);
    CHECK(M->basis(HalfInt::whole(2), 4).size() == 1);
    CHECK(M->basis(HalfInt::whole(2), 2).size() == 2);
    CHECK(M->basis(HalfInt::whole(2), 0).size() == 3);
    CHECK(M->basis(HalfInt::whole(2), -2).size() == 2);
    CHECK(M->basis(HalfInt::whole(2), -4).size() == 1);
    CHECK(M->basis(HalfInt::whole(3), 6).size() == 1);
    CHECK(M->basis(HalfInt::whole(3), 2).size() == 5);
    CHECK(M->basis(HalfInt::whole(3), 0).size() == 6);
    // odd charges never occur
    CHECK(M->basis(HalfInt::whole(2), 1).empty());
    CHECK(M->basis(HalfInt::whole(3), -3).empty());
}

TEST_CASE("vacuum verma rep property") {
    const auto M = make_affine_verma(Rational(5, 7));
    std::vector<AffineMode> ms = mode_sweep(2);
    std::vector<AffineVec> states;
    for (long l = 0; l <= 2; ++l)
        for (int ch = -2 * static_cast<int>(l); ch <= 2 * static_cast<int>(l); ch += 2)
            for (const auto& b : M->basis(HalfInt::whole(l), ch)) states.push_back(unit(b));
    for (const auto& u : ms) {
        for (const auto& w : ms) {
            const AffineElement br = affine_bracket(u, w);
            for (const auto& v : states) {
                AffineVec lhs = M->apply(u, M->apply(w, v));
                AffinePbw::axpy(lhs, Rational(-1), M->apply(w, M->apply(u, v)));
                CHECK(lhs == apply_elem(*M, br, v));
            }
        }
    }
}

TEST_CASE("gram forms of the vacuum verma module") {
    const Rational m(3, 4);
    const auto M = make_affine_verma(m);
    auto g = M->gram(HalfInt::whole(1), 2);
    CHECK(g.at(0, 0) == m);
    g = M->gram(HalfInt::whole(1), 0);
    CHECK(g.at(0, 0) == Rational(2) * m);
    g = M->gram(HalfInt::whole(1), -2);
    CHECK(g.at(0, 0) == m);

    // <e(-1)^2 v, e(-1)^2 v> = 2m(m-1)
    for (const Rational& mm : {Rational(1), Rational(3), Rational(3, 4)}) {
        const auto Mm = make_affine_verma(mm);
        auto g2 = Mm->gram(HalfInt::whole(2), 4);
        CHECK(g2.at(0, 0) == Rational(2) * mm * (mm - Rational(1)));
    }

    // serial and parallel assembly agree
    const auto gs = M->gram(HalfInt::whole(2), 0, ExecPolicy::Serial);
    const auto gp = M->gram(HalfInt::whole(2), 0, ExecPolicy::Parallel);
    CHECK(gs == gp);
}

TEST_CASE("singular vector e(-1)^2 at level m = 1") {
    const auto M1 = make_affine_verma(Rational(1));
    const auto sv = M1->singular_vectors(HalfInt::whole(2), 4);
    REQUIRE(sv.size() == 1);
    CHECK(sv[0] == unit({AffineMode::e(-1), AffineMode::e(-1)}));
    CHECK(M1->singular_vectors(HalfInt::whole(1), 2).empty());

    const auto M3 = make_affine_verma(Rational(3));
    CHECK(M3->singular_vectors(HalfInt::whole(2), 4).empty());
}

TEST_CASE("simple vacuum module at m = 1 matches the lattice character") {
    // L(1,0) weight multiplicities: dim(level n, charge 2k) = p(n - k^2)
    const AffineTrunc L = simple_vacuum_affine(Rational(1), HalfInt::whole(3));
    CHECK(L.dim(HalfInt::whole(0), 0) == 1);
    CHECK(L.dim(HalfInt::whole(1), 2) == 1);
    CHECK(L.dim(HalfInt::whole(1), 0) == 1);
    CHECK(L.dim(HalfInt::whole(1), -2) == 1);
    CHECK(L.dim(HalfInt::whole(2), 4) == 0);
    CHECK(L.dim(HalfInt::whole(2), 2) == 1);
    CHECK(L.dim(HalfInt::whole(2), 0) == 2);
    CHECK(L.dim(HalfInt::whole(2), -2) == 1);
    CHECK(L.dim(HalfInt::whole(2), -4) == 0);
    CHECK(L.dim(HalfInt::whole(3), 6) == 0);
    CHECK(L.dim(HalfInt::whole(3), 4) == 0);
    CHECK(L.dim(HalfInt::whole(3), 2) == 2);
    CHECK(L.dim(HalfInt::whole(3), 0) == 3);
    CHECK(L.dim(HalfInt::whole(3), -2) == 2);

    // the singular vector is killed in the quotient
    CHECK(L.is_zero(unit({AffineMode::e(-1), AffineMode::e(-1)})));
    CHECK_FALSE(L.is_zero(unit({AffineMode::e(-1)})));

    CHECK_THROWS_AS(L.dim(HalfInt::whole(4), 0), TruncationExceeded);
}

TEST_CASE("generic level has trivial radical") {
    const AffineTrunc L = simple_vacuum_affine(Rational(5, 7), HalfInt::whole(2));
    CHECK(L.dim(HalfInt::whole(2), 4) == 1);
    CHECK(L.dim(HalfInt::whole(2), 0) == 3);
    CHECK(L.dim(HalfInt::whole(2), 2) == 2);
}
