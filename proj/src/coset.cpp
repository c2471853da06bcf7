#include "n2vx/coset.hpp"

#include <algorithm>

namespace n2vx {

namespace {

KsVec ks_scale(const KsVec& v, const Rational& a) {
    KsVec out;
    detail::axpy_map(out, a, v);
    return out;
}

AksVec aks_scale(const AksVec& v, const Rational& a) {
    AksVec out;
    detail::axpy_map(out, a, v);
    return out;
}

/// Cheap admissibility filter for a candidate wiring: the vacuum must be
/// annihilated by all non negative realized modes, the two charged states at
/// weight 3/2 must carry U(1) charge +-1 and conformal weight 3/2, and the
/// anticommutator of the extremal G modes must reproduce the central term.
/// Each test is a handful of mode applications, so all candidates can be
/// screened before the expensive relation sweep runs on the survivors.
bool ks_filter(const KsRealization<AffineVerma>& R) {
    const KsVec vac = KsRealization<AffineVerma>::vacuum();
    for (long n = -1; n <= 2; ++n)
        if (!R.virasoro(n, vac).empty()) return false;
    for (long n = 0; n <= 2; ++n)
        if (!R.u1(n, vac).empty()) return false;
    for (long ttw = -1; ttw <= 3; ttw += 2) {
        if (!R.tau(true, HalfInt::halves(ttw), vac).empty()) return false;
        if (!R.tau(false, HalfInt::halves(ttw), vac).empty()) return false;
    }
    const KsVec tp = R.tau(true, HalfInt::halves(-3), vac);
    const KsVec tm = R.tau(false, HalfInt::halves(-3), vac);
    if (tp.empty() || tm.empty()) return false;
    if (R.u1(0, tp) != tp) return false;
    if (R.u1(0, tm) != ks_scale(tm, Rational(-1))) return false;
    if (R.virasoro(0, tp) != ks_scale(tp, Rational(3, 2))) return false;
    if (R.virasoro(0, tm) != ks_scale(tm, Rational(3, 2))) return false;
    const KsVec anti = R.tau(true, HalfInt::halves(3), tm);
    if (anti != ks_scale(vac, Rational(2, 3) * R.central())) return false;
    return true;
}

bool all_passed(const std::vector<CosetCheck>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const CosetCheck& c) { return c.passed; });
}

}  // namespace

std::string KsWiring::str() const {
    std::string s = "tau+ = ";
    s += species_swapped ? "psi+ (x) " : "psi- (x) ";
    s += currents_swapped ? "f" : "e";
    s += ", tau- = ";
    s += species_swapped ? "psi- (x) " : "psi+ (x) ";
    s += currents_swapped ? "e" : "f";
    s += ", dj correction ";
    s += dj_half == 0 ? "0" : (dj_half > 0 ? "+1/2" : "-1/2");
    return s;
}

KsReport verify_ks(const Rational& m, HalfInt max_weight) {
    if (m == Rational(-2)) throw std::domain_error("level -2 is excluded");
    const auto verma = make_affine_verma(m);
    KsReport rep;
    rep.central = Rational(3) * m / (m + Rational(2));
    std::vector<KsWiring> survivors;
    for (bool sp : {false, true})
        for (bool cur : {false, true})
            for (int dj : {0, 1, -1}) {
                const KsWiring w{sp, cur, dj};
                KsRealization<AffineVerma> R(*verma, m, w);
                const bool ok = ks_filter(R);
                rep.candidates.emplace_back(w.str(), ok);
                if (ok) survivors.push_back(w);
            }
    for (const KsWiring& w : survivors) {
        KsRealization<AffineVerma> R(*verma, m, w);
        auto checks = ks_bracket_suite(R, max_weight);
        if (all_passed(checks)) {
            rep.found = true;
            rep.resolved = w;
            rep.checks = std::move(checks);
            return rep;
        }
        // keep the first failing sweep for diagnosis
        if (rep.checks.empty()) {
            rep.resolved = w;
            rep.checks = std::move(checks);
        }
    }
    return rep;
}

std::vector<CosetCheck> verify_ks_on_simple(const Rational& m, HalfInt max_weight) {
    const AffineTrunc simple = simple_vacuum_affine(m, HalfInt::whole(6));
    const KsRealization<AffineTrunc> R(simple, m, KsWiring{true, true, 1});
    return ks_bracket_suite(R, max_weight);
}

std::pair<Rational, Rational> ks_highest_weight(const Rational& m, const Rational& beta,
                                                const Rational& gamma) {
    if (m == Rational(-2)) throw std::domain_error("level -2 is excluded");
    const Rational mp2 = m + Rational(2);
    return {gamma / (Rational(2) * mp2) - beta * beta / (Rational(4) * mp2), -beta / mp2};
}

AntiKsReport verify_antiks(const Rational& m, int ysign, HalfInt sweep_depth) {
    if (m == Rational(-2)) throw std::domain_error("level -2 is excluded");
    const Rational c = Rational(3) * m / (m + Rational(2));
    // the bracket sweep below reaches level 10 intermediates: a double
    // application of the same current on an exponent -+1 state pushes the
    // N=2 leg as deep as the lattice leg can climb
    const N2Trunc vc = vacuum_svoa(c, HalfInt::whole(10));
    const LatticeSpace lat;
    const AntiKsRealization<N2Trunc> R(vc, lat, m, ysign);

    AntiKsReport rep;
    rep.ysign = ysign;
    auto& cs = rep.checks;

    const AksVec vac = AntiKsRealization<N2Trunc>::vacuum();
    const AksVec xs = R.x_state();
    const AksVec ys = R.y_state();
    const AksVec hs = R.h_state();

    const auto vanish = [](auto&& op, long lo, long hi) {
        for (long n = lo; n <= hi; ++n)
            if (!op(n).empty()) return false;
        return true;
    };

    cs.push_back({"x(n) x = 0 for 1 <= n <= 4",
                  vanish([&](long n) { return R.x(n, xs); }, 1, 4)});
    cs.push_back({"y(n) y = 0 for 1 <= n <= 4",
                  vanish([&](long n) { return R.y(n, ys); }, 1, 4)});
    cs.push_back({"x(n) y = 0 for 2 <= n <= 5",
                  vanish([&](long n) { return R.x(n, ys); }, 2, 5)});
    cs.push_back({"x(1) y = m |0>", R.x(1, ys) == aks_scale(vac, m)});
    cs.push_back({"x(0) y = h", R.x(0, ys) == hs});
    cs.push_back({"h(n) x = 0 for 1 <= n <= 4",
                  vanish([&](long n) { return R.h(n, xs); }, 1, 4)});
    cs.push_back({"h(0) x = 2 x", R.h(0, xs) == aks_scale(xs, Rational(2))});
    cs.push_back({"h(n) y = 0 for 1 <= n <= 4",
                  vanish([&](long n) { return R.h(n, ys); }, 1, 4)});
    cs.push_back({"h(0) y = -2 y", R.h(0, ys) == aks_scale(ys, Rational(-2))});
    // one line of the generator table reads h(0) y = 0 at face value; the
    // corrected reading is the check right above
    cs.push_back({"h(0) y = 0 (face value)", R.h(0, ys).empty()});
    cs.push_back({"h(n) h = 0 for 2 <= n <= 5",
                  vanish([&](long n) { return R.h(n, hs); }, 2, 5)});
    cs.push_back({"h(1) h = 2m |0>", R.h(1, hs) == aks_scale(vac, Rational(2) * m)});
    cs.push_back({"h(0) h = 0", R.h(0, hs).empty()});

    std::vector<AksVec> states;
    for (const auto& s : R.sweep_basis(sweep_depth)) {
        AksVec v;
        v.emplace(s, Rational(1));
        states.push_back(std::move(v));
    }

    const auto X = [&](long n, const AksVec& v) { return R.x(n, v); };
    const auto Y = [&](long n, const AksVec& v) { return R.y(n, v); };
    const auto H = [&](long n, const AksVec& v) { return R.h(n, v); };

    const auto comm_sweep = [&](auto&& A, auto&& B, auto&& rhs) {
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                for (const AksVec& v : states) {
                    AksVec lhs = A(a, B(b, v));
                    detail::axpy_map(lhs, Rational(-1), B(b, A(a, v)));
                    if (lhs != rhs(a, b, v)) return false;
                }
        return true;
    };

    cs.push_back({"[h(a), x(b)] = 2 x(a+b)",
                  comm_sweep(H, X, [&](long a, long b, const AksVec& v) {
                      return aks_scale(R.x(a + b, v), Rational(2));
                  })});
    cs.push_back({"[h(a), y(b)] = -2 y(a+b)",
                  comm_sweep(H, Y, [&](long a, long b, const AksVec& v) {
                      return aks_scale(R.y(a + b, v), Rational(-2));
                  })});
    cs.push_back({"[x(a), y(b)] = h(a+b) + a m delta",
                  comm_sweep(X, Y, [&](long a, long b, const AksVec& v) {
                      AksVec r = R.h(a + b, v);
                      if (a + b == 0) detail::axpy_map(r, Rational(a) * m, v);
                      return r;
                  })});
    cs.push_back({"[h(a), h(b)] = 2 m a delta",
                  comm_sweep(H, H, [&](long a, long b, const AksVec& v) {
                      return a + b == 0 ? aks_scale(v, Rational(2 * a) * m) : AksVec{};
                  })});
    cs.push_back({"[x(a), x(b)] = 0",
                  comm_sweep(X, X, [&](long, long, const AksVec&) { return AksVec{}; })});
    cs.push_back({"[y(a), y(b)] = 0",
                  comm_sweep(Y, Y, [&](long, long, const AksVec&) { return AksVec{}; })});

    return rep;
}

CasimirReport casimir_identity(const Rational& m, const Rational& h, const Rational& q,
                               const Rational& c) {
    const auto verma = make_verma(h, q, c);
    const LatticeSpace lat;
    const AntiKsRealization<N2Verma> R(*verma, lat, m, -1);
    const AksVec vac = AntiKsRealization<N2Verma>::vacuum();

    AksVec omega = R.x(0, R.y(0, vac));
    detail::axpy_map(omega, Rational(1), R.y(0, R.x(0, vac)));
    detail::axpy_map(omega, Rational(1, 2), R.h(0, R.h(0, vac)));

    CasimirReport rep;
    const Rational mp2 = m + Rational(2);
    rep.expected = Rational(2) * mp2 * h + mp2 * mp2 * q * q / Rational(2);
    rep.h0_expected = q * mp2;

    const AksState key{N2Monomial{}, LatticeState{0, {}}};
    const auto it = omega.find(key);
    rep.value = it == omega.end() ? Rational(0) : it->second;
    rep.is_eigenvector = omega == aks_scale(vac, rep.value);

    const AksVec h0v = R.h(0, vac);
    const auto jt = h0v.find(key);
    rep.h0 = jt == h0v.end() ? Rational(0) : jt->second;
    if (h0v != aks_scale(vac, rep.h0)) rep.is_eigenvector = false;
    return rep;
}

}  // namespace n2vx
