#include "n2vx/free_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace n2vx {

namespace {

Rational rational_pow(const Rational& base, long exp) {
    Rational out(1);
    for (long j = 0; j < exp; ++j) out *= base;
    return out;
}

Rational factorial_rat(long n) {
    Rational out(1);
    for (long j = 2; j <= n; ++j) out *= Rational(j);
    return out;
}

Rational binom_rat(long n, long k) {
    Rational out(1);
    for (long j = 1; j <= k; ++j) out *= Rational(n - j + 1, j);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Fermions.

std::string FermionState::str() const {
    if (plus.empty() && minus.empty()) return "|0>";
    std::string out;
    for (const auto& p : plus) out += "psi+(" + p.str() + ")";
    for (const auto& q : minus) out += "psi-(" + q.str() + ")";
    return out + "|0>";
}

int fermion_parity(const FermionState& s) {
    return static_cast<int>((s.plus.size() + s.minus.size()) % 2);
}

int fermion_charge(const FermionState& s) {
    return static_cast<int>(s.plus.size()) - static_cast<int>(s.minus.size());
}

HalfInt fermion_weight(const FermionState& s) {
    long tw = 0;
    for (const auto& p : s.plus) tw -= p.twice();
    for (const auto& q : s.minus) tw -= q.twice();
    return HalfInt::halves(tw);
}

namespace {

void check_fermion(const FermionState& s) {
    auto ok = [](const std::vector<HalfInt>& v) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_half_odd() || v[i].twice() > 0) return false;
            if (i > 0 && !(v[i - 1] < v[i])) return false;
        }
        return true;
    };
    if (!ok(s.plus) || !ok(s.minus))
        throw std::invalid_argument(
            "fermion state lists must be strictly increasing negative half-odds");
}

}  // namespace

FermionVec fermion_act(Species sp, HalfInt r, const FermionState& s) {
    if (!r.is_half_odd()) throw std::invalid_argument("fermion mode index must be half-odd");
    check_fermion(s);
    FermionVec out;
    const auto& same = (sp == Species::Plus) ? s.plus : s.minus;
    const auto& other = (sp == Species::Plus) ? s.minus : s.plus;
    if (r.twice() < 0) {
        // creation: slot into the same-species list; each same-species mode
        // passed on the way contributes one transposition sign
        const auto it = std::lower_bound(same.begin(), same.end(), r);
        if (it != same.end() && *it == r) return out;  // odd square
        size_t passed = static_cast<size_t>(it - same.begin());
        if (sp == Species::Minus) passed += s.plus.size();
        FermionState t = s;
        auto& list = (sp == Species::Plus) ? t.plus : t.minus;
        list.insert(list.begin() + (it - same.begin()), r);
        out.emplace(std::move(t), (passed % 2) ? Rational(-1) : Rational(1));
        return out;
    }
    // annihilation: the only contraction partner is the opposite-species
    // mode at -r; same-species modes are passed with a sign only
    const HalfInt target = -r;
    const auto it = std::lower_bound(other.begin(), other.end(), target);
    if (it == other.end() || *it != target) return out;
    size_t passed = static_cast<size_t>(it - other.begin());
    if (sp == Species::Plus) passed += s.plus.size();
    FermionState t = s;
    auto& list = (sp == Species::Plus) ? t.minus : t.plus;
    list.erase(list.begin() + (it - other.begin()));
    out.emplace(std::move(t), (passed % 2) ? Rational(-1) : Rational(1));
    return out;
}

FermionVec fermion_act(Species sp, HalfInt r, const FermionVec& v) {
    FermionVec out;
    for (const auto& [s, c] : v) {
        for (const auto& [t, tc] : fermion_act(sp, r, s)) {
            auto [it, inserted] = out.try_emplace(t, tc * c);
            if (!inserted) {
                it->second += tc * c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

namespace {

// Strictly decreasing odd doubled parts, emitted as ascending negative
// half-odd mode lists.
void mode_lists_rec(long total_tw, long max_part_tw, std::vector<HalfInt>& cur,
                    std::vector<std::vector<HalfInt>>& out) {
    if (total_tw == 0) {
        out.push_back(cur);
        return;
    }
    long start = std::min(total_tw, max_part_tw);
    if (start % 2 == 0) --start;
    for (long p = start; p >= 1; p -= 2) {
        cur.push_back(HalfInt::halves(-p));
        mode_lists_rec(total_tw - p, p - 2, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<HalfInt>> mode_lists(long total_tw) {
    std::vector<std::vector<HalfInt>> out;
    std::vector<HalfInt> cur;
    mode_lists_rec(total_tw, total_tw, cur, out);
    return out;
}

}  // namespace

std::vector<FermionState> fermion_basis(HalfInt weight, int charge) {
    std::vector<FermionState> out;
    const long wtw = weight.twice();
    if (wtw < 0) return out;
    for (long ptw = 0; ptw <= wtw; ++ptw) {
        for (const auto& pl : mode_lists(ptw)) {
            for (const auto& ml : mode_lists(wtw - ptw)) {
                if (static_cast<int>(pl.size()) - static_cast<int>(ml.size()) != charge) continue;
                out.push_back({pl, ml});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Schur polynomials.

SchurPoly schur_poly(long r) {
    if (r < 0) return {};
    std::vector<SchurPoly> p(static_cast<size_t>(r) + 1);
    p[0].emplace(SchurMonomial{}, Rational(1));
    for (long n = 1; n <= r; ++n) {
        SchurPoly& acc = p[static_cast<size_t>(n)];
        for (long j = 1; j <= n; ++j) {
            for (const auto& [mon, c] : p[static_cast<size_t>(n - j)]) {
                SchurMonomial m2 = mon;
                ++m2[j];
                const Rational add = c / Rational(n);
                auto [it, inserted] = acc.try_emplace(std::move(m2), add);
                if (!inserted) {
                    it->second += add;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
    }
    return p[static_cast<size_t>(r)];
}

// ---------------------------------------------------------------------------
// Lattice vertex superalgebra.

std::string LatticeState::str() const {
    std::string out = "a^" + std::to_string(exponent);
    for (long h : heis) out += " h(" + std::to_string(h) + ")";
    return out;
}

long heisenberg_weight(const LatticeState& s) {
    long w = 0;
    for (long h : s.heis) w -= h;
    return w;
}

LatticeSpace::LatticeSpace(long nu, long max_exponent, long max_heis)
    : nu_(nu), max_exponent_(max_exponent), max_heis_(max_heis) {
    if (nu >= 0) throw std::invalid_argument("lattice form must be negative definite");
    if (max_exponent < 1 || max_heis < 1) throw std::invalid_argument("windows must be positive");
}

void LatticeSpace::check_state(const LatticeState& s) const {
    for (size_t i = 0; i < s.heis.size(); ++i) {
        if (s.heis[i] > -1) throw std::invalid_argument("Heisenberg entries must be <= -1");
        if (i > 0 && s.heis[i - 1] > s.heis[i])
            throw std::invalid_argument("Heisenberg entries must be ascending");
    }
    if (std::labs(s.exponent) > max_exponent_)
        throw WindowExceeded("lattice exponent " + std::to_string(s.exponent) +
                             " outside window");
    if (heisenberg_weight(s) > max_heis_)
        throw WindowExceeded("Heisenberg depth " + std::to_string(heisenberg_weight(s)) +
                             " outside window");
}

void LatticeSpace::emit(LatticeVec& out, LatticeState s, const Rational& c) const {
    if (c.is_zero()) return;
    if (std::labs(s.exponent) > max_exponent_)
        throw WindowExceeded("produced lattice exponent " + std::to_string(s.exponent) +
                             " outside window");
    if (heisenberg_weight(s) > max_heis_)
        throw WindowExceeded("produced Heisenberg depth " +
                             std::to_string(heisenberg_weight(s)) + " outside window");
    auto [it, inserted] = out.try_emplace(std::move(s), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

LatticeVec LatticeSpace::heisenberg(long a, const LatticeState& s) const {
    check_state(s);
    LatticeVec out;
    if (a == 0) {
        emit(out, s, Rational(s.exponent) * Rational(nu_));
        return out;
    }
    if (a > 0) {
        const long target = -a;
        const auto lo = std::lower_bound(s.heis.begin(), s.heis.end(), target);
        if (lo == s.heis.end() || *lo != target) return out;
        const long mu = std::upper_bound(lo, s.heis.end(), target) - lo;
        LatticeState t = s;
        t.heis.erase(t.heis.begin() + (lo - s.heis.begin()));
        emit(out, std::move(t), Rational(mu) * Rational(a) * Rational(nu_));
        return out;
    }
    LatticeState t = s;
    t.heis.insert(std::upper_bound(t.heis.begin(), t.heis.end(), a), a);
    emit(out, std::move(t), Rational(1));
    return out;
}

LatticeVec LatticeSpace::heisenberg(long a, const LatticeVec& v) const {
    LatticeVec out;
    for (const auto& [s, c] : v)
        for (const auto& [t, tc] : heisenberg(a, s)) emit(out, t, tc * c);
    return out;
}

LatticeVec LatticeSpace::vertex_mode(long l, long i, const LatticeState& s) const {
    check_state(s);
    LatticeVec out;
    if (l == 0) {
        // iota(a^0) = |0> and Y(|0>, z) = Id
        if (i == -1) emit(out, s, Rational(1));
        return out;
    }
    const long z0 = l * s.exponent * nu_;
    const long new_exp = s.exponent + l;

    // distinct Heisenberg magnitudes with multiplicities
    std::vector<std::pair<long, long>> groups;
    for (long h : s.heis) {
        if (!groups.empty() && groups.back().first == -h)
            ++groups.back().second;
        else
            groups.emplace_back(-h, 1);
    }

    // Annihilation half: remove j_g quanta from each group. Removing j from
    // multiplicity mu costs z-degree -n*j and contributes binom(mu, j) times
    // (-l nu)^j, since (l/n)^j from the exponential meets (n nu)^j from the
    // contractions.
    std::vector<long> removed(groups.size(), 0);
    auto branch = [&](auto&& self, size_t gi, const Rational& coeff, long zdeg) -> void {
        if (gi == groups.size()) {
            const long d = -i - 1 - z0 - zdeg;
            if (d < 0) return;
            if (std::labs(new_exp) > max_exponent_)
                throw WindowExceeded("produced lattice exponent " + std::to_string(new_exp) +
                                     " outside window");
            std::vector<long> rem;
            for (size_t g = 0; g < groups.size(); ++g)
                for (long c = removed[g]; c < groups[g].second; ++c)
                    rem.push_back(-groups[g].first);
            std::sort(rem.begin(), rem.end());
            long rem_w = 0;
            for (long h : rem) rem_w -= h;
            if (rem_w + d > max_heis_)
                throw WindowExceeded("produced Heisenberg depth " + std::to_string(rem_w + d) +
                                     " outside window");
            // Creation half: every multiset of created quanta of total
            // degree d, each part p weighted by (l/p)^{c_p} / c_p!.
            std::map<long, long> cur;
            auto parts = [&](auto&& pself, long remd, long max_part) -> void {
                if (remd == 0) {
                    Rational pc = coeff;
                    LatticeState t{new_exp, rem};
                    for (const auto& [p, c] : cur) {
                        pc *= rational_pow(Rational(l, p), c) / factorial_rat(c);
                        for (long j = 0; j < c; ++j) t.heis.push_back(-p);
                    }
                    std::sort(t.heis.begin(), t.heis.end());
                    emit(out, std::move(t), pc);
                    return;
                }
                for (long p = std::min(remd, max_part); p >= 1; --p) {
                    ++cur[p];
                    pself(pself, remd - p, p);
                    if (--cur[p] == 0) cur.erase(p);
                }
            };
            parts(parts, d, d);
            return;
        }
        const auto [n, mu] = groups[gi];
        for (long j = 0; j <= mu; ++j) {
            removed[gi] = j;
            self(self, gi + 1, coeff * binom_rat(mu, j) * rational_pow(Rational(-l * nu_), j),
                 zdeg - n * j);
        }
        removed[gi] = 0;
    };
    branch(branch, 0, Rational(1), 0);
    return out;
}

LatticeVec LatticeSpace::vertex_mode(long l, long i, const LatticeVec& v) const {
    LatticeVec out;
    for (const auto& [s, c] : v)
        for (const auto& [t, tc] : vertex_mode(l, i, s)) emit(out, t, tc * c);
    return out;
}

Rational LatticeSpace::weight(const LatticeState& s) const {
    return Rational(nu_ * s.exponent * s.exponent, 2) + Rational(heisenberg_weight(s));
}

int LatticeSpace::parity(const LatticeState& s) const {
    return static_cast<int>(((s.exponent * s.exponent * nu_) % 2 + 2) % 2);
}

long LatticeSpace::vertex_mode_upper_bound(const LatticeState& s, long l) const {
    if (l == 0) return -1;
    return -1 - l * s.exponent * nu_ + heisenberg_weight(s);
}

std::vector<LatticeState> LatticeSpace::basis(long exponent, long heis_weight) const {
    if (std::labs(exponent) > max_exponent_)
        throw WindowExceeded("exponent " + std::to_string(exponent) + " outside window");
    if (heis_weight > max_heis_)
        throw WindowExceeded("depth " + std::to_string(heis_weight) + " outside window");
    std::vector<LatticeState> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rem, long max_part) -> void {
        if (rem == 0) {
            out.push_back({exponent, cur});
            return;
        }
        for (long p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(-p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, heis_weight, heis_weight);
    std::sort(out.begin(), out.end());
    return out;
}

LatticeVec schur_substitute(const SchurPoly& p, long k, long base_exponent) {
    LatticeVec out;
    for (const auto& [mon, c] : p) {
        LatticeState s{base_exponent, {}};
        long deg = 0;
        for (const auto& [var, exp] : mon) {
            for (long j = 0; j < exp; ++j) s.heis.push_back(-var);
            deg += exp;
        }
        std::sort(s.heis.begin(), s.heis.end());
        const Rational coeff = c * rational_pow(Rational(k), deg);
        auto [it, inserted] = out.try_emplace(std::move(s), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

std::vector<FminusCheck> verify_prop_fminus(const LatticeSpace& space, long max_i) {
    const LatticeState vac{0, {}};
    const LatticeState e{1, {}};
    const LatticeState f{-1, {}};
    const LatticeState kv{0, {-1}};
    auto unit = [](const LatticeState& s) {
        LatticeVec v;
        v.emplace(s, Rational(1));
        return v;
    };
    auto negate = [](const LatticeState& s) {
        LatticeVec v;
        v.emplace(s, Rational(-1));
        return v;
    };

    std::vector<FminusCheck> out;
    auto vanish = [&](const std::string& name, long lpow, const LatticeState& tgt, long lo) {
        bool ok = true;
        for (long i = lo; i <= max_i; ++i) ok = ok && space.vertex_mode(lpow, i, tgt).empty();
        out.push_back({name, ok});
    };

    vanish("e_i f = 0 for i >= -1", 1, f, -1);
    out.push_back({"e_{-2} f = |0>", space.vertex_mode(1, -2, f) == unit(vac)});
    out.push_back({"e_{-3} f = k", space.vertex_mode(1, -3, f) == unit(kv)});

    vanish("f_i e = 0 for i >= -1", -1, e, -1);
    out.push_back({"f_{-2} e = |0>", space.vertex_mode(-1, -2, e) == unit(vac)});
    out.push_back({"f_{-3} e = -k", space.vertex_mode(-1, -3, e) == negate(kv)});

    vanish("e_i e = 0 for i >= 1", 1, e, 1);
    out.push_back({"e_0 e = e^2", space.vertex_mode(1, 0, e) == unit(LatticeState{2, {}})});

    vanish("f_i f = 0 for i >= 1", -1, f, 1);
    out.push_back({"f_0 f = f^2", space.vertex_mode(-1, 0, f) == unit(LatticeState{-2, {}})});

    bool ok = true;
    for (long n = 1; n <= max_i; ++n) ok = ok && space.heisenberg(n, e).empty();
    out.push_back({"k_i e = 0 for i >= 1", ok});
    out.push_back({"k_0 e = -e", space.heisenberg(0, e) == negate(e)});

    ok = true;
    for (long n = 1; n <= max_i; ++n) ok = ok && space.heisenberg(n, f).empty();
    out.push_back({"k_i f = 0 for i >= 1", ok});
    out.push_back({"k_0 f = f", space.heisenberg(0, f) == unit(f)});

    return out;
}

}  // namespace n2vx
