#include "n2vx/affine_sl2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace n2vx {

std::string AffineMode::str() const {
    switch (family) {
        case AffineFamily::E: return "e(" + index.str() + ")";
        case AffineFamily::H: return "h(" + index.str() + ")";
        case AffineFamily::F: return "f(" + index.str() + ")";
        case AffineFamily::Central: return "k";
    }
    return "?";
}

void add_term(AffineElement& e, const AffineMode& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = e.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

AffineElement scale(const AffineElement& e, const Rational& c) {
    AffineElement out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : e) out.emplace(m, v * c);
    return out;
}

namespace {

// Brackets with the first family ranked at or below the second; the central
// pairing term a (x|y) delta_{a+b,0} k is antisymmetry-stable because the
// delta forces b = -a.
AffineElement bracket_ordered(const AffineMode& x, const AffineMode& y) {
    AffineElement out;
    const long a = x.index.whole_part(), b = y.index.whole_part();
    switch (x.family) {
        case AffineFamily::E:
            if (y.family == AffineFamily::H) {
                add_term(out, AffineMode::e(a + b), Rational(-2));
            } else if (y.family == AffineFamily::F) {
                add_term(out, AffineMode::h(a + b), Rational(1));
                if (a + b == 0) add_term(out, AffineMode::k(), Rational(a));
            }
            break;
        case AffineFamily::H:
            if (y.family == AffineFamily::H) {
                if (a + b == 0) add_term(out, AffineMode::k(), Rational(2 * a));
            } else if (y.family == AffineFamily::F) {
                add_term(out, AffineMode::f(a + b), Rational(-2));
            }
            break;
        default:
            break;  // [e,e] = [f,f] = 0 and k is central
    }
    return out;
}

}  // namespace

AffineElement affine_bracket(const AffineMode& a, const AffineMode& b) {
    if (a.family == AffineFamily::Central || b.family == AffineFamily::Central) return {};
    if (static_cast<int>(a.family) <= static_cast<int>(b.family)) return bracket_ordered(a, b);
    return scale(bracket_ordered(b, a), Rational(-1));
}

AffineElement affine_bracket(const AffineMode& a, const AffineElement& b) {
    AffineElement out;
    for (const auto& [m, c] : b) {
        AffineElement t = affine_bracket(a, m);
        for (const auto& [tm, tc] : t) add_term(out, tm, tc * c);
    }
    return out;
}

AffineMode affine_adjoint(const AffineMode& m) {
    switch (m.family) {
        case AffineFamily::E: return AffineMode::f(-m.index.whole_part());
        case AffineFamily::H: return AffineMode::h(-m.index.whole_part());
        case AffineFamily::F: return AffineMode::e(-m.index.whole_part());
        case AffineFamily::Central: return m;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Admissible levels.

bool is_admissible(const Rational& m) {
    // m = t/u canonical, u >= 1 always; gcd(t,u) = 1 by construction.
    return 2 * m.den() + m.num() - 2 >= 0;
}

namespace {

long to_long_checked(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw std::overflow_error(what);
    return z.get_si();
}

}  // namespace

long admissible_N(const Rational& m) {
    if (!is_admissible(m)) throw std::domain_error("level " + m.str() + " is not admissible");
    return to_long_checked(2 * m.den() + m.num() - 2, "N does not fit in long");
}

std::vector<Rational> enumerate_S(const Rational& m) {
    const long N = admissible_N(m);
    const long u = to_long_checked(m.den(), "denominator does not fit in long");
    const Rational mp2 = m + Rational(2);
    std::set<Rational> vals;
    for (long k = 0; k < u; ++k)
        for (long n = 0; n <= N; ++n) vals.insert(Rational(n) - Rational(k) * mp2);
    return {vals.begin(), vals.end()};
}

std::vector<AdmissibleWeight> enumerate_P(const Rational& m) {
    const long N = admissible_N(m);
    const long u = to_long_checked(m.den(), "denominator does not fit in long");
    const Rational mp2 = m + Rational(2);
    std::vector<AdmissibleWeight> out;
    out.reserve(static_cast<size_t>(N + 1) * static_cast<size_t>(u));
    for (long k = 0; k < u; ++k)
        for (long n = 0; n <= N; ++n) {
            const Rational l1 = Rational(n) - Rational(k) * mp2;
            out.push_back({m - l1, l1});
        }
    std::sort(out.begin(), out.end(), [](const AdmissibleWeight& a, const AdmissibleWeight& b) {
        if (a.lambda1 != b.lambda1) return a.lambda1 < b.lambda1;
        return a.lambda0 < b.lambda0;
    });
    return out;
}

bool membership_T(const Rational& m, const Rational& r, const Rational& s) {
    if (r.is_integer() || s.is_integer() || (r - s).is_integer()) return false;
    const auto S = enumerate_S(m);
    return std::find(S.begin(), S.end(), r) != S.end();
}

// ---------------------------------------------------------------------------
// Top levels.

void add_term(Sl2Vec& v, long i, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

FiniteTopLevel::FiniteTopLevel(long r) : r_(r) {
    if (r < 0) throw std::invalid_argument("V(r omega_1) needs r >= 0");
}

Sl2Vec FiniteTopLevel::apply(Sl2Gen g, const Sl2Vec& v) const {
    Sl2Vec out;
    for (const auto& [i, c] : v) {
        if (i < 0 || i > r_) throw std::out_of_range("index outside the w_0..w_r basis");
        switch (g) {
            case Sl2Gen::E:
                add_term(out, i - 1, Rational(i) * Rational(r_ - i + 1) * c);
                break;
            case Sl2Gen::H:
                add_term(out, i, Rational(r_ - 2 * i) * c);
                break;
            case Sl2Gen::F:
                if (i < r_) add_term(out, i + 1, c);
                break;
        }
    }
    return out;
}

DenseTopLevel::DenseTopLevel(Rational r, Rational s, long window)
    : r_(std::move(r)), s_(std::move(s)), window_(window) {
    if (window < 1) throw std::invalid_argument("window must be positive");
}

Sl2Vec DenseTopLevel::apply(Sl2Gen g, const Sl2Vec& v) const {
    Sl2Vec out;
    for (const auto& [i, c] : v) {
        if (i < -window_ || i > window_)
            throw WindowExceeded("index " + std::to_string(i) + " outside dense window");
        const Rational si = s_ + Rational(i);
        switch (g) {
            case Sl2Gen::E: {
                const Rational coeff = -si * c;
                if (coeff.is_zero()) break;
                if (i - 1 < -window_)
                    throw WindowExceeded("e-step leaves the dense window at index " +
                                         std::to_string(i));
                add_term(out, i - 1, coeff);
                break;
            }
            case Sl2Gen::H:
                add_term(out, i, (r_ - Rational(2) * si) * c);
                break;
            case Sl2Gen::F: {
                const Rational coeff = (si - r_) * c;
                if (coeff.is_zero()) break;
                if (i + 1 > window_)
                    throw WindowExceeded("f-step leaves the dense window at index " +
                                         std::to_string(i));
                add_term(out, i + 1, coeff);
                break;
            }
        }
    }
    return out;
}

bool DenseTopLevel::irreducible_in_window() const {
    for (long i = -window_; i <= window_; ++i) {
        const Rational si = s_ + Rational(i);
        if (si.is_zero()) return false;        // e annihilates E_i
        if ((si - r_).is_zero()) return false; // f annihilates E_i
    }
    return true;
}

AffineTrunc simple_vacuum_affine(const Rational& m, HalfInt max_level, ExecPolicy policy) {
    return AffineTrunc::radical(make_affine_verma(m), max_level, policy);
}

}  // namespace n2vx
