#pragma once

#include "n2vx/errors.hpp"
#include "n2vx/half_int.hpp"
#include "n2vx/pbw.hpp"
#include "n2vx/rational.hpp"
#include "n2vx/truncated_module.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace n2vx {

// ---------------------------------------------------------------------------
// Admissible levels.

/// m = t/u in lowest terms with u >= 1 is admissible iff 2u + t - 2 >= 0.
bool is_admissible(const Rational& m);

/// N = 2u + t - 2 for admissible m = t/u; equals m itself when m is a
/// nonnegative integer. Throws std::domain_error for non-admissible m.
long admissible_N(const Rational& m);

/// S^m = { n - k(m+2) | 0 <= n <= N, 0 <= k <= u-1 }, ascending, deduped.
std::vector<Rational> enumerate_S(const Rational& m);

/// lambda = lambda0 * Lambda_0 + lambda1 * Lambda_1, with lambda0 + lambda1 = m.
struct AdmissibleWeight {
    Rational lambda0;
    Rational lambda1;
    friend bool operator==(const AdmissibleWeight&, const AdmissibleWeight&) = default;
};

/// P^m = { (m - n + k(m+2)) Lambda_0 + (n - k(m+2)) Lambda_1 } over the same
/// (n, k) ranges as S^m. The map (n, k) -> weight is injective (u | k - k'
/// forces k = k'), so the count is (N+1) * u; returned sorted by
/// (lambda1, lambda0).
std::vector<AdmissibleWeight> enumerate_P(const Rational& m);

/// (r, s) lies in T^m iff r is a non-integral element of S^m, s is not an
/// integer, and r - s is not an integer.
bool membership_T(const Rational& m, const Rational& r, const Rational& s);

// ---------------------------------------------------------------------------
// Top levels of the irreducible modules: sl2 acting on index-labelled bases.

enum class Sl2Gen { E, H, F };

/// Sparse vector over an index-labelled basis (w_i or E_i); no explicit zeros.
using Sl2Vec = std::map<long, Rational>;

void add_term(Sl2Vec& v, long i, const Rational& c);

/// V(r omega_1), basis w_0 .. w_r:
///   e.w_i = i(r-i+1) w_{i-1},  h.w_i = (r-2i) w_i,  f.w_i = w_{i+1}.
class FiniteTopLevel {
public:
    explicit FiniteTopLevel(long r);

    long r() const { return r_; }

    /// Throws std::out_of_range if v touches an index outside [0, r].
    Sl2Vec apply(Sl2Gen g, const Sl2Vec& v) const;

private:
    long r_;
};

/// E_{r,s}, basis E_i indexed over the integers:
///   e.E_i = -(s+i) E_{i-1},  h.E_i = (-2s-2i+r) E_i,  f.E_i = (s+i-r) E_{i+1}.
/// Indices live in [-window, window]; any nonzero step outside throws
/// WindowExceeded.
class DenseTopLevel {
public:
    DenseTopLevel(Rational r, Rational s, long window);

    const Rational& r() const { return r_; }
    const Rational& s() const { return s_; }
    long window() const { return window_; }

    Sl2Vec apply(Sl2Gen g, const Sl2Vec& v) const;

    /// True when no e- or f-step coefficient vanishes for |i| <= window:
    /// the finite certificate that no extremal vector exists in the examined
    /// range. Vanishing anywhere needs s or r - s integral, so a window scan
    /// covering those roots is conclusive.
    bool irreducible_in_window() const;

private:
    Rational r_;
    Rational s_;
    long window_;
};

/// Casimir ef + fe + h^2/2 through the module's own action. Acts as the
/// scalar r(r+2)/2 on both top-level families.
template <class Module>
Sl2Vec casimir_apply(const Module& mod, const Sl2Vec& v) {
    Sl2Vec out = mod.apply(Sl2Gen::E, mod.apply(Sl2Gen::F, v));
    for (const auto& [i, c] : mod.apply(Sl2Gen::F, mod.apply(Sl2Gen::E, v)))
        add_term(out, i, c);
    for (const auto& [i, c] : mod.apply(Sl2Gen::H, mod.apply(Sl2Gen::H, v)))
        add_term(out, i, c / Rational(2));
    return out;
}

// ---------------------------------------------------------------------------
// The affine algebra itself, in the shape the PBW engine consumes.

enum class AffineFamily : int { E = 0, H = 1, F = 2, Central = 3 };

/// Basis mode e(n), h(n), f(n) (integer n) or the central element k.
struct AffineMode {
    AffineFamily family;
    HalfInt index;

    static AffineMode e(long n) { return {AffineFamily::E, HalfInt::whole(n)}; }
    static AffineMode h(long n) { return {AffineFamily::H, HalfInt::whole(n)}; }
    static AffineMode f(long n) { return {AffineFamily::F, HalfInt::whole(n)}; }
    static AffineMode k() { return {AffineFamily::Central, HalfInt()}; }

    friend auto operator<=>(const AffineMode&, const AffineMode&) = default;

    std::string str() const;
};

using AffineElement = std::map<AffineMode, Rational>;

void add_term(AffineElement& e, const AffineMode& m, const Rational& c);
AffineElement scale(const AffineElement& e, const Rational& c);

/// [x(a), y(b)] = [x,y](a+b) + a (x|y) delta_{a+b,0} k with [e,f] = h,
/// [h,e] = 2e, [h,f] = -2f and the pairing (e|f) = 1, (h|h) = 2.
AffineElement affine_bracket(const AffineMode& a, const AffineMode& b);

/// Linear extension in the second argument.
AffineElement affine_bracket(const AffineMode& a, const AffineElement& b);

/// Contravariant anti-involution: e(n) -> f(-n), f(n) -> e(-n),
/// h(n) -> h(-n), k -> k.
AffineMode affine_adjoint(const AffineMode& m);

/// Highest weight of the generalized vacuum Verma module M(m,0): k acts by
/// m and the whole of sl2 (all zero modes) annihilates the vacuum vector.
struct AffineHw {
    Rational m;
};

struct AffineAlgTraits {
    using Mode = AffineMode;
    using HighestWeight = AffineHw;

    static int parity(const Mode&) { return 0; }
    static HalfInt level(const Mode& m) { return -m.index; }
    static int charge(const Mode& m) {
        if (m.family == AffineFamily::E) return 2;
        if (m.family == AffineFamily::F) return -2;
        return 0;
    }
    static bool is_creation(const Mode& m) {
        return m.family != AffineFamily::Central && m.index.twice() < 0;
    }
    static AffineElement super_bracket(const Mode& a, const Mode& b) {
        return affine_bracket(a, b);
    }
    static Rational hw_eigenvalue(const Mode& m, const AffineHw& hw) {
        if (m.family == AffineFamily::Central) return hw.m;
        return Rational(0);
    }
    static Mode adjoint(const Mode& m) { return affine_adjoint(m); }

    struct FamilyDesc {
        bool fermionic;
        bool half_odd;
        int charge;
        Mode (*make)(HalfInt);
    };
    static const std::vector<FamilyDesc>& families() {
        static const std::vector<FamilyDesc> f = {
            {false, false, 2, +[](HalfInt i) { return AffineMode::e(i.whole_part()); }},
            {false, false, 0, +[](HalfInt i) { return AffineMode::h(i.whole_part()); }},
            {false, false, -2, +[](HalfInt i) { return AffineMode::f(i.whole_part()); }},
        };
        return f;
    }
};

using AffineVerma = VermaModule<AffineAlgTraits>;
using AffineTrunc = TruncatedModule<AffineAlgTraits>;
using AffinePbw = Pbw<AffineAlgTraits>;
using AffineVec = AffinePbw::Vec;
using AffineMonomial = AffinePbw::Monomial;

inline std::shared_ptr<const AffineVerma> make_affine_verma(const Rational& m) {
    return std::make_shared<const AffineVerma>(AffineHw{m});
}

/// L(m,0) truncation: M(m,0) modulo the radical of the contravariant form,
/// weight space by weight space up to max_level.
AffineTrunc simple_vacuum_affine(const Rational& m, HalfInt max_level,
                                 ExecPolicy policy = kDefaultPolicy);

}  // namespace n2vx
