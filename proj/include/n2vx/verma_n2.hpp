#pragma once

#include "n2vx/n2_algebra.hpp"
#include "n2vx/pbw.hpp"
#include "n2vx/truncated_module.hpp"

#include <memory>

namespace n2vx {

/// Highest weight datum (L0, T0, central eigenvalues).
struct N2Hw {
    Rational h;
    Rational q;
    Rational c;
};

struct N2AlgTraits {
    using Mode = N2Mode;
    using HighestWeight = N2Hw;

    static int parity(const Mode& m) { return n2vx::parity(m); }
    static HalfInt level(const Mode& m) { return -m.index; }
    static int charge(const Mode& m) {
        if (m.family == N2Family::GPlus) return 1;
        if (m.family == N2Family::GMinus) return -1;
        return 0;
    }
    static bool is_creation(const Mode& m) {
        return m.family != N2Family::Central && m.index.twice() < 0;
    }
    static N2Element super_bracket(const Mode& a, const Mode& b) {
        return n2vx::super_bracket(a, b);
    }
    static Rational hw_eigenvalue(const Mode& m, const N2Hw& hw) {
        if (m.family == N2Family::Central) return hw.c;
        if (m.index.twice() > 0) return Rational(0);
        if (m.family == N2Family::L) return hw.h;
        if (m.family == N2Family::T) return hw.q;
        return Rational(0);  // G modes are half-odd, never index zero
    }
    static Mode adjoint(const Mode& m) { return n2vx::adjoint(m); }

    struct FamilyDesc {
        bool fermionic;
        bool half_odd;
        int charge;
        Mode (*make)(HalfInt);
    };
    static const std::vector<FamilyDesc>& families() {
        static const std::vector<FamilyDesc> f = {
            {false, false, 0, +[](HalfInt i) { return N2Mode::L(i.whole_part()); }},
            {false, false, 0, +[](HalfInt i) { return N2Mode::T(i.whole_part()); }},
            {true, true, 1, +[](HalfInt i) { return N2Mode::gplus(i); }},
            {true, true, -1, +[](HalfInt i) { return N2Mode::gminus(i); }},
        };
        return f;
    }
};

using N2Verma = VermaModule<N2AlgTraits>;
using N2Trunc = TruncatedModule<N2AlgTraits>;
using N2Pbw = Pbw<N2AlgTraits>;
using N2Vec = N2Pbw::Vec;
using N2Monomial = N2Pbw::Monomial;

inline std::shared_ptr<const N2Verma> make_verma(const Rational& h, const Rational& q,
                                                 const Rational& c) {
    return std::make_shared<const N2Verma>(N2Hw{h, q, c});
}

/// Vacuum SVOA truncation: the (0,0,c) module modulo the submodule generated
/// by G+(-1/2)|0> and G-(-1/2)|0>. Both generators are annihilated by every
/// positive mode at h = q = 0, so the creation span is the full submodule.
N2Trunc vacuum_svoa(const Rational& c, HalfInt max_level,
                    ExecPolicy policy = kDefaultPolicy);

}  // namespace n2vx
