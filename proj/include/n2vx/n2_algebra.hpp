#pragma once

#include "n2vx/half_int.hpp"
#include "n2vx/rational.hpp"

#include <compare>
#include <map>
#include <string>

namespace n2vx {

/// Family order doubles as the normal-ordering rank inside PBW monomials.
enum class N2Family : int { L = 0, T = 1, GPlus = 2, GMinus = 3, Central = 4 };

/// Basis mode of the N=2 superconformal algebra: L(n), T(n) with integer
/// index, G+(r), G-(r) with half-odd index, and the central element C.
struct N2Mode {
    N2Family family;
    HalfInt index;

    static N2Mode L(long n) { return {N2Family::L, HalfInt::whole(n)}; }
    static N2Mode T(long n) { return {N2Family::T, HalfInt::whole(n)}; }
    static N2Mode gplus(HalfInt r);
    static N2Mode gminus(HalfInt r);
    static N2Mode central() { return {N2Family::Central, HalfInt()}; }

    friend auto operator<=>(const N2Mode&, const N2Mode&) = default;

    std::string str() const;
};

/// 1 for G modes, 0 otherwise.
int parity(const N2Mode& m);

/// Finite sum of modes with rational coefficients; no explicit zeros.
using N2Element = std::map<N2Mode, Rational>;

void add_term(N2Element& e, const N2Mode& m, const Rational& c);
N2Element scale(const N2Element& e, const Rational& c);

/// Super-bracket [a, b] (anticommutator when both arguments are odd).
/// Central terms appear as coefficient * C.
N2Element super_bracket(const N2Mode& a, const N2Mode& b);

/// Linear extension in the second argument.
N2Element super_bracket(const N2Mode& a, const N2Element& b);

/// The anti-involution defining the contravariant form:
/// L(n) -> L(-n), T(n) -> T(-n), G+(r) -> G-(-r), G-(r) -> G+(-r), C -> C.
N2Mode adjoint(const N2Mode& m);

}  // namespace n2vx
