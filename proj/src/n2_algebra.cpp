#include "n2vx/n2_algebra.hpp"

#include <cassert>
#include <stdexcept>

namespace n2vx {

N2Mode N2Mode::gplus(HalfInt r) {
    if (!r.is_half_odd()) throw std::invalid_argument("G+ index must be half-odd");
    return {N2Family::GPlus, r};
}

N2Mode N2Mode::gminus(HalfInt r) {
    if (!r.is_half_odd()) throw std::invalid_argument("G- index must be half-odd");
    return {N2Family::GMinus, r};
}

std::string N2Mode::str() const {
    switch (family) {
        case N2Family::L: return "L(" + index.str() + ")";
        case N2Family::T: return "T(" + index.str() + ")";
        case N2Family::GPlus: return "G+(" + index.str() + ")";
        case N2Family::GMinus: return "G-(" + index.str() + ")";
        case N2Family::Central: return "C";
    }
    return "?";
}

int parity(const N2Mode& m) {
    return (m.family == N2Family::GPlus || m.family == N2Family::GMinus) ? 1 : 0;
}

void add_term(N2Element& e, const N2Mode& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = e.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

N2Element scale(const N2Element& e, const Rational& c) {
    N2Element out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : e) out.emplace(m, v * c);
    return out;
}

namespace {

// Brackets with the first family ranked at or below the second; the public
// entry point reduces the remaining cases by super-antisymmetry.
N2Element bracket_ordered(const N2Mode& a, const N2Mode& b) {
    N2Element out;
    const HalfInt mi = a.index, ni = b.index;
    switch (a.family) {
        case N2Family::L: {
            const long m = mi.whole_part();
            switch (b.family) {
                case N2Family::L: {
                    const long n = ni.whole_part();
                    add_term(out, N2Mode::L(m + n), Rational(m - n));
                    if (m + n == 0)
                        add_term(out, N2Mode::central(),
                                 Rational(m, 12) * Rational(m - 1) * Rational(m + 1));
                    break;
                }
                case N2Family::T:
                    add_term(out, N2Mode::T(m + ni.whole_part()), Rational(-ni.whole_part()));
                    break;
                case N2Family::GPlus:
                    add_term(out, N2Mode::gplus(mi + ni), Rational(mi.twice(), 4) - ni.to_rational());
                    break;
                case N2Family::GMinus:
                    add_term(out, N2Mode::gminus(mi + ni), Rational(mi.twice(), 4) - ni.to_rational());
                    break;
                case N2Family::Central: break;
            }
            break;
        }
        case N2Family::T: {
            const long m = mi.whole_part();
            switch (b.family) {
                case N2Family::T:
                    if (m + ni.whole_part() == 0)
                        add_term(out, N2Mode::central(), Rational(m, 3));
                    break;
                case N2Family::GPlus:
                    add_term(out, N2Mode::gplus(mi + ni), Rational(1));
                    break;
                case N2Family::GMinus:
                    add_term(out, N2Mode::gminus(mi + ni), Rational(-1));
                    break;
                default: break;
            }
            break;
        }
        case N2Family::GPlus: {
            // {G+, G+} = 0; the G+G- anticommutator lands on integer level.
            if (b.family == N2Family::GMinus) {
                const HalfInt r = mi, s = ni;
                const long n = (r + s).whole_part();
                add_term(out, N2Mode::L(n), Rational(2));
                add_term(out, N2Mode::T(n), (r - s).to_rational());
                if (n == 0)
                    add_term(out, N2Mode::central(),
                             Rational(1, 3) * (r.to_rational() * r.to_rational() - Rational(1, 4)));
            }
            break;
        }
        default:
            break;
    }
    return out;
}

}  // namespace

N2Element super_bracket(const N2Mode& a, const N2Mode& b) {
    if (a.family == N2Family::Central || b.family == N2Family::Central) return {};
    if (static_cast<int>(a.family) <= static_cast<int>(b.family)) return bracket_ordered(a, b);
    // [a,b] = -(-1)^{|a||b|} [b,a]
    N2Element rev = bracket_ordered(b, a);
    const Rational s = (parity(a) && parity(b)) ? Rational(1) : Rational(-1);
    return scale(rev, s);
}

N2Element super_bracket(const N2Mode& a, const N2Element& b) {
    N2Element out;
    for (const auto& [m, c] : b) {
        N2Element t = super_bracket(a, m);
        for (const auto& [tm, tc] : t) add_term(out, tm, tc * c);
    }
    return out;
}

N2Mode adjoint(const N2Mode& m) {
    switch (m.family) {
        case N2Family::L: return N2Mode::L(-m.index.whole_part());
        case N2Family::T: return N2Mode::T(-m.index.whole_part());
        case N2Family::GPlus: return N2Mode::gminus(-m.index);
        case N2Family::GMinus: return N2Mode::gplus(-m.index);
        case N2Family::Central: return m;
    }
    return m;
}

}  // namespace n2vx
