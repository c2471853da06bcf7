#pragma once

#include "n2vx/errors.hpp"
#include "n2vx/half_int.hpp"
#include "n2vx/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace n2vx {

// ---------------------------------------------------------------------------
// Charged free fermions.

enum class Species { Plus, Minus };

/// Basis state of the fermionic Fock space F, stored as the creation modes
/// of the canonical word psi+_{p_1}..psi+_{p_a} psi-_{q_1}..psi-_{q_b} |0>.
/// Both lists are strictly increasing with negative half-odd entries.
struct FermionState {
    std::vector<HalfInt> plus;
    std::vector<HalfInt> minus;
    friend auto operator<=>(const FermionState&, const FermionState&) = default;
    std::string str() const;
};

using FermionVec = std::map<FermionState, Rational>;

int fermion_parity(const FermionState& s);
int fermion_charge(const FermionState& s);
HalfInt fermion_weight(const FermionState& s);

/// psi^{sp}_r on a basis state, r half-odd. CAR: {psi+_r, psi-_s} =
/// delta_{r+s,0} and same-species anticommutators vanish, so the result has
/// at most one term; the sign counts the transpositions needed to reach the
/// canonical word.
FermionVec fermion_act(Species sp, HalfInt r, const FermionState& s);
FermionVec fermion_act(Species sp, HalfInt r, const FermionVec& v);

/// All basis states of the given exact weight and charge.
std::vector<FermionState> fermion_basis(HalfInt weight, int charge);

// ---------------------------------------------------------------------------
// Schur polynomials.

/// Monomial in x_1, x_2, ...: variable index -> exponent, no zero exponents.
using SchurMonomial = std::map<long, long>;
using SchurPoly = std::map<SchurMonomial, Rational>;

/// p_r defined by exp(sum_{n>=1} x_n y^n / n) = sum_{r>=0} p_r y^r, built by
/// the recurrence r p_r = sum_{j=1..r} x_j p_{r-j}. Empty for r < 0. Every
/// monomial of p_r has weighted degree sum_j j * exp_j equal to r.
SchurPoly schur_poly(long r);

// ---------------------------------------------------------------------------
// Rank-one lattice vertex superalgebra F_nu, nu = <alpha, alpha> < 0.

/// iota(a^exponent) alpha(h_1)...alpha(h_k)|0> with entries h_i <= -1,
/// ascending.
struct LatticeState {
    long exponent = 0;
    std::vector<long> heis;
    friend auto operator<=>(const LatticeState&, const LatticeState&) = default;
    std::string str() const;
};

using LatticeVec = std::map<LatticeState, Rational>;

/// Sum of the magnitudes of the Heisenberg entries.
long heisenberg_weight(const LatticeState& s);

/// The lattice Fock space with hard windows on the exponent and Heisenberg
/// depth. Window checks fire only when a state outside the window would
/// actually be produced; structurally zero results never throw.
class LatticeSpace {
public:
    explicit LatticeSpace(long nu = -1, long max_exponent = 6, long max_heis = 12);

    long nu() const { return nu_; }
    long max_exponent() const { return max_exponent_; }
    long max_heis() const { return max_heis_; }

    /// alpha(a): [alpha(a), alpha(b)] = a nu delta_{a+b,0} and alpha(0) acts
    /// on iota(a^k) by k nu.
    LatticeVec heisenberg(long a, const LatticeState& s) const;
    LatticeVec heisenberg(long a, const LatticeVec& v) const;

    /// iota(a^l)_i: the z^{-i-1} coefficient of
    ///   exp(sum_{n>=1} l alpha(-n) z^n / n) exp(-sum_{n>=1} l alpha(n) z^{-n} / n)
    ///   e_{l alpha} z^{l alpha(0)}
    /// with the trivial cocycle. The creation exponential is expanded as a
    /// direct product of series, term by term.
    LatticeVec vertex_mode(long l, long i, const LatticeState& s) const;
    LatticeVec vertex_mode(long l, long i, const LatticeVec& v) const;

    /// L_0 weight nu k^2 / 2 + Heisenberg depth; unbounded below for nu < 0.
    Rational weight(const LatticeState& s) const;

    /// iota(a^k) sectors are odd exactly when k^2 nu is odd.
    int parity(const LatticeState& s) const;

    /// Largest i for which iota(a^l)_i can act on s without vanishing; every
    /// higher mode annihilates s on z-degree grounds alone.
    long vertex_mode_upper_bound(const LatticeState& s, long l) const;

    /// All states with the given exponent and exact Heisenberg weight.
    std::vector<LatticeState> basis(long exponent, long heis_weight) const;

private:
    void check_state(const LatticeState& s) const;
    void emit(LatticeVec& out, LatticeState s, const Rational& c) const;

    long nu_;
    long max_exponent_;
    long max_heis_;
};

/// p(x_1 <- k alpha(-1), x_2 <- k alpha(-2), ...) applied to
/// iota(a^base_exponent)|0>.
LatticeVec schur_substitute(const SchurPoly& p, long k, long base_exponent);

/// Clause-by-clause check of the operator relations among e = iota(a),
/// f = iota(a^{-1}) and k = alpha(-1)|0> in F_{-1}; vanishing ranges are
/// swept up to mode index max_i. Failures are reported, never thrown.
struct FminusCheck {
    std::string name;
    bool passed;
};
std::vector<FminusCheck> verify_prop_fminus(const LatticeSpace& space, long max_i = 6);

}  // namespace n2vx
