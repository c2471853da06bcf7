#pragma once

#include "n2vx/affine_sl2.hpp"
#include "n2vx/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace n2vx {

/// Thrown for the excluded level m = -2, where the central charge formula
/// degenerates.
struct LevelExcluded : std::domain_error {
    using std::domain_error::domain_error;
};

/// Thrown when the continuous family D is requested at a non negative
/// integer level; there it does not exist.
struct DNotDefined : std::domain_error {
    using std::domain_error::domain_error;
};

/// c = 3m/(m+2).
Rational central_charge(const Rational& m);

/// One member of the discrete family W: the highest weight (h, q) together
/// with both index parametrizations producing it. The pair (i, r) runs over
/// integers 0 <= i <= r <= N; the shifted pair is j = i + 1/2 and
/// k = r - i + 1/2, so j, k > 0 and j + k <= N + 1.
struct WEntry {
    long i = 0;
    long r = 0;
    Rational j;  // i + 1/2
    Rational k;  // r - i + 1/2
    Rational h;  // (jk - 1/4)/(m+2)
    Rational q;  // (j - k)/(m+2)
};

/// All of W at an admissible level, in (r, i) lexicographic enumeration
/// order, deduplicated by (h, q). |W| = (N+1)(N+2)/2.
/// Throws std::domain_error for non admissible m.
std::vector<WEntry> enumerate_W(const Rational& m);

/// All witnesses r in S^m \ Z with q^2 + 4h/(m+2) = r(r+2)/(m+2)^2, in the
/// order enumerate_S produces them. An empty result means (h, q) is not in
/// D. Throws DNotDefined at non negative integer levels and
/// std::domain_error for non admissible m.
std::vector<Rational> membership_D(const Rational& m, const Rational& h, const Rational& q);

enum class ModuleClass { NotAdmissible, InW, InD, NotModule };

const char* module_class_name(ModuleClass c);

struct Classification {
    ModuleClass result = ModuleClass::NotAdmissible;
    std::optional<WEntry> w;            // set when result is InW
    std::vector<Rational> d_witnesses;  // set when result is InD
};

/// Decide how (h, q) sits among the irreducible highest weights at level m:
/// in the discrete family W, in the continuous family D (which only exists
/// at non integer admissible levels), or not a module at all. A level that
/// fails admissibility short circuits everything else.
Classification classify(const Rational& m, const Rational& h, const Rational& q);

}  // namespace n2vx
