#include "n2vx/classification.hpp"

#include <set>
#include <utility>

namespace n2vx {

Rational central_charge(const Rational& m) {
    if (m == Rational(-2)) throw LevelExcluded("central charge is undefined at level -2");
    return Rational(3) * m / (m + Rational(2));
}

std::vector<WEntry> enumerate_W(const Rational& m) {
    const long N = admissible_N(m);
    const Rational mp2 = m + Rational(2);
    std::vector<WEntry> out;
    std::set<std::pair<Rational, Rational>> seen;
    for (long r = 0; r <= N; ++r)
        for (long i = 0; i <= r; ++i) {
            WEntry e;
            e.i = i;
            e.r = r;
            e.j = Rational(2 * i + 1, 2);
            e.k = Rational(2 * (r - i) + 1, 2);
            e.h = (e.j * e.k - Rational(1, 4)) / mp2;
            e.q = (e.j - e.k) / mp2;
            if (seen.emplace(e.h, e.q).second) out.push_back(e);
        }
    return out;
}

std::vector<Rational> membership_D(const Rational& m, const Rational& h, const Rational& q) {
    (void)admissible_N(m);  // admissibility gate
    if (m.is_integer() && m >= Rational(0))
        throw DNotDefined("the family D does not exist at non negative integer levels");
    const Rational mp2 = m + Rational(2);
    const Rational lhs = q * q + Rational(4) * h / mp2;
    std::vector<Rational> out;
    for (const Rational& r : enumerate_S(m)) {
        if (r.is_integer()) continue;
        if (lhs == r * (r + Rational(2)) / (mp2 * mp2)) out.push_back(r);
    }
    return out;
}

const char* module_class_name(ModuleClass c) {
    switch (c) {
        case ModuleClass::NotAdmissible: return "not-admissible";
        case ModuleClass::InW: return "W";
        case ModuleClass::InD: return "D";
        case ModuleClass::NotModule: return "not-a-module";
    }
    return "?";
}

Classification classify(const Rational& m, const Rational& h, const Rational& q) {
    Classification res;
    if (!is_admissible(m)) {
        res.result = ModuleClass::NotAdmissible;
        return res;
    }
    for (const WEntry& e : enumerate_W(m))
        if (e.h == h && e.q == q) {
            res.result = ModuleClass::InW;
            res.w = e;
            return res;
        }
    if (!(m.is_integer() && m >= Rational(0))) {
        auto d = membership_D(m, h, q);
        if (!d.empty()) {
            res.result = ModuleClass::InD;
            res.d_witnesses = std::move(d);
            return res;
        }
    }
    res.result = ModuleClass::NotModule;
    return res;
}

}  // namespace n2vx
