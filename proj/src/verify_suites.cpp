#include "n2vx/verify_suites.hpp"

#include "n2vx/affine_sl2.hpp"
#include "n2vx/n2_algebra.hpp"

#include <vector>

namespace n2vx {

namespace {

std::vector<N2Mode> n2_pool(long max_index) {
    std::vector<N2Mode> ms;
    for (long n = -max_index; n <= max_index; ++n) {
        ms.push_back(N2Mode::L(n));
        ms.push_back(N2Mode::T(n));
    }
    for (long t = -2 * max_index + 1; t <= 2 * max_index - 1; t += 2) {
        ms.push_back(N2Mode::gplus(HalfInt::halves(t)));
        ms.push_back(N2Mode::gminus(HalfInt::halves(t)));
    }
    ms.push_back(N2Mode::central());
    return ms;
}

std::vector<AffineMode> affine_pool(long max_index) {
    std::vector<AffineMode> ms;
    for (long n = -max_index; n <= max_index; ++n) {
        ms.push_back(AffineMode::e(n));
        ms.push_back(AffineMode::h(n));
        ms.push_back(AffineMode::f(n));
    }
    ms.push_back(AffineMode::k());
    return ms;
}

bool n2_antisymmetry(const std::vector<N2Mode>& ms) {
    for (const auto& a : ms)
        for (const auto& b : ms) {
            const Rational s = (parity(a) && parity(b)) ? Rational(1) : Rational(-1);
            if (super_bracket(a, b) != scale(super_bracket(b, a), s)) return false;
        }
    return true;
}

bool n2_jacobi(const std::vector<N2Mode>& ms) {
    for (const auto& a : ms)
        for (const auto& b : ms)
            for (const auto& c : ms) {
                // (-1)^{|a||c|}[a,[b,c]] + cyclic = 0
                N2Element total;
                auto term = [&](const N2Mode& x, const N2Mode& y, const N2Mode& z) {
                    const Rational s = (parity(x) && parity(z)) ? Rational(-1) : Rational(1);
                    for (const auto& [m, co] : super_bracket(x, super_bracket(y, z)))
                        add_term(total, m, s * co);
                };
                term(a, b, c);
                term(b, c, a);
                term(c, a, b);
                if (!total.empty()) return false;
            }
    return true;
}

bool affine_antisymmetry(const std::vector<AffineMode>& ms) {
    for (const auto& a : ms)
        for (const auto& b : ms)
            if (affine_bracket(a, b) != scale(affine_bracket(b, a), Rational(-1))) return false;
    return true;
}

bool affine_jacobi(const std::vector<AffineMode>& ms) {
    for (const auto& a : ms)
        for (const auto& b : ms)
            for (const auto& c : ms) {
                AffineElement total = affine_bracket(a, affine_bracket(b, c));
                for (const auto& [m, co] : affine_bracket(b, affine_bracket(c, a)))
                    add_term(total, m, co);
                for (const auto& [m, co] : affine_bracket(c, affine_bracket(a, b)))
                    add_term(total, m, co);
                if (!total.empty()) return false;
            }
    return true;
}

}  // namespace

std::vector<SuiteCheck> jacobi_suite(long max_index) {
    const auto n2 = n2_pool(max_index);
    const auto aff = affine_pool(max_index);
    const auto sq = [](size_t n) { return std::to_string(n * n); };
    const auto cube = [](size_t n) { return std::to_string(n * n * n); };
    std::vector<SuiteCheck> out;
    out.push_back({"n2 graded antisymmetry over " + sq(n2.size()) + " pairs",
                   n2_antisymmetry(n2)});
    out.push_back({"n2 graded jacobi over " + cube(n2.size()) + " triples", n2_jacobi(n2)});
    out.push_back({"affine antisymmetry over " + sq(aff.size()) + " pairs",
                   affine_antisymmetry(aff)});
    out.push_back({"affine jacobi over " + cube(aff.size()) + " triples", affine_jacobi(aff)});
    return out;
}

}  // namespace n2vx
