#include "n2vx/verma_n2.hpp"

namespace n2vx {

N2Trunc vacuum_svoa(const Rational& c, HalfInt max_level, ExecPolicy policy) {
    auto verma = make_verma(Rational(0), Rational(0), c);
    N2Vec gp, gm;
    gp.emplace(N2Monomial{N2Mode::gplus(HalfInt::halves(-1))}, Rational(1));
    gm.emplace(N2Monomial{N2Mode::gminus(HalfInt::halves(-1))}, Rational(1));
    return N2Trunc(std::move(verma), {std::move(gp), std::move(gm)}, max_level, policy);
}

}  // namespace n2vx
