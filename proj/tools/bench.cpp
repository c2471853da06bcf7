// Timing comparison of the serial reference kernels against the OpenMP
// paths. Both policies produce identical exact results; the serial runs
// double as the correctness baseline here.

#include "n2vx/linalg.hpp"
#include "n2vx/verma_n2.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using namespace n2vx;

namespace {

double run_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, long dim, double serial_ms, double parallel_ms,
            bool equal) {
    std::printf("%-38s %6ld %11.1f %11.1f %8.2fx %6s\n", name.c_str(), dim, serial_ms,
                parallel_ms, serial_ms / parallel_ms, equal ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
    long level = 3;
    if (argc > 1) level = std::atol(argv[1]);
    if (argc > 2 || level < 1 || level > 6) {
        std::fprintf(stderr, "usage: n2vx_bench [level 1..6]\n");
        return 1;
    }

    std::printf("%-38s %6s %11s %11s %9s %6s\n", "kernel", "dim", "serial ms",
                "parallel ms", "speedup", "equal");

    {
        const auto M = make_verma(Rational(1, 3), Rational(1, 7), Rational(5));
        const HalfInt l = HalfInt::whole(level);
        const long dim = static_cast<long>(M->basis(l, 0).size());  // warm the cache
        SparseRationalMatrix gs(0, 0), gp(0, 0);
        const double ts = run_ms([&] { gs = M->gram(l, 0, ExecPolicy::Serial); });
        const double tp = run_ms([&] { gp = M->gram(l, 0, ExecPolicy::Parallel); });
        report("gram M(1/3,1/7,c=5) level " + std::to_string(level), dim, ts, tp, gs == gp);

        std::vector<std::vector<Rational>> ks, kp;
        const double es = run_ms([&] { ks = kernel_basis(gs, ExecPolicy::Serial); });
        const double ep = run_ms([&] { kp = kernel_basis(gp, ExecPolicy::Parallel); });
        report("kernel_basis of that Gram matrix", dim, es, ep, ks == kp);
    }

    {
        const auto M = make_verma(Rational(0), Rational(0), Rational(1));
        const HalfInt l = HalfInt::whole(level);
        M->basis(l, 0);
        std::vector<N2Vec> ss, sp;
        const double ts =
            run_ms([&] { ss = M->singular_vectors(l, 0, ExecPolicy::Serial); });
        const double tp =
            run_ms([&] { sp = M->singular_vectors(l, 0, ExecPolicy::Parallel); });
        report("singular M(0,0,c=1) level " + std::to_string(level),
               static_cast<long>(M->basis(l, 0).size()), ts, tp, ss == sp);
    }

    {
        const HalfInt l = HalfInt::whole(level + 3);
        long dim_s = 0, dim_p = 0;
        auto dim_of = [&](const N2Trunc& t) {
            long d = 0;
            for (long tw = 0; tw <= l.twice(); ++tw)
                for (int ch = -4; ch <= 4; ++ch)
                    d += static_cast<long>(
                        t.quotient_basis(HalfInt::halves(tw), ch).size());
            return d;
        };
        const double ts = run_ms(
            [&] { dim_s = dim_of(vacuum_svoa(Rational(1), l, ExecPolicy::Serial)); });
        const double tp = run_ms(
            [&] { dim_p = dim_of(vacuum_svoa(Rational(1), l, ExecPolicy::Parallel)); });
        report("vacuum quotient c=1 to level " + std::to_string(level + 3),
               dim_s, ts, tp, dim_s == dim_p);
    }

    return 0;
}
