#pragma once

#include "n2vx/half_int.hpp"
#include "n2vx/linalg.hpp"
#include "n2vx/rational.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace n2vx {

/// Thrown when a quotient operation touches a weight space beyond the
/// truncation the module was built with.
struct TruncationExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Highest-weight module machinery over an algebra described by traits:
///
///   struct Alg {
///     using Mode = ...;            // operator<=> gives the PBW order
///     using HighestWeight = ...;
///     static int parity(const Mode&);
///     static HalfInt level(const Mode&);    // -index; > 0 for creation
///     static int charge(const Mode&);
///     static bool is_creation(const Mode&);
///     static std::map<Mode, Rational> super_bracket(const Mode&, const Mode&);
///     static Rational hw_eigenvalue(const Mode&, const HighestWeight&);
///     struct FamilyDesc { bool fermionic; bool half_odd; int charge;
///                         Mode (*make)(HalfInt); };
///     static const std::vector<FamilyDesc>& families();
///     static Mode adjoint(const Mode&);
///   };
///
/// Monomials are sorted mode words (creation only, indices ascending within
/// each family, families in rank order); vectors are monomial -> coefficient
/// maps understood against the highest-weight vector.
template <class Alg>
struct Pbw {
    using Mode = typename Alg::Mode;
    using HW = typename Alg::HighestWeight;
    using Monomial = std::vector<Mode>;
    using Vec = std::map<Monomial, Rational>;

    static HalfInt level(const Monomial& m) {
        HalfInt l;
        for (const Mode& x : m) l += Alg::level(x);
        return l;
    }
    static int charge(const Monomial& m) {
        int c = 0;
        for (const Mode& x : m) c += Alg::charge(x);
        return c;
    }
    static int parity(const Monomial& m) {
        int p = 0;
        for (const Mode& x : m) p ^= Alg::parity(x);
        return p;
    }

    static void add(Vec& v, const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = v.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) v.erase(it);
        }
    }
    static void axpy(Vec& v, const Rational& a, const Vec& x) {
        if (a.is_zero()) return;
        for (const auto& [m, c] : x) add(v, m, a * c);
    }
    static Vec scale(const Vec& v, const Rational& a) {
        Vec out;
        if (a.is_zero()) return out;
        for (const auto& [m, c] : v) out.emplace(m, c * a);
        return out;
    }

    /// u . (mon |hw>) straightened back to sorted monomials.
    static Vec apply_mode(const Mode& u, const Monomial& mon, const HW& hw) {
        Vec out;
        if (mon.empty()) {
            if (Alg::is_creation(u)) {
                out.emplace(Monomial{u}, Rational(1));
            } else {
                Rational e = Alg::hw_eigenvalue(u, hw);
                if (!e.is_zero()) out.emplace(Monomial{}, e);
            }
            return out;
        }
        const Mode& a = mon.front();
        if (Alg::is_creation(u) && (u < a || u == a)) {
            if (u == a && Alg::parity(u)) return out;  // odd mode squares to zero
            Monomial m2;
            m2.reserve(mon.size() + 1);
            m2.push_back(u);
            m2.insert(m2.end(), mon.begin(), mon.end());
            out.emplace(std::move(m2), Rational(1));
            return out;
        }
        // u a rest = (-1)^{|u||a|} a (u rest) + [u,a] rest
        Monomial rest(mon.begin() + 1, mon.end());
        const Rational sg = (Alg::parity(u) && Alg::parity(a)) ? Rational(-1) : Rational(1);
        Vec tail = apply_mode(u, rest, hw);
        for (const auto& [m2, c] : tail) {
            Vec pre = prepend(a, m2, hw);
            axpy(out, sg * c, pre);
        }
        for (const auto& [bm, bc] : Alg::super_bracket(u, a)) {
            Vec t = apply_mode(bm, rest, hw);
            axpy(out, bc, t);
        }
        return out;
    }

    // a is a creation mode; mon is sorted. Re-straightens when a does not
    // sort in front.
    static Vec prepend(const Mode& a, const Monomial& mon, const HW& hw) {
        Vec out;
        if (mon.empty() || a < mon.front() || a == mon.front()) {
            if (!mon.empty() && a == mon.front() && Alg::parity(a)) return out;
            Monomial m2;
            m2.reserve(mon.size() + 1);
            m2.push_back(a);
            m2.insert(m2.end(), mon.begin(), mon.end());
            out.emplace(std::move(m2), Rational(1));
            return out;
        }
        return apply_mode(a, mon, hw);
    }

    static Vec apply(const Mode& u, const Vec& v, const HW& hw) {
        Vec out;
        for (const auto& [m, c] : v) {
            Vec t = apply_mode(u, m, hw);
            axpy(out, c, t);
        }
        return out;
    }

    /// Operator word a_1 a_2 ... a_k applied to v (rightmost acts first).
    static Vec apply_word(const std::vector<Mode>& word, Vec v, const HW& hw) {
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, v, hw);
        return v;
    }
};

/// Generalized Verma module with basis enumeration, contravariant Gram
/// forms and singular vector search.
template <class Alg>
class VermaModule {
public:
    using P = Pbw<Alg>;
    using Mode = typename Alg::Mode;
    using HW = typename Alg::HighestWeight;
    using Monomial = typename P::Monomial;
    using Vec = typename P::Vec;

    explicit VermaModule(HW hw) : hw_(std::move(hw)) {}

    const HW& hw() const { return hw_; }

    /// Sorted PBW monomial basis of the (level, charge) weight space.
    const std::vector<Monomial>& basis(HalfInt level, int charge) const {
        const std::pair<long, int> key{level.twice(), charge};
        std::lock_guard<std::mutex> lock(mu_);
        auto it = basis_cache_.find(key);
        if (it != basis_cache_.end()) return it->second;
        return basis_cache_.emplace(key, enumerate(level, charge)).first->second;
    }

    Vec apply(const Mode& u, const Vec& v) const { return P::apply(u, v, hw_); }
    Vec apply_word(const std::vector<Mode>& w, const Vec& v) const {
        return P::apply_word(w, v, hw_);
    }

    /// Contravariant Gram matrix of the weight space in basis order.
    SparseRationalMatrix gram(HalfInt level, int charge,
                              ExecPolicy policy = kDefaultPolicy) const {
        const auto& b = basis(level, charge);
        const int n = static_cast<int>(b.size());
        std::vector<Rational> flat(static_cast<size_t>(n) * n);
        auto entry = [&](int i, int j) {
            std::vector<Mode> adj_word;
            adj_word.reserve(b[i].size());
            // <a_1...a_k hw, w> = <hw, adj(a_k)...adj(a_1) w>: adj(a_1) acts first.
            for (auto it = b[i].rbegin(); it != b[i].rend(); ++it)
                adj_word.push_back(Alg::adjoint(*it));
            Vec v;
            v.emplace(b[j], Rational(1));
            Vec r = P::apply_word(adj_word, std::move(v), hw_);
            auto f = r.find(Monomial{});
            flat[static_cast<size_t>(i) * n + j] = (f == r.end() ? Rational(0) : f->second);
        };
        if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
            for (long k = 0; k < static_cast<long>(n) * n; ++k)
                entry(static_cast<int>(k / n), static_cast<int>(k % n));
#else
            for (long k = 0; k < static_cast<long>(n) * n; ++k)
                entry(static_cast<int>(k / n), static_cast<int>(k % n));
#endif
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) entry(i, j);
        }
        SparseRationalMatrix g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g.set(i, j, flat[static_cast<size_t>(i) * n + j]);
        return g;
    }

    /// Positive modes of index magnitude <= level, in a fixed order.
    std::vector<Mode> positive_modes(HalfInt level) const {
        std::vector<Mode> out;
        for (const auto& fam : Alg::families()) {
            for (long tw = fam.half_odd ? 1 : 2; tw <= level.twice(); tw += 2)
                out.push_back(fam.make(HalfInt::halves(tw)));
        }
        return out;
    }

    /// Joint kernel of all positive-mode actions on the weight space,
    /// canonicalized by kernel_basis.
    std::vector<Vec> singular_vectors(HalfInt level, int charge,
                                      ExecPolicy policy = kDefaultPolicy) const {
        const auto& b = basis(level, charge);
        const int n = static_cast<int>(b.size());
        if (n == 0) return {};
        std::vector<SparseRow> rows;
        for (const Mode& u : positive_modes(level)) {
            const HalfInt tl = level + Alg::level(u);  // level(u) < 0 for annihilators
            const int tc = charge + Alg::charge(u);
            if (tl.twice() < 0) continue;
            const auto& tb = basis(tl, tc);
            std::map<Monomial, int> tix;
            for (size_t i = 0; i < tb.size(); ++i) tix.emplace(tb[i], static_cast<int>(i));
            std::vector<SparseRow> block(tb.size());
            for (int j = 0; j < n; ++j) {
                Vec v;
                v.emplace(b[j], Rational(1));
                Vec r = apply(u, v);
                for (const auto& [m, c] : r) {
                    auto f = tix.find(m);
                    if (f == tix.end()) continue;
                    block[f->second].emplace_back(j, c);
                }
            }
            for (auto& br : block) rows.push_back(std::move(br));
        }
        SparseRationalMatrix A(static_cast<int>(rows.size()), n);
        for (size_t i = 0; i < rows.size(); ++i) {
            std::sort(rows[i].begin(), rows[i].end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            for (const auto& [c, val] : rows[i]) A.set(static_cast<int>(i), c, val);
        }
        std::vector<Vec> out;
        for (const auto& x : kernel_basis(A, policy)) {
            Vec v;
            for (int j = 0; j < n; ++j)
                if (!x[j].is_zero()) v.emplace(b[j], x[j]);
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::vector<Monomial> enumerate(HalfInt level, int charge) const {
        std::vector<Monomial> out;
        if (level.twice() < 0) return out;
        const auto& fams = Alg::families();
        Monomial cur;
        // Parts are index magnitudes in doubled units, chosen non-increasing
        // (strictly decreasing for fermionic families) so the concatenated
        // mode word is sorted ascending by index within each family.
        auto rec = [&](auto&& self, size_t fi, long budget_tw, int ch) -> void {
            if (fi == fams.size()) {
                if (budget_tw == 0 && ch == charge) out.push_back(cur);
                return;
            }
            const auto& fam = fams[fi];
            const long min_tw = fam.half_odd ? 1 : 2;
            const size_t mark = cur.size();
            auto parts = [&](auto&& pself, long rem, long max_tw, int ch2) -> void {
                self(self, fi + 1, rem, ch2);  // close this family
                long start = std::min(rem, max_tw);
                // keep the doubled index on the family's parity
                if (((start ^ min_tw) & 1) != 0) --start;
                for (long tw = start; tw >= min_tw; tw -= 2) {
                    cur.push_back(fam.make(HalfInt::halves(-tw)));
                    pself(pself, rem - tw, fam.fermionic ? tw - 2 : tw, ch2 + fam.charge);
                    cur.pop_back();
                }
            };
            parts(parts, budget_tw, budget_tw, ch);
            cur.resize(mark);
        };
        rec(rec, 0, level.twice(), 0);
        std::sort(out.begin(), out.end());
        return out;
    }

    HW hw_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<long, int>, std::vector<Monomial>> basis_cache_;
};

}  // namespace n2vx
