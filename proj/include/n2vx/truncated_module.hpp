#pragma once

#include "n2vx/pbw.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace n2vx {

/// Quotient of a Verma module by a submodule, materialized weight space by
/// weight space up to a level cap. Vectors are reduced against the stored
/// span; touching a weight space past the cap throws TruncationExceeded.
template <class Alg>
class TruncatedModule {
public:
    using P = Pbw<Alg>;
    using Mode = typename Alg::Mode;
    using HW = typename Alg::HighestWeight;
    using Monomial = typename P::Monomial;
    using Vec = typename P::Vec;

    /// Quotient by the submodule generated by singular vectors `gens`
    /// (each must be homogeneous and annihilated by all positive modes,
    /// so the creation-operator span is already the full submodule).
    TruncatedModule(std::shared_ptr<const VermaModule<Alg>> verma, std::vector<Vec> gens,
                    HalfInt max_level, ExecPolicy policy = kDefaultPolicy)
        : verma_(std::move(verma)), max_level_(max_level) {
        build_generated(std::move(gens), policy);
    }

    /// Quotient by the radical of the contravariant form.
    static TruncatedModule radical(std::shared_ptr<const VermaModule<Alg>> verma,
                                   HalfInt max_level, ExecPolicy policy = kDefaultPolicy) {
        TruncatedModule m(std::move(verma), max_level);
        m.build_radical(policy);
        return m;
    }

    const VermaModule<Alg>& verma() const { return *verma_; }
    HalfInt max_level() const { return max_level_; }

    /// Canonical representative of v modulo the span. Splits v by weight
    /// space, so inhomogeneous vectors are fine.
    Vec reduce(const Vec& v) const {
        std::map<std::pair<long, int>, Vec> parts;
        for (const auto& [m, c] : v) {
            parts[{P::level(m).twice(), P::charge(m)}].emplace(m, c);
        }
        Vec out;
        for (auto& [key, part] : parts) {
            const HalfInt l = HalfInt::halves(key.first);
            const int ch = key.second;
            check(l);
            const auto* sp = span(l, ch);
            const auto& b = verma_->basis(l, ch);
            if (sp == nullptr || sp->rank() == 0) {
                for (const auto& [m, c] : part) P::add(out, m, c);
                continue;
            }
            std::map<int, Rational> coord;
            for (const auto& [m, c] : part) coord.emplace(index_of(b, m), c);
            coord = sp->reduce(coord);
            for (const auto& [i, c] : coord) P::add(out, b[i], c);
        }
        return out;
    }

    bool is_zero(const Vec& v) const { return reduce(v).empty(); }

    Vec apply(const Mode& u, const Vec& v) const { return reduce(verma_->apply(u, v)); }
    Vec apply_word(const std::vector<Mode>& w, Vec v) const {
        for (auto it = w.rbegin(); it != w.rend(); ++it) v = apply(*it, v);
        return v;
    }

    /// Quotient dimension of a weight space.
    int dim(HalfInt level, int charge) const {
        check(level);
        const auto& b = verma_->basis(level, charge);
        const auto* sp = span(level, charge);
        return static_cast<int>(b.size()) - (sp ? sp->rank() : 0);
    }

    /// Verma monomials whose classes form a basis of the quotient weight
    /// space (the non-pivot columns of the span).
    std::vector<Monomial> quotient_basis(HalfInt level, int charge) const {
        check(level);
        const auto& b = verma_->basis(level, charge);
        const auto* sp = span(level, charge);
        std::vector<Monomial> out;
        for (size_t i = 0; i < b.size(); ++i)
            if (!sp || !sp->is_pivot_col(static_cast<int>(i))) out.push_back(b[i]);
        return out;
    }

    /// Matrix of the mode action between quotient bases: column j holds the
    /// image of the j-th quotient basis monomial at (level, charge).
    SparseRationalMatrix action_matrix(const Mode& u, HalfInt level, int charge) const {
        const auto src = quotient_basis(level, charge);
        const HalfInt tl = level + Alg::level(u);
        const int tc = charge + Alg::charge(u);
        const auto dst = quotient_basis(tl, tc);
        std::map<Monomial, int> dix;
        for (size_t i = 0; i < dst.size(); ++i) dix.emplace(dst[i], static_cast<int>(i));
        SparseRationalMatrix A(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (size_t j = 0; j < src.size(); ++j) {
            Vec v;
            v.emplace(src[j], Rational(1));
            Vec r = apply(u, v);
            for (const auto& [m, c] : r) A.set(dix.at(m), static_cast<int>(j), c);
        }
        return A;
    }

private:
    TruncatedModule(std::shared_ptr<const VermaModule<Alg>> verma, HalfInt max_level)
        : verma_(std::move(verma)), max_level_(max_level) {}

    // Levels below zero have empty weight spaces and flow through naturally.
    void check(HalfInt level) const {
        if (level.twice() > max_level_.twice())
            throw TruncationExceeded("weight space at level " + level.str() +
                                     " is outside the truncation (max " + max_level_.str() + ")");
    }

    static int index_of(const std::vector<Monomial>& b, const Monomial& m) {
        auto it = std::lower_bound(b.begin(), b.end(), m);
        if (it == b.end() || *it != m)
            throw std::logic_error("monomial missing from weight space basis");
        return static_cast<int>(it - b.begin());
    }

    const ReducedEchelon* span(HalfInt level, int charge) const {
        auto it = spans_.find({level.twice(), charge});
        return it == spans_.end() ? nullptr : &it->second;
    }

    // Weight spaces with a potentially nonzero basis under the cap. Charge
    // is bounded by the most charge-dense family packing of the level.
    std::vector<std::pair<HalfInt, int>> weight_keys() const {
        std::vector<std::pair<HalfInt, int>> keys;
        int cmax = 0;
        for (const auto& fam : Alg::families()) cmax = std::max(cmax, std::abs(fam.charge));
        const long span_tw = max_level_.twice();
        const int qmax = static_cast<int>(cmax * (span_tw + 1));
        for (long tw = 0; tw <= span_tw; ++tw)
            for (int q = -qmax; q <= qmax; ++q)
                if (!verma_->basis(HalfInt::halves(tw), q).empty())
                    keys.emplace_back(HalfInt::halves(tw), q);
        return keys;
    }

    void build_generated(std::vector<Vec> gens, ExecPolicy policy) {
        struct GenInfo {
            Vec v;
            HalfInt level;
            int charge;
        };
        std::vector<GenInfo> gi;
        for (auto& g : gens) {
            if (g.empty()) continue;
            const Monomial& m0 = g.begin()->first;
            gi.push_back({std::move(g), P::level(m0), P::charge(m0)});
        }
        const auto keys = weight_keys();
        std::vector<ReducedEchelon> built(keys.size());
        auto task = [&](size_t ki) {
            const auto [l, ch] = keys[ki];
            const auto& b = verma_->basis(l, ch);
            std::vector<std::map<int, Rational>> vecs;
            for (const auto& g : gi) {
                const HalfInt dl = l - g.level;
                const int dch = ch - g.charge;
                if (dl.twice() < 0) continue;
                for (const auto& mon : verma_->basis(dl, dch)) {
                    std::vector<Mode> word(mon.begin(), mon.end());
                    Vec r = verma_->apply_word(word, g.v);
                    if (r.empty()) continue;
                    std::map<int, Rational> coord;
                    for (const auto& [m, c] : r) coord.emplace(index_of(b, m), c);
                    vecs.push_back(std::move(coord));
                }
            }
            built[ki] = reduced_echelon(vecs, static_cast<int>(b.size()), ExecPolicy::Serial);
        };
        if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
            for (long ki = 0; ki < static_cast<long>(keys.size()); ++ki)
                task(static_cast<size_t>(ki));
#else
            for (size_t ki = 0; ki < keys.size(); ++ki) task(ki);
#endif
        } else {
            for (size_t ki = 0; ki < keys.size(); ++ki) task(ki);
        }
        for (size_t ki = 0; ki < keys.size(); ++ki)
            spans_.emplace(std::make_pair(keys[ki].first.twice(), keys[ki].second),
                           std::move(built[ki]));
    }

    void build_radical(ExecPolicy policy) {
        const auto keys = weight_keys();
        std::vector<ReducedEchelon> built(keys.size());
        auto task = [&](size_t ki) {
            const auto [l, ch] = keys[ki];
            const auto& b = verma_->basis(l, ch);
            SparseRationalMatrix g = verma_->gram(l, ch, ExecPolicy::Serial);
            std::vector<std::map<int, Rational>> vecs;
            for (const auto& x : kernel_basis(g, ExecPolicy::Serial)) {
                std::map<int, Rational> coord;
                for (size_t i = 0; i < x.size(); ++i)
                    if (!x[i].is_zero()) coord.emplace(static_cast<int>(i), x[i]);
                vecs.push_back(std::move(coord));
            }
            built[ki] = reduced_echelon(vecs, static_cast<int>(b.size()), ExecPolicy::Serial);
        };
        if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
            for (long ki = 0; ki < static_cast<long>(keys.size()); ++ki)
                task(static_cast<size_t>(ki));
#else
            for (size_t ki = 0; ki < keys.size(); ++ki) task(ki);
#endif
        } else {
            for (size_t ki = 0; ki < keys.size(); ++ki) task(ki);
        }
        for (size_t ki = 0; ki < keys.size(); ++ki)
            spans_.emplace(std::make_pair(keys[ki].first.twice(), keys[ki].second),
                           std::move(built[ki]));
    }

    std::shared_ptr<const VermaModule<Alg>> verma_;
    HalfInt max_level_;
    std::map<std::pair<long, int>, ReducedEchelon> spans_;
};

}  // namespace n2vx
