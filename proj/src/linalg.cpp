#include "n2vx/linalg.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace n2vx {

void SparseRationalMatrix::set(int r, int c, const Rational& v) {
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v.is_zero())
            row.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        row.insert(it, {c, v});
    }
}

Rational SparseRationalMatrix::at(int r, int c) const {
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
}

namespace {

// Row scaled to a primitive integer row (lcm of denominators, gcd content
// removed). Content removal is done only here, before elimination starts;
// the Bareiss exact-division invariant holds for any integer input matrix.
IntRow integerize(const SparseRow& row) {
    IntRow out;
    if (row.empty()) return out;
    mpz_class l = 1;
    for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    mpz_class g = 0;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        mpz_class z = v.num() * (l / v.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        out.emplace_back(c, std::move(z));
    }
    if (g > 1)
        for (auto& [c, z] : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    return out;
}

const mpz_class kZero = 0;

const mpz_class& value_at(const IntRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != row.end() && it->first == col) return it->second;
    return kZero;
}

// (a_scale * a - b_scale * b) / div with exact integer division throughout.
IntRow combine(const IntRow& a, const mpz_class& a_scale, const IntRow& b,
               const mpz_class& b_scale, const mpz_class& div) {
    IntRow out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    mpz_class t;
    while (ia != a.end() || ib != b.end()) {
        int col;
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            col = ia->first;
            t = a_scale * ia->second;
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            col = ib->first;
            t = -(b_scale * ib->second);
            ++ib;
        } else {
            col = ia->first;
            t = a_scale * ia->second - b_scale * ib->second;
            ++ia;
            ++ib;
        }
        if (t != 0) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), div.get_mpz_t());
            out.emplace_back(col, std::move(q));
        }
    }
    return out;
}

// One-step fraction-free elimination. Every active row is rewritten as
// (pivot * row - row[k] * pivot_row) / prev each step, which keeps all
// entries equal to minors of the integerized input (hence the division is
// exact). Row updates within a step are independent.
void bareiss(std::vector<IntRow>& active, int cols, std::vector<IntRow>& pivots,
             std::vector<int>& pivot_cols, bool parallel) {
    std::erase_if(active, [](const IntRow& r) { return r.empty(); });
    mpz_class prev = 1;
    for (int k = 0; k < cols && !active.empty(); ++k) {
        int pr = -1;
        for (size_t i = 0; i < active.size(); ++i) {
            if (active[i].front().first == k) {
                pr = static_cast<int>(i);
                break;
            }
        }
        if (pr < 0) continue;
        IntRow prow = std::move(active[pr]);
        active.erase(active.begin() + pr);
        const mpz_class piv = prow.front().second;

        auto update = [&](size_t i) {
            active[i] = combine(active[i], piv, prow, value_at(active[i], k), prev);
        };
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < static_cast<long>(active.size()); ++i)
                update(static_cast<size_t>(i));
#else
            for (size_t i = 0; i < active.size(); ++i) update(i);
#endif
        } else {
            for (size_t i = 0; i < active.size(); ++i) update(i);
        }
        std::erase_if(active, [](const IntRow& r) { return r.empty(); });
        pivots.push_back(std::move(prow));
        pivot_cols.push_back(k);
        prev = piv;
    }
}

}  // namespace

EchelonForm echelon(const SparseRationalMatrix& m, ExecPolicy policy) {
    std::vector<IntRow> active;
    active.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) active.push_back(integerize(m.row(r)));
    EchelonForm ef;
    ef.cols = m.cols();
    bareiss(active, m.cols(), ef.rows, ef.pivot_cols, policy == ExecPolicy::Parallel);
    return ef;
}

int rank(const SparseRationalMatrix& m, ExecPolicy policy) {
    return echelon(m, policy).rank();
}

namespace {

// Primitive integer vector, first nonzero entry positive.
void canonicalize_vector(std::vector<Rational>& x) {
    mpz_class l = 1;
    for (const auto& v : x)
        if (!v.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    mpz_class g = 0;
    std::vector<mpz_class> ints(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        ints[i] = x[i].num() * (l / x[i].den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (g == 0) return;
    int lead_sign = 0;
    for (const auto& z : ints) {
        if (z != 0) {
            lead_sign = sgn(z);
            break;
        }
    }
    for (size_t i = 0; i < x.size(); ++i) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), ints[i].get_mpz_t(), g.get_mpz_t());
        if (lead_sign < 0) q = -q;
        x[i] = Rational(q);
    }
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const SparseRationalMatrix& m, ExecPolicy policy) {
    EchelonForm ef = echelon(m, policy);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : ef.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(m.cols(), Rational(0));
        x[f] = Rational(1);
        for (int i = ef.rank() - 1; i >= 0; --i) {
            const int p = ef.pivot_cols[i];
            Rational s(0);
            Rational diag(0);
            for (const auto& [c, z] : ef.rows[i]) {
                if (c == p) {
                    diag = Rational(z);
                    continue;
                }
                if (!x[c].is_zero()) s += Rational(z) * x[c];
            }
            x[p] = -s / diag;
        }
        canonicalize_vector(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::map<int, Rational> ReducedEchelon::reduce(const std::map<int, Rational>& v) const {
    std::map<int, Rational> out = v;
    for (;;) {
        int hit_col = -1;
        int hit_row = -1;
        for (const auto& [c, val] : out) {
            auto it = pivot_row_of_col.find(c);
            if (it != pivot_row_of_col.end()) {
                hit_col = c;
                hit_row = it->second;
                break;
            }
        }
        if (hit_col < 0) break;
        Rational coef = out[hit_col];
        for (const auto& [c, val] : rows[hit_row]) {
            auto it = out.find(c);
            Rational nv = (it == out.end() ? Rational(0) : it->second) - coef * val;
            if (nv.is_zero()) {
                if (it != out.end()) out.erase(it);
            } else {
                out[c] = nv;
            }
        }
    }
    return out;
}

ReducedEchelon reduced_echelon(const std::vector<std::map<int, Rational>>& vectors, int cols,
                               ExecPolicy policy) {
    ReducedEchelon re;
    re.cols = cols;
    std::vector<std::map<int, Rational>> rows;
    std::map<int, int> pivot_of;

    auto reduce_against = [&](std::map<int, Rational> v) {
        for (;;) {
            int hc = -1, hr = -1;
            for (const auto& [c, val] : v) {
                auto it = pivot_of.find(c);
                if (it != pivot_of.end()) {
                    hc = c;
                    hr = it->second;
                    break;
                }
            }
            if (hc < 0) return v;
            Rational coef = v[hc];
            for (const auto& [c, val] : rows[hr]) {
                auto it = v.find(c);
                Rational nv = (it == v.end() ? Rational(0) : it->second) - coef * val;
                if (nv.is_zero()) {
                    if (it != v.end()) v.erase(it);
                } else {
                    v[c] = nv;
                }
            }
        }
    };

    for (const auto& vec : vectors) {
        std::map<int, Rational> v = reduce_against(vec);
        if (v.empty()) continue;
        const int p = v.begin()->first;
        const Rational lead = v.begin()->second;
        for (auto& [c, val] : v) val /= lead;

        // Clear the new pivot column from all stored rows; updates are
        // independent per row.
        std::vector<int> touched;
        touched.reserve(rows.size());
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].count(p)) touched.push_back(static_cast<int>(i));
        auto clear_in = [&](int ri) {
            Rational coef = rows[ri][p];
            for (const auto& [c, val] : v) {
                auto it = rows[ri].find(c);
                Rational nv = (it == rows[ri].end() ? Rational(0) : it->second) - coef * val;
                if (nv.is_zero()) {
                    if (it != rows[ri].end()) rows[ri].erase(it);
                } else {
                    rows[ri][c] = nv;
                }
            }
        };
        if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
            for (long t = 0; t < static_cast<long>(touched.size()); ++t) clear_in(touched[t]);
#else
            for (int ri : touched) clear_in(ri);
#endif
        } else {
            for (int ri : touched) clear_in(ri);
        }

        pivot_of[p] = static_cast<int>(rows.size());
        rows.push_back(std::move(v));
    }

    // Re-order rows by pivot column for a canonical result.
    std::vector<std::pair<int, int>> order;
    order.reserve(rows.size());
    for (const auto& [c, r] : pivot_of) order.emplace_back(c, r);
    for (const auto& [c, r] : order) {
        re.pivot_row_of_col[c] = static_cast<int>(re.rows.size());
        re.pivot_cols.push_back(c);
        re.rows.push_back(std::move(rows[r]));
    }
    return re;
}

}  // namespace n2vx
