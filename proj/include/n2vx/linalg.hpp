#pragma once

#include "n2vx/rational.hpp"
#include "n2vx/sparse_matrix.hpp"

#include <gmpxx.h>

#include <map>
#include <vector>

namespace n2vx {

/// Execution policy for the data-parallel kernels. Serial is the reference
/// implementation; Parallel uses OpenMP when compiled in and degrades to
/// the same arithmetic order otherwise. Results are identical by
/// construction (update steps are independent per row / per entry).
enum class ExecPolicy { Serial, Parallel };

constexpr ExecPolicy kDefaultPolicy =
#ifdef _OPENMP
    ExecPolicy::Parallel;
#else
    ExecPolicy::Serial;
#endif

/// Integer row used inside fraction-free elimination.
using IntRow = std::vector<std::pair<int, mpz_class>>;

/// Staircase form produced by fraction-free (Bareiss) elimination of an
/// integerized copy of the input. pivot_cols[i] is the leading column of
/// rows[i]; pivot columns are strictly increasing.
struct EchelonForm {
    std::vector<IntRow> rows;
    std::vector<int> pivot_cols;
    int cols = 0;
    int rank() const { return static_cast<int>(rows.size()); }
};

EchelonForm echelon(const SparseRationalMatrix& m, ExecPolicy policy = kDefaultPolicy);

int rank(const SparseRationalMatrix& m, ExecPolicy policy = kDefaultPolicy);

///// Basis of the right kernel {x : Mx = 0}. Each vector is dense of length
/// cols(), scaled to a primitive integer vector whose first nonzero entry
/// is positive; vectors are ordered by their free column. Deterministic.
std::vector<std::vector<Rational>> kernel_basis(const SparseRationalMatrix& m,
                                                ExecPolicy policy = kDefaultPolicy);

/// Fully reduced row echelon form over Rational: each pivot is 1 and is the
/// only nonzero in its column among the stored rows. Supports canonical
/// reduction of vectors modulo the row space (used for quotient modules).
struct ReducedEchelon {
    std::vector<std::map<int, Rational>> rows;
    std::vector<int> pivot_cols;
    std::map<int, int> pivot_row_of_col;
    int cols = 0;

    int rank() const { return static_cast<int>(rows.size()); }
    bool is_pivot_col(int c) const { return pivot_row_of_col.count(c) != 0; }

    /// Canonical representative of v modulo the row space: pivot
    /// coordinates are eliminated, free coordinates untouched.
    std::map<int, Rational> reduce(const std::map<int, Rational>& v) const;
};

ReducedEchelon reduced_echelon(const std::vector<std::map<int, Rational>>& vectors, int cols,
                               ExecPolicy policy = kDefaultPolicy);

}  // namespace n2vx
