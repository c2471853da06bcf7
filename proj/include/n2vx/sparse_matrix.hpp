#pragma once

#include "n2vx/rational.hpp"

#include <utility>
#include <vector>

namespace n2vx {

/// Row of a sparse matrix: (column, value) pairs sorted by column, no
/// explicit zeros.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Immutable-after-build sparse matrix over Rational. Rows are kept sorted;
/// set() on an existing (row, col) overwrites.
class SparseRationalMatrix {
public:
    SparseRationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v);
    Rational at(int r, int c) const;
    const SparseRow& row(int r) const { return data_[r]; }

    bool operator==(const SparseRationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_, cols_;
    std::vector<SparseRow> data_;
};

}  // namespace n2vx
