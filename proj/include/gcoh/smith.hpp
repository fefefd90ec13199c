#pragma once

#include "gcoh/numeric.hpp"
#include "gcoh/sparse.hpp"

#include <vector>

namespace gcoh {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols);

    static IntegerMatrix identity(int n);
    static IntegerMatrix from_sparse(const SparseMatrix& m);
    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Integer& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    bool operator==(const IntegerMatrix& rhs) const = default;
    IntegerMatrix transpose() const;
    bool is_identity() const;
    bool is_zero() const;

    RationalVector apply(const RationalVector& x) const;
    /// Rows [first, first+count) as a new matrix.
    IntegerMatrix row_block(int first, int count) const;
    IntegerMatrix col_block(int first, int count) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> data_;
};

/// U * A * V = S with U, V unimodular; the inverses are tracked alongside.
struct SNFResult {
    IntegerMatrix U, Uinv, S, V, Vinv;
    int rank = 0;

    /// Nonzero diagonal entries s_0 | s_1 | ... (all positive).
    std::vector<Integer> invariants() const;
};

SNFResult snf(const IntegerMatrix& a);

/// Determinant by fraction-free elimination (Bareiss).
Integer determinant(const IntegerMatrix& a);

}  // namespace gcoh
