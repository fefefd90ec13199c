#pragma once

#include "gcoh/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gcoh {

struct Triplet {
    int row;
    int col;
    std::int64_t value;
};

/// Column-compressed integer matrix. Entries are checked int64; overflow throws.
class SparseMatrix {
public:
    using Column = std::vector<std::pair<int, std::int64_t>>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);

    /// Sums duplicate positions and drops zeros.
    static SparseMatrix from_triplets(int rows, int cols, const std::vector<Triplet>& triplets);
    static SparseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Column& column(int c) const { return columns_[c]; }
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }
    std::int64_t at(int row, int col) const;

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseMatrix operator+(const SparseMatrix& rhs) const;
    SparseMatrix scaled(std::int64_t factor) const;
    bool operator==(const SparseMatrix& rhs) const = default;

    RationalVector apply(const RationalVector& x) const;
    RationalVector apply_transpose(const RationalVector& y) const;

    /// Rows restricted to `keep` (in the given order), same columns.
    SparseMatrix select_rows(const std::vector<int>& keep) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Column> columns_;
};

}  // namespace gcoh
