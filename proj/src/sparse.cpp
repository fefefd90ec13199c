#include "gcoh/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gcoh {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {}

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, const std::vector<Triplet>& triplets) {
    SparseMatrix m(rows, cols);
    std::vector<Triplet> sorted = triplets;
    std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    for (std::size_t i = 0; i < sorted.size();) {
        const auto& t = sorted[i];
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw std::out_of_range("triplet outside matrix bounds");
        std::int64_t sum = 0;
        std::size_t j = i;
        for (; j < sorted.size() && sorted[j].row == t.row && sorted[j].col == t.col; ++j)
            sum = checked_add(sum, sorted[j].value);
        if (sum != 0) m.columns_[t.col].emplace_back(t.row, sum);
        i = j;
    }
    return m;
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.columns_[i].emplace_back(i, 1);
    return m;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t total = 0;
    for (const auto& col : columns_) total += col.size();
    return total;
}

std::int64_t SparseMatrix::at(int row, int col) const {
    const auto& c = columns_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
    return (it != c.end() && it->first == row) ? it->second : 0;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("sparse product dimension mismatch");
    SparseMatrix out(rows_, rhs.cols_);
    std::map<int, std::int64_t> acc;
    for (int c = 0; c < rhs.cols_; ++c) {
        acc.clear();
        for (const auto& [k, b] : rhs.columns_[c])
            for (const auto& [r, a] : columns_[k]) acc[r] = checked_add(acc[r], checked_mul(a, b));
        for (const auto& [r, v] : acc)
            if (v != 0) out.columns_[c].emplace_back(r, v);
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("sparse sum dimension mismatch");
    std::vector<Triplet> all;
    for (int c = 0; c < cols_; ++c) {
        for (const auto& [r, v] : columns_[c]) all.push_back({r, c, v});
        for (const auto& [r, v] : rhs.columns_[c]) all.push_back({r, c, v});
    }
    return from_triplets(rows_, cols_, all);
}

SparseMatrix SparseMatrix::scaled(std::int64_t factor) const {
    SparseMatrix out(rows_, cols_);
    if (factor == 0) return out;
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : columns_[c]) out.columns_[c].emplace_back(r, checked_mul(v, factor));
    return out;
}

RationalVector SparseMatrix::apply(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("vector length does not match matrix columns");
    RationalVector y(static_cast<std::size_t>(rows_));
    for (int c = 0; c < cols_; ++c) {
        if (x[c] == 0) continue;
        for (const auto& [r, v] : columns_[c]) y[r] += x[c] * v;
    }
    return y;
}

RationalVector SparseMatrix::apply_transpose(const RationalVector& y) const {
    if (static_cast<int>(y.size()) != rows_) throw std::invalid_argument("vector length does not match matrix rows");
    RationalVector x(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : columns_[c])
            if (y[r] != 0) x[c] += y[r] * v;
    return x;
}

SparseMatrix SparseMatrix::select_rows(const std::vector<int>& keep) const {
    std::vector<int> position(static_cast<std::size_t>(rows_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<int>(i);
    std::vector<Triplet> trips;
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : columns_[c])
            if (position[r] >= 0) trips.push_back({position[r], c, v});
    return from_triplets(static_cast<int>(keep.size()), cols_, trips);
}

}  // namespace gcoh
