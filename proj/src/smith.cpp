#include "gcoh/smith.hpp"

#include <stdexcept>
#include <utility>

namespace gcoh {

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_sparse(const SparseMatrix& s) {
    IntegerMatrix m(s.rows(), s.cols());
    for (int c = 0; c < s.cols(); ++c)
        for (const auto& [r, v] : s.column(c)) m(r, c) = v;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    int nrows = static_cast<int>(rows.size());
    int ncols = nrows ? static_cast<int>(rows[0].size()) : 0;
    IntegerMatrix m(nrows, ncols);
    for (int r = 0; r < nrows; ++r) {
        if (static_cast<int>(rows[r].size()) != ncols) throw std::invalid_argument("ragged matrix rows");
        for (int c = 0; c < ncols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("dense product dimension mismatch");
    IntegerMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool IntegerMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

bool IntegerMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

RationalVector IntegerMatrix::apply(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("vector length does not match matrix columns");
    RationalVector y(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0 && x[c] != 0) y[r] += x[c] * Rational((*this)(r, c));
    return y;
}

IntegerMatrix IntegerMatrix::row_block(int first, int count) const {
    IntegerMatrix out(count, cols_);
    for (int r = 0; r < count; ++r)
        for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
    return out;
}

IntegerMatrix IntegerMatrix::col_block(int first, int count) const {
    IntegerMatrix out(rows_, count);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    return out;
}

std::vector<Integer> SNFResult::invariants() const {
    std::vector<Integer> out;
    for (int i = 0; i < rank; ++i) out.push_back(S(i, i));
    return out;
}

namespace {

class SmithReducer {
public:
    explicit SmithReducer(const IntegerMatrix& a)
        : s_(a),
          u_(IntegerMatrix::identity(a.rows())),
          uinv_(IntegerMatrix::identity(a.rows())),
          v_(IntegerMatrix::identity(a.cols())),
          vinv_(IntegerMatrix::identity(a.cols())) {}

    SNFResult run() {
        int m = s_.rows(), n = s_.cols();
        int t = 0;
        while (t < m && t < n) {
            if (!move_smallest_to(t)) break;
            for (;;) {
                bool dirty = clear_row_and_column(t);
                if (dirty) continue;
                // Divisibility: fold any offending row into row t and redo.
                int bad = find_nondivisible(t);
                if (bad < 0) break;
                add_row(t, bad, 1);
            }
            if (s_(t, t) < 0) negate_row(t);
            ++t;
        }
        SNFResult out{std::move(u_), std::move(uinv_), std::move(s_), std::move(v_), std::move(vinv_), t};
        return out;
    }

private:
    // Moves the smallest nonzero |entry| of the trailing block to (t,t); false if the block is zero.
    bool move_smallest_to(int t) {
        int br = -1, bc = -1;
        Integer best;
        for (int r = t; r < s_.rows(); ++r)
            for (int c = t; c < s_.cols(); ++c) {
                const Integer& x = s_(r, c);
                if (x == 0) continue;
                Integer ax = abs(x);
                if (br < 0 || ax < best) {
                    best = ax;
                    br = r;
                    bc = c;
                }
            }
        if (br < 0) return false;
        swap_rows(t, br);
        swap_cols(t, bc);
        return true;
    }

    // One sweep of Euclidean reduction on row t and column t. Returns true if the pivot changed.
    bool clear_row_and_column(int t) {
        for (int r = t + 1; r < s_.rows(); ++r) {
            if (s_(r, t) == 0) continue;
            Integer q = s_(r, t) / s_(t, t);
            add_row(r, t, -q);
            if (s_(r, t) != 0) {
                swap_rows(t, r);
                return true;
            }
        }
        for (int c = t + 1; c < s_.cols(); ++c) {
            if (s_(t, c) == 0) continue;
            Integer q = s_(t, c) / s_(t, t);
            add_col(c, t, -q);
            if (s_(t, c) != 0) {
                swap_cols(t, c);
                return true;
            }
        }
        return false;
    }

    int find_nondivisible(int t) const {
        const Integer& p = s_(t, t);
        for (int r = t + 1; r < s_.rows(); ++r)
            for (int c = t + 1; c < s_.cols(); ++c)
                if (s_(r, c) % p != 0) return r;
        return -1;
    }

    // row_r += q * row_t
    void add_row(int r, int t, const Integer& q) {
        if (q == 0) return;
        for (int c = 0; c < s_.cols(); ++c)
            if (s_(t, c) != 0) s_(r, c) += q * s_(t, c);
        for (int c = 0; c < u_.cols(); ++c)
            if (u_(t, c) != 0) u_(r, c) += q * u_(t, c);
        for (int i = 0; i < uinv_.rows(); ++i)
            if (uinv_(i, r) != 0) uinv_(i, t) -= q * uinv_(i, r);
    }

    // col_c += q * col_t
    void add_col(int c, int t, const Integer& q) {
        if (q == 0) return;
        for (int r = 0; r < s_.rows(); ++r)
            if (s_(r, t) != 0) s_(r, c) += q * s_(r, t);
        for (int r = 0; r < v_.rows(); ++r)
            if (v_(r, t) != 0) v_(r, c) += q * v_(r, t);
        for (int j = 0; j < vinv_.cols(); ++j)
            if (vinv_(c, j) != 0) vinv_(t, j) -= q * vinv_(c, j);
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < s_.cols(); ++c) std::swap(s_(a, c), s_(b, c));
        for (int c = 0; c < u_.cols(); ++c) std::swap(u_(a, c), u_(b, c));
        for (int i = 0; i < uinv_.rows(); ++i) std::swap(uinv_(i, a), uinv_(i, b));
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int r = 0; r < s_.rows(); ++r) std::swap(s_(r, a), s_(r, b));
        for (int r = 0; r < v_.rows(); ++r) std::swap(v_(r, a), v_(r, b));
        for (int j = 0; j < vinv_.cols(); ++j) std::swap(vinv_(a, j), vinv_(b, j));
    }

    void negate_row(int r) {
        for (int c = 0; c < s_.cols(); ++c) s_(r, c) = -s_(r, c);
        for (int c = 0; c < u_.cols(); ++c) u_(r, c) = -u_(r, c);
        for (int i = 0; i < uinv_.rows(); ++i) uinv_(i, r) = -uinv_(i, r);
    }

    IntegerMatrix s_, u_, uinv_, v_, vinv_;
};

}  // namespace

SNFResult snf(const IntegerMatrix& a) { return SmithReducer(a).run(); }

Integer determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    int n = a.rows();
    if (n == 0) return 1;
    IntegerMatrix m = a;
    Integer sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int swap_with = -1;
            for (int r = k + 1; r < n; ++r)
                if (m(r, k) != 0) {
                    swap_with = r;
                    break;
                }
            if (swap_with < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap_with, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace gcoh
