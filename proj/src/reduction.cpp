#include "gcoh/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gcoh {

namespace {

using Line = std::map<int, std::int64_t>;

// Row and column views of one differential during elimination.
struct Workspace {
    std::vector<Line> rows;
    std::vector<Line> cols;

    void add(int r, int c, std::int64_t delta) {
        std::int64_t value = checked_add(rows[r][c], delta);
        if (value == 0) {
            rows[r].erase(c);
            cols[c].erase(r);
        } else {
            rows[r][c] = value;
            cols[c][r] = value;
        }
    }

    void drop_row(int r) {
        for (const auto& [c, v] : rows[r]) cols[c].erase(r);
        rows[r].clear();
    }

    void drop_col(int c) {
        for (const auto& [r, v] : cols[c]) rows[r].erase(c);
        cols[c].clear();
    }
};

}  // namespace

ChainReduction::ChainReduction(std::vector<SparseMatrix> differentials, std::vector<int> dims)
    : differentials_(std::move(differentials)), dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("complex needs at least one degree");
    if (differentials_.size() + 1 != dims_.size())
        throw std::invalid_argument("complex needs one differential per consecutive pair of degrees");
    for (std::size_t n = 0; n < differentials_.size(); ++n) {
        if (differentials_[n].cols() != dims_[n] || differentials_[n].rows() != dims_[n + 1])
            throw std::invalid_argument("differential " + std::to_string(n) + " has the wrong shape");
    }
    eliminate_all();
}

void ChainReduction::eliminate_all() {
    int top = top_degree();
    std::vector<Workspace> work(differentials_.size());
    for (std::size_t n = 0; n < differentials_.size(); ++n) {
        const auto& d = differentials_[n];
        work[n].rows.resize(static_cast<std::size_t>(d.rows()));
        work[n].cols.resize(static_cast<std::size_t>(d.cols()));
        for (int c = 0; c < d.cols(); ++c)
            for (const auto& [r, v] : d.column(c)) {
                work[n].rows[r][c] = v;
                work[n].cols[c][r] = v;
            }
    }
    std::vector<std::vector<char>> alive(dims_.size());
    for (std::size_t n = 0; n < dims_.size(); ++n) alive[n].assign(static_cast<std::size_t>(dims_[n]), 1);

    for (int n = 0; n < top; ++n) {
        auto& w = work[n];
        bool progress = true;
        while (progress) {
            progress = false;
            std::vector<std::pair<std::size_t, int>> order;
            for (int c = 0; c < dims_[n]; ++c)
                if (alive[n][c] && !w.cols[c].empty()) order.emplace_back(w.cols[c].size(), c);
            std::sort(order.begin(), order.end());
            for (const auto& [size, c] : order) {
                if (!alive[n][c]) continue;
                int best = -1;
                std::size_t best_len = 0;
                for (const auto& [r, v] : w.cols[c]) {
                    if (v != 1 && v != -1) continue;
                    std::size_t len = w.rows[r].size();
                    if (best < 0 || len < best_len) {
                        best = r;
                        best_len = len;
                    }
                }
                if (best < 0) continue;

                Step step;
                step.degree = n;
                step.col = c;
                step.row = best;
                step.unit = w.rows[best].at(c);
                for (const auto& [r, v] : w.cols[c])
                    if (r != best) step.beta.emplace_back(r, v);
                for (const auto& [a, v] : w.rows[best])
                    if (a != c) step.gamma.emplace_back(a, v);

                for (const auto& [b, bv] : step.beta) {
                    std::int64_t scale = checked_mul(bv, step.unit);
                    for (const auto& [a, gv] : step.gamma) w.add(b, a, -checked_mul(scale, gv));
                }
                w.drop_col(c);
                w.drop_row(best);
                if (n > 0) work[n - 1].drop_row(c);
                if (n + 1 < top) work[n + 1].drop_col(best);
                alive[n][c] = 0;
                alive[n + 1][best] = 0;
                steps_.push_back(std::move(step));
                progress = true;
            }
        }
    }

    survivors_.resize(dims_.size());
    for (std::size_t n = 0; n < dims_.size(); ++n)
        for (int i = 0; i < dims_[n]; ++i)
            if (alive[n][i]) survivors_[n].push_back(i);

    reduced_.resize(dims_.size());
    for (int n = 0; n <= top; ++n) {
        int cols = static_cast<int>(survivors_[n].size());
        if (n == top) {
            reduced_[n] = IntegerMatrix(0, cols);
            continue;
        }
        int rows = static_cast<int>(survivors_[n + 1].size());
        IntegerMatrix m(rows, cols);
        std::vector<int> row_pos(static_cast<std::size_t>(dims_[n + 1]), -1);
        for (int i = 0; i < rows; ++i) row_pos[survivors_[n + 1][i]] = i;
        for (int ci = 0; ci < cols; ++ci)
            for (const auto& [r, v] : work[n].cols[survivors_[n][ci]]) m(row_pos[r], ci) = v;
        reduced_[n] = std::move(m);
    }
}

RationalVector ChainReduction::project(int n, RationalVector v) const {
    for (const auto& s : steps_) {
        if (s.degree == n) {
            v[s.col] = 0;
        } else if (s.degree + 1 == n) {
            Rational yj = v[s.row];
            if (yj != 0) {
                Rational scaled = yj * s.unit;
                for (const auto& [b, bv] : s.beta) v[b] -= scaled * bv;
            }
            v[s.row] = 0;
        }
    }
    return v;
}

RationalVector ChainReduction::include(int n, RationalVector v) const {
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        const auto& s = *it;
        if (s.degree != n) continue;
        Rational sum = 0;
        for (const auto& [a, gv] : s.gamma)
            if (v[a] != 0) sum += v[a] * gv;
        v[s.col] = -sum * s.unit;
    }
    return v;
}

RationalVector ChainReduction::homotopy(int n, const RationalVector& v) const {
    if (n <= 0) throw std::invalid_argument("homotopy needs degree >= 1");
    RationalVector cur = v;
    std::vector<Rational> recorded(steps_.size());
    for (std::size_t m = 0; m < steps_.size(); ++m) {
        const auto& s = steps_[m];
        if (s.degree + 1 == n) {
            Rational yj = cur[s.row];
            recorded[m] = yj * s.unit;
            if (yj != 0) {
                Rational scaled = yj * s.unit;
                for (const auto& [b, bv] : s.beta) cur[b] -= scaled * bv;
            }
            cur[s.row] = 0;
        } else if (s.degree == n) {
            cur[s.col] = 0;
        }
    }
    RationalVector acc(static_cast<std::size_t>(dims_.at(n - 1)));
    for (std::size_t m = steps_.size(); m-- > 0;) {
        const auto& s = steps_[m];
        if (s.degree != n - 1) continue;
        Rational sum = 0;
        for (const auto& [a, gv] : s.gamma)
            if (acc[a] != 0) sum += acc[a] * gv;
        acc[s.col] = -sum * s.unit + recorded[m];
    }
    return acc;
}

RationalVector ChainReduction::include_chain(int n, RationalVector w) const {
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        const auto& s = *it;
        if (s.degree + 1 != n) continue;
        Rational sum = 0;
        for (const auto& [b, bv] : s.beta)
            if (w[b] != 0) sum += w[b] * bv;
        w[s.row] = -sum * s.unit;
    }
    return w;
}

RationalVector ChainReduction::project_chain(int n, RationalVector w) const {
    for (const auto& s : steps_) {
        if (s.degree == n) {
            Rational wi = w[s.col];
            if (wi != 0) {
                Rational scaled = wi * s.unit;
                for (const auto& [a, gv] : s.gamma) w[a] -= scaled * gv;
            }
            w[s.col] = 0;
        } else if (s.degree + 1 == n) {
            w[s.row] = 0;
        }
    }
    return w;
}

RationalVector ChainReduction::compress(int n, const RationalVector& full) const {
    RationalVector out;
    out.reserve(survivors_[n].size());
    for (int i : survivors_[n]) out.push_back(full[i]);
    return out;
}

RationalVector ChainReduction::expand(int n, const RationalVector& compact) const {
    RationalVector out(static_cast<std::size_t>(dims_[n]));
    for (std::size_t i = 0; i < compact.size(); ++i) out[survivors_[n][i]] = compact[i];
    return out;
}

}  // namespace gcoh
