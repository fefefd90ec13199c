#include "gcoh/homalg.hpp"

#include "gcoh/error.hpp"
#include "gcoh/smith.hpp"

#include <map>

namespace gcoh {

namespace {

// Degree-n index -> position in the concatenation of the listed blocks (-1 outside).
std::vector<int> block_positions(const TotalComplex& t, int n, const std::vector<int>& ps) {
    std::vector<int> pos(static_cast<std::size_t>(t.dim(n)), -1);
    int next = 0;
    for (int p : ps) {
        auto [lo, hi] = t.block(n, p);
        for (int i = lo; i < hi; ++i) pos[i] = next++;
    }
    return pos;
}

int block_size(const TotalComplex& t, int n, const std::vector<int>& ps) {
    int total = 0;
    for (int p : ps) {
        auto [lo, hi] = t.block(n, p);
        total += hi - lo;
    }
    return total;
}

}  // namespace

void require_exact_degree(const TotalComplex& t, int n) {
    if (n < 0 || n > t.valid_max_degree())
        throw InputError("degree " + std::to_string(n) + " is not exact for this complex (valid up to " +
                         std::to_string(t.valid_max_degree()) + "; raise --max-degree)");
}

AbelianGroupPresentation cohomology(const TotalComplex& t, int n, const Coeff& coeff) {
    require_exact_degree(t, n);
    return t.engine().cohomology(n, coeff);
}

AbelianGroupPresentation homology(const TotalComplex& t, int n) {
    require_exact_degree(t, n);
    return t.engine().homology(n);
}

CohomologyClass make_class(const TotalComplex& t, int n, RationalVector representative, const Coeff& coeff) {
    require_exact_degree(t, n);
    if (static_cast<int>(representative.size()) != t.dim(n)) throw InputError("cochain has the wrong length for its degree");
    CohomologyClass c;
    c.degree = n;
    c.coeff = coeff;
    c.group = t.engine().cohomology(n, coeff);
    if (coeff.kind == Coeff::Kind::Zmod) {
        auto d = t.apply_delta(n, representative);
        for (const auto& v : d)
            if (!is_integral(v) || mod(as_integer(v), coeff.modulus) != 0)
                throw MathError(MathErrorKind::NotClosed, "cochain is not a cocycle mod " + to_string(coeff.modulus));
        c.trivial = t.engine().solve_coboundary(n, representative, coeff).has_value();
    } else {
        c.coordinates = t.engine().coordinates(n, representative, coeff);
        c.trivial = c.coordinates.is_zero();
    }
    c.representative = std::move(representative);
    return c;
}

bool same_class(const TotalComplex& t, int n, const RationalVector& a, const RationalVector& b, const Coeff& coeff) {
    if (a.size() != b.size()) throw InputError("cochains of different lengths");
    RationalVector diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    return make_class(t, n, std::move(diff), coeff).trivial;
}

std::optional<RationalVector> is_coboundary(const TotalComplex& t, int n, const RationalVector& c, const Coeff& coeff) {
    make_class(t, n, c, coeff);
    return t.engine().solve_coboundary(n, c, coeff);
}

bool is_integer_class(const TotalComplex& t, int n, const RationalVector& omega) {
    require_exact_degree(t, n);
    return t.engine().integral_lift(n, omega).has_value();
}

PairingReport integrality_by_pairing(const TotalComplex& t, int n, const RationalVector& omega) {
    require_exact_degree(t, n);
    if (!is_zero(t.engine().coboundary(n, omega))) throw MathError(MathErrorKind::NotClosed, "cochain is not a cocycle");
    PairingReport r;
    for (const auto& gamma : t.engine().free_cycle_generators(n)) {
        Rational v = pair(gamma, omega);
        if (!is_integral(v)) r.integral = false;
        r.values.push_back(v);
    }
    return r;
}

Rational pair_checked(const TotalComplex& t, int n, const RationalVector& chain, const RationalVector& cochain) {
    t.check_degree(n);
    if (static_cast<int>(chain.size()) != t.dim(n) || static_cast<int>(cochain.size()) != t.dim(n))
        throw InputError("chain and cochain must both have degree " + std::to_string(n));
    if (!is_zero(t.engine().boundary(n, chain))) throw MathError(MathErrorKind::NotClosed, "chain is not a cycle");
    if (n < t.top_degree() && !is_zero(t.apply_delta(n, cochain)))
        throw MathError(MathErrorKind::NotClosed, "cochain is not a cocycle");
    return pair(chain, cochain);
}

std::optional<RationalVector> de_rham_representative(const TotalComplex& t, int n, const RationalVector& x) {
    if (n == 0) return is_zero(x) ? std::optional<RationalVector>(x) : std::nullopt;
    auto m = block_matrix(t, t.delta(n - 1), n, {n}, n - 1, {n - 1});
    auto y = solve_rational(m, gather(t, n, {n}, x));
    if (!y) return std::nullopt;
    auto dy = t.apply_delta(n - 1, scatter(t, n - 1, {n - 1}, *y));
    RationalVector out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= dy[i];
    return out;
}

std::optional<RationalVector> solve_rational(const SparseMatrix& m, const RationalVector& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw InputError("right-hand side has the wrong length");
    int rows = m.rows(), cols = m.cols();
    std::vector<std::map<int, Rational>> a(static_cast<std::size_t>(rows));
    for (int c = 0; c < cols; ++c)
        for (const auto& [r, v] : m.column(c)) a[r][c] = Rational(v);
    RationalVector b = rhs;
    std::vector<int> pivot_col;
    std::vector<int> pivot_row;
    std::vector<bool> used(static_cast<std::size_t>(rows), false);
    for (int c = 0; c < cols; ++c) {
        int pr = -1;
        for (int r = 0; r < rows; ++r)
            if (!used[r] && a[r].count(c) && (pr < 0 || a[r].size() < a[pr].size())) pr = r;
        if (pr < 0) continue;
        used[pr] = true;
        Rational inv = Rational(1) / a[pr][c];
        for (auto& [k, v] : a[pr]) v *= inv;
        b[pr] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr) continue;
            auto it = a[r].find(c);
            if (it == a[r].end()) continue;
            Rational f = it->second;
            for (const auto& [k, v] : a[pr]) {
                Rational& dst = a[r][k];
                dst -= f * v;
                if (dst == 0) a[r].erase(k);
            }
            b[r] -= f * b[pr];
        }
        pivot_col.push_back(c);
        pivot_row.push_back(pr);
    }
    for (int r = 0; r < rows; ++r)
        if (!used[r] && b[r] != 0) return std::nullopt;
    RationalVector x(static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[pivot_row[i]];
    return x;
}

std::optional<RationalVector> solve_integral(const SparseMatrix& m, const RationalVector& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw InputError("right-hand side has the wrong length");
    if (!is_integral(rhs)) return std::nullopt;
    auto s = snf(IntegerMatrix::from_sparse(m));
    RationalVector y = s.U.apply(rhs);
    RationalVector w(static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < static_cast<int>(y.size()); ++i) {
        if (i < s.rank) {
            Rational q = y[i] / Rational(s.S(i, i));
            if (!is_integral(q)) return std::nullopt;
            w[i] = q;
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V.apply(w);
}

SparseMatrix block_matrix(const TotalComplex& t, const SparseMatrix& m, int n_out, const std::vector<int>& row_ps,
                          int n_in, const std::vector<int>& col_ps) {
    auto rpos = block_positions(t, n_out, row_ps);
    auto cpos = block_positions(t, n_in, col_ps);
    std::vector<Triplet> entries;
    for (int c = 0; c < m.cols(); ++c) {
        if (cpos[c] < 0) continue;
        for (const auto& [r, v] : m.column(c))
            if (rpos[r] >= 0) entries.push_back({rpos[r], cpos[c], v});
    }
    return SparseMatrix::from_triplets(block_size(t, n_out, row_ps), block_size(t, n_in, col_ps), entries);
}

RationalVector gather(const TotalComplex& t, int n, const std::vector<int>& ps, const RationalVector& x) {
    RationalVector out;
    for (int p : ps) {
        auto [lo, hi] = t.block(n, p);
        for (int i = lo; i < hi; ++i) out.push_back(x[i]);
    }
    return out;
}

RationalVector scatter(const TotalComplex& t, int n, const std::vector<int>& ps, const RationalVector& values) {
    RationalVector out = t.zero(n);
    std::size_t next = 0;
    for (int p : ps) {
        auto [lo, hi] = t.block(n, p);
        for (int i = lo; i < hi; ++i) out[i] = values.at(next++);
    }
    return out;
}

}  // namespace gcoh
