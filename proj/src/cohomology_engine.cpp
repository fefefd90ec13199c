#include "gcoh/cohomology_engine.hpp"

#include "gcoh/error.hpp"

#include <stdexcept>

namespace gcoh {

namespace {

IntegerMatrix empty_matrix(int rows, int cols) { return IntegerMatrix(rows, cols); }

RationalVector slice(const RationalVector& v, int first) {
    return RationalVector(v.begin() + first, v.end());
}

RationalVector unit_vector(int size, int i, const Rational& value = 1) {
    RationalVector v(static_cast<std::size_t>(size));
    v[i] = value;
    return v;
}

// Column i of m as a rational vector.
RationalVector column_of(const IntegerMatrix& m, int i) {
    RationalVector v(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) v[r] = m(r, i);
    return v;
}

RationalVector concat_zero_prefix(int zeros, const RationalVector& tail) {
    RationalVector v(static_cast<std::size_t>(zeros));
    v.insert(v.end(), tail.begin(), tail.end());
    return v;
}

// Inverse of a modulo m (gcd(a,m) = 1, m >= 1).
Integer inverse_mod(const Integer& a, const Integer& m) {
    if (m == 1) return 0;
    Integer old_r = mod(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return mod(old_s, m);
}

}  // namespace

bool ClassCoordinates::is_zero() const {
    for (const auto& t : torsion)
        if (t != 0) return false;
    for (const auto& f : free)
        if (f != 0) return false;
    return true;
}

CohomologyEngine::CohomologyEngine(std::vector<SparseMatrix> differentials, std::vector<int> dims)
    : reduction_(std::move(differentials), std::move(dims)) {
    int top = top_degree();
    degrees_.resize(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n) {
        auto& deg = degrees_[n];
        int cn = static_cast<int>(reduction_.survivors(n).size());
        deg.d = snf(reduction_.reduced(n));
        IntegerMatrix prev = n > 0 ? reduction_.reduced(n - 1) : empty_matrix(cn, 0);
        IntegerMatrix vinv_prev = deg.d.Vinv * prev;
        deg.kernel = snf(vinv_prev.row_block(deg.d.rank, cn - deg.d.rank));
        deg.prev_rank = n > 0 ? degrees_[n - 1].d.rank : 0;
        IntegerMatrix uinv_t = n > 0 ? degrees_[n - 1].d.Uinv.transpose() : IntegerMatrix::identity(cn);
        IntegerMatrix n_full = uinv_t * reduction_.reduced(n).transpose();
        deg.cycles = snf(n_full.row_block(deg.prev_rank, cn - deg.prev_rank));
    }
}

void CohomologyEngine::check_degree(int n) const {
    if (n < 0 || n > top_degree())
        throw InputError("degree " + std::to_string(n) + " outside the materialized range 0.." +
                         std::to_string(top_degree()));
}

const CohomologyEngine::Degree& CohomologyEngine::degree(int n) const {
    check_degree(n);
    return degrees_[n];
}

RationalVector CohomologyEngine::reduced_to_full(int n, const RationalVector& compact) const {
    return reduction_.include(n, reduction_.expand(n, compact));
}

RationalVector CohomologyEngine::coboundary(int n, const RationalVector& x) const {
    check_degree(n);
    if (n == top_degree()) return {};
    return reduction_.differential(n).apply(x);
}

RationalVector CohomologyEngine::boundary(int n, const RationalVector& chain) const {
    check_degree(n);
    if (n == 0) return {};
    return reduction_.differential(n - 1).apply_transpose(chain);
}

AbelianGroupPresentation CohomologyEngine::cohomology(int n, const Coeff& coeff) const {
    const auto& deg = degree(n);
    int z = deg.kernel.S.rows();
    int t = deg.kernel.rank;
    AbelianGroupPresentation out;
    out.rank = z - t;
    switch (coeff.kind) {
        case Coeff::Kind::Z:
            for (const auto& e : deg.kernel.invariants())
                if (e > 1) out.torsion.push_back(e);
            return out;
        case Coeff::Kind::Q:
            return out;
        case Coeff::Kind::QmodZ:
            for (const auto& s : deg.d.invariants())
                if (s > 1) out.torsion.push_back(s);
            return out;
        case Coeff::Kind::Zmod: {
            std::vector<Integer> orders(static_cast<std::size_t>(out.rank), coeff.modulus);
            for (const auto& e : deg.kernel.invariants())
                if (e > 1) orders.push_back(gcd(e, coeff.modulus));
            for (const auto& s : deg.d.invariants())
                if (s > 1) orders.push_back(gcd(s, coeff.modulus));
            return canonical_presentation(orders);
        }
    }
    return out;
}

AbelianGroupPresentation CohomologyEngine::homology(int n) const {
    const auto& deg = degree(n);
    AbelianGroupPresentation out;
    out.rank = deg.cycles.S.rows() - deg.cycles.rank;
    for (const auto& e : deg.cycles.invariants())
        if (e > 1) out.torsion.push_back(e);
    return out;
}

ClassCoordinates CohomologyEngine::coordinates(int n, const RationalVector& x, const Coeff& coeff) const {
    const auto& deg = degree(n);
    if (static_cast<int>(x.size()) != dim(n)) throw InputError("cochain has the wrong length for its degree");
    RationalVector dx = coboundary(n, x);
    ClassCoordinates out;
    RationalVector reduced = reduction_.compress(n, reduction_.project(n, x));
    RationalVector a = deg.d.Vinv.apply(reduced);
    int r = deg.d.rank;
    int t = deg.kernel.rank;
    switch (coeff.kind) {
        case Coeff::Kind::Z:
        case Coeff::Kind::Q: {
            if (!is_zero(dx)) throw MathError(MathErrorKind::NotClosed, "cochain is not a cocycle");
            if (coeff.kind == Coeff::Kind::Z && !is_integral(x))
                throw MathError(MathErrorKind::InvalidCocycle, "cochain is not integer valued");
            RationalVector y = deg.kernel.U.apply(slice(a, r));
            for (int i = 0; i < static_cast<int>(y.size()); ++i) {
                if (i < t) {
                    const Integer& e = deg.kernel.S(i, i);
                    if (coeff.kind == Coeff::Kind::Z && e > 1) out.torsion.push_back(mod(as_integer(y[i]), e));
                } else {
                    out.free.push_back(y[i]);
                }
            }
            return out;
        }
        case Coeff::Kind::QmodZ: {
            if (!is_integral(dx)) throw MathError(MathErrorKind::NotClosed, "coboundary is not integral");
            for (int i = 0; i < r; ++i) {
                const Integer& s = deg.d.S(i, i);
                if (s > 1) out.torsion.push_back(mod(as_integer(a[i] * s), s));
            }
            RationalVector y = deg.kernel.U.apply(slice(a, r));
            for (int i = t; i < static_cast<int>(y.size()); ++i) out.free.push_back(mod_one(y[i]));
            return out;
        }
        case Coeff::Kind::Zmod:
            break;
    }
    throw InputError("class coordinates are not available for " + coeff.name() + " coefficients");
}

std::optional<RationalVector> CohomologyEngine::solve_coboundary(int n, const RationalVector& x,
                                                                 const Coeff& coeff) const {
    const auto& deg = degree(n);
    if (static_cast<int>(x.size()) != dim(n)) throw InputError("cochain has the wrong length for its degree");
    RationalVector dx = coboundary(n, x);
    auto vanishes = [&](const Rational& v) {
        switch (coeff.kind) {
            case Coeff::Kind::Z:
            case Coeff::Kind::Q: return v == 0;
            case Coeff::Kind::QmodZ: return is_integral(v);
            case Coeff::Kind::Zmod: return is_integral(v) && mod(as_integer(v), coeff.modulus) == 0;
        }
        return false;
    };
    for (const auto& v : dx)
        if (!vanishes(v)) return std::nullopt;
    if ((coeff.kind == Coeff::Kind::Z || coeff.kind == Coeff::Kind::Zmod) && !is_integral(x)) return std::nullopt;

    RationalVector reduced = reduction_.compress(n, reduction_.project(n, x));

    if (coeff.kind == Coeff::Kind::QmodZ) {
        // Strip an integral part so that the remainder is a rational coboundary.
        RationalVector a = deg.d.Vinv.apply(reduced);
        int r = deg.d.rank, t = deg.kernel.rank;
        RationalVector zeta(a.size());
        for (int i = 0; i < r; ++i) {
            if (!is_integral(a[i])) return std::nullopt;
            zeta[i] = a[i];
        }
        RationalVector y = deg.kernel.U.apply(slice(a, r));
        RationalVector keep(y.size());
        for (int i = t; i < static_cast<int>(y.size()); ++i) {
            if (!is_integral(y[i])) return std::nullopt;
            keep[i] = y[i];
        }
        RationalVector tail = deg.kernel.Uinv.apply(keep);
        for (std::size_t i = 0; i < tail.size(); ++i) zeta[r + i] = tail[i];
        RationalVector integral_part = deg.d.V.apply(zeta);
        for (std::size_t i = 0; i < reduced.size(); ++i) reduced[i] -= integral_part[i];
    }

    int prev_dim = n > 0 ? dim(n - 1) : 0;
    if (n == 0) {
        for (const auto& v : reduced)
            if (!vanishes(v)) return std::nullopt;
        return RationalVector{};
    }
    const auto& prev = degrees_[n - 1].d;
    RationalVector y = prev.U.apply(reduced);
    RationalVector w(static_cast<std::size_t>(prev.S.cols()));
    for (int i = 0; i < static_cast<int>(y.size()); ++i) {
        if (i < prev.rank) {
            const Integer& s = prev.S(i, i);
            switch (coeff.kind) {
                case Coeff::Kind::Z:
                    if (!is_integral(y[i] / s)) return std::nullopt;
                    w[i] = y[i] / s;
                    break;
                case Coeff::Kind::Q:
                case Coeff::Kind::QmodZ:
                    w[i] = y[i] / s;
                    break;
                case Coeff::Kind::Zmod: {
                    Integer yi = as_integer(y[i]);
                    Integer g = gcd(s, coeff.modulus);
                    if (mod(yi, g) != 0) return std::nullopt;
                    Integer m = coeff.modulus / g;
                    w[i] = mod((yi / g) * inverse_mod(s / g, m), m);
                    break;
                }
            }
        } else if (!vanishes(y[i])) {
            return std::nullopt;
        }
    }
    RationalVector b_reduced = prev.V.apply(w);
    RationalVector b = reduction_.include(n - 1, reduction_.expand(n - 1, b_reduced));
    RationalVector hx = reduction_.homotopy(n, x);
    for (int i = 0; i < prev_dim; ++i) b[i] += hx[i];
    return b;
}

std::vector<RationalVector> CohomologyEngine::integral_generators(int n) const {
    const auto& deg = degree(n);
    int r = deg.d.rank, t = deg.kernel.rank;
    int z = deg.kernel.S.rows();
    IntegerMatrix kernel_basis = deg.d.V.col_block(r, z);
    std::vector<RationalVector> out;
    for (int i = 0; i < z; ++i) {
        if (i < t && deg.kernel.S(i, i) <= 1) continue;
        RationalVector w = column_of(deg.kernel.Uinv, i);
        out.push_back(reduced_to_full(n, kernel_basis.apply(w)));
    }
    return out;
}

std::vector<RationalVector> CohomologyEngine::circle_torsion_generators(int n) const {
    const auto& deg = degree(n);
    std::vector<RationalVector> out;
    int cn = deg.d.S.cols();
    for (int i = 0; i < deg.d.rank; ++i) {
        const Integer& s = deg.d.S(i, i);
        if (s <= 1) continue;
        RationalVector a = unit_vector(cn, i, Rational(1, 1) / Rational(s));
        out.push_back(reduced_to_full(n, deg.d.V.apply(a)));
    }
    return out;
}

std::vector<RationalVector> CohomologyEngine::circle_free_generators(int n) const {
    const auto& deg = degree(n);
    auto all = integral_generators(n);
    int torsion_count = 0;
    for (const auto& e : deg.kernel.invariants())
        if (e > 1) ++torsion_count;
    return std::vector<RationalVector>(all.begin() + torsion_count, all.end());
}

std::optional<std::pair<RationalVector, RationalVector>> CohomologyEngine::integral_lift(
    int n, const RationalVector& omega) const {
    const auto& deg = degree(n);
    if (!is_zero(coboundary(n, omega))) throw MathError(MathErrorKind::NotClosed, "cochain is not a cocycle");
    RationalVector reduced = reduction_.compress(n, reduction_.project(n, omega));
    RationalVector a = deg.d.Vinv.apply(reduced);
    int r = deg.d.rank, t = deg.kernel.rank;
    RationalVector y = deg.kernel.U.apply(slice(a, r));
    RationalVector keep(y.size());
    for (int i = t; i < static_cast<int>(y.size()); ++i) {
        if (!is_integral(y[i])) return std::nullopt;
        keep[i] = y[i];
    }
    RationalVector zeta = concat_zero_prefix(r, deg.kernel.Uinv.apply(keep));
    RationalVector z = reduced_to_full(n, deg.d.V.apply(zeta));
    RationalVector rest = omega;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= z[i];
    auto b = solve_coboundary(n, rest, Coeff::Q());
    if (!b) throw std::logic_error("integral lift left a non-exact remainder");
    return std::make_pair(std::move(z), std::move(*b));
}

std::vector<RationalVector> CohomologyEngine::free_cycle_generators(int n) const {
    const auto& deg = degree(n);
    int cn = deg.cycles.S.rows() + deg.prev_rank;
    IntegerMatrix u_t = n > 0 ? degrees_[n - 1].d.U.transpose() : IntegerMatrix::identity(cn);
    std::vector<RationalVector> out;
    int rows = deg.cycles.S.rows();
    for (int i = deg.cycles.rank; i < rows; ++i) {
        RationalVector w = concat_zero_prefix(deg.prev_rank, column_of(deg.cycles.Uinv, i));
        RationalVector compact = u_t.apply(w);
        out.push_back(reduction_.include_chain(n, reduction_.expand(n, compact)));
    }
    return out;
}

}  // namespace gcoh
