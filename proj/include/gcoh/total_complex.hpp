#pragma once

#include "gcoh/carried.hpp"
#include "gcoh/cohomology_engine.hpp"
#include "gcoh/sparse.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gcoh {

struct TotalOptions {
    int p_max = 3;
    int k_max = 2;
    int total_max = 3;
    std::size_t cell_cap = 200000;

    /// Enough levels for cohomology up to `max_degree` (and its Q/Z version) to be exact.
    static TotalOptions for_degree(int max_degree, int complex_dimension, std::size_t cell_cap = 200000);
};

/// A basis cell of K^{p,k}: a nerve cell of level p together with a k-simplex of its carrier.
struct Cell {
    int p = 0;
    int k = 0;
    int nerve = 0;
    int simplex = 0;
};

/// The double complex K^{p,k} of simplicial k-cochains on the carriers of the nerve levels,
/// with d the simplicial coboundary, the horizontal differential the alternating sum of face pullbacks,
/// and total differential (-1)^p d + horizontal. Vectors are indexed by the cells of one total degree.
class TotalComplex {
public:
    TotalComplex(std::shared_ptr<const CarriedGroupoid> base, TotalOptions options);
    TotalComplex(const CarriedGroupoid& base, TotalOptions options);

    const CarriedGroupoid& base() const { return *base_; }
    std::shared_ptr<const CarriedGroupoid> base_ptr() const { return base_; }
    const TotalOptions& options() const { return options_; }
    const CarriedNerve& nerve() const { return nerve_; }
    /// Largest n for which cohomology in degree n (any coefficients) is exact.
    int valid_max_degree() const { return valid_max_; }
    int top_degree() const { return options_.total_max; }
    std::size_t total_cells() const;

    int dim(int n) const { return static_cast<int>(cells_.at(n).size()); }
    const std::vector<Cell>& cells(int n) const { return cells_.at(n); }
    /// Index of (p, nerve cell, simplex) among the cells of degree p+k; -1 if absent.
    int index_of(int p, int nerve_cell, int simplex) const;
    /// Half-open range of degree-n indices holding bidegree (p, n-p).
    std::pair<int, int> block(int n, int p) const;
    bool has_bidegree(int p, int k) const;

    /// Total differential out of degree n (n < top_degree()).
    const SparseMatrix& delta(int n) const { return delta_.at(n); }
    /// Unsigned vertical and horizontal parts out of degree n.
    const SparseMatrix& vertical(int n) const { return vertical_.at(n); }
    const SparseMatrix& horizontal(int n) const { return horizontal_.at(n); }

    RationalVector zero(int n) const { return RationalVector(static_cast<std::size_t>(dim(n))); }
    RationalVector apply_delta(int n, const RationalVector& x) const;
    RationalVector apply_vertical(int n, const RationalVector& x) const;
    RationalVector apply_horizontal(int n, const RationalVector& x) const;
    /// Keeps only the bidegree (p, n-p) part.
    RationalVector component(int n, int p, const RationalVector& x) const;
    /// Zero exactly outside bidegree (p, n-p)?
    bool is_pure(int n, int p, const RationalVector& x) const;

    /// (d_i)^* from bidegree (p-1,k) to (p,k); the input is a degree p-1+k vector.
    RationalVector pullback_along_face(int p, int k, int i, const RationalVector& c) const;

    const CohomologyEngine& engine() const { return *engine_; }
    void check_degree(int n) const;

    /// Human-readable label of a cell ("(U0|U1)" / "[v0,v1]").
    std::string cell_label(int n, int index) const;

    /// Violations of d^2 = 0, horizontal^2 = 0, d h = h d and delta^2 = 0 on the materialized range.
    std::vector<std::string> check_identities() const;

private:
    void build();

    std::shared_ptr<const CarriedGroupoid> base_;
    TotalOptions options_;
    int valid_max_ = -1;
    CarriedNerve nerve_;
    std::vector<std::vector<Cell>> cells_;
    // offsets_[p][nerve cell][k] = first index of that (p, cell, k) run in degree p+k.
    std::vector<std::vector<std::vector<int>>> offsets_;
    // simplices_[p][nerve cell][k] = k-simplices of the carrier, ascending.
    std::vector<std::vector<std::vector<std::vector<int>>>> simplices_;
    std::vector<SparseMatrix> delta_, vertical_, horizontal_;
    std::unique_ptr<CohomologyEngine> engine_;
};

/// Orientation signs (+1/-1) of the top simplices of a closed oriented pseudomanifold, in id order of
/// simplices_of_dim(dimension). Throws MathError(InvalidCocycle) style InputError if K is not one.
std::vector<int> orient_pseudomanifold(const SimplicialComplex& k);

/// Integral total cycle of degree dim K representing the fundamental class (Cech or single-patch regime).
RationalVector fundamental_cycle(const TotalComplex& t);

/// Evaluation of a chain against a cochain of the same degree.
Rational pair(const RationalVector& chain, const RationalVector& cochain);

}  // namespace gcoh
