#pragma once

#include "gcoh/smith.hpp"
#include "gcoh/sparse.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gcoh {

/// Shrinks a cochain complex C^0 -> ... -> C^T by eliminating unit entries of the differentials.
///
/// The result is a smaller complex together with integral chain maps
/// project (pi): C -> C', include (iota): C' -> C and a homotopy h: C^n -> C^{n-1}
/// with id - iota pi = delta h + h delta. Vectors are always indexed by the original cells;
/// eliminated coordinates are zero in reduced vectors.
class ChainReduction {
public:
    /// differentials[n] maps degree n (dims[n] columns) to degree n+1 (dims[n+1] rows).
    ChainReduction(std::vector<SparseMatrix> differentials, std::vector<int> dims);

    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    int dim(int n) const { return dims_.at(n); }
    const SparseMatrix& differential(int n) const { return differentials_.at(n); }
    int num_differentials() const { return static_cast<int>(differentials_.size()); }

    /// Surviving original indices in degree n, ascending.
    const std::vector<int>& survivors(int n) const { return survivors_.at(n); }
    /// Reduced differential from degree n to n+1 on survivors (zero-row matrix past the top).
    const IntegerMatrix& reduced(int n) const { return reduced_.at(n); }

    RationalVector project(int n, RationalVector v) const;
    RationalVector include(int n, RationalVector v) const;
    /// h: degree n -> degree n-1.
    RationalVector homotopy(int n, const RationalVector& v) const;

    /// Transposed maps on chains: include_chain = pi^T (C'_n -> C_n), project_chain = iota^T (C_n -> C'_n).
    RationalVector include_chain(int n, RationalVector w) const;
    RationalVector project_chain(int n, RationalVector w) const;

    /// Compression between full-index vectors and survivor-indexed vectors.
    RationalVector compress(int n, const RationalVector& full) const;
    RationalVector expand(int n, const RationalVector& compact) const;

    std::size_t num_steps() const { return steps_.size(); }

private:
    struct Step {
        int degree;  // pivot column lives in C^degree, pivot row in C^{degree+1}
        int col;
        int row;
        std::int64_t unit;
        std::vector<std::pair<int, std::int64_t>> beta;   // column entries except the pivot
        std::vector<std::pair<int, std::int64_t>> gamma;  // row entries except the pivot
    };

    void eliminate_all();

    std::vector<SparseMatrix> differentials_;
    std::vector<int> dims_;
    std::vector<Step> steps_;
    std::vector<std::vector<int>> survivors_;
    std::vector<IntegerMatrix> reduced_;
};

}  // namespace gcoh
