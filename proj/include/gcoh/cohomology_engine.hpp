#pragma once

#include "gcoh/presentation.hpp"
#include "gcoh/reduction.hpp"
#include "gcoh/smith.hpp"

#include <optional>
#include <vector>

namespace gcoh {

/// Coordinates of a cohomology class: one entry per torsion summand, then one per free summand.
/// Z: integers (torsion entries reduced mod d_i). Q: free rationals only.
/// QmodZ: torsion entries mod d_i, free entries rationals in [0,1).
struct ClassCoordinates {
    std::vector<Integer> torsion;
    std::vector<Rational> free;

    bool is_zero() const;
    bool operator==(const ClassCoordinates&) const = default;
};

/// Exact cohomology and homology of an integral cochain complex (any finite list of differentials).
///
/// Degrees run from 0 to top_degree(); the differential out of the top degree is taken to be zero,
/// so callers decide which degrees are meaningful for a truncated complex.
class CohomologyEngine {
public:
    CohomologyEngine(std::vector<SparseMatrix> differentials, std::vector<int> dims);

    int top_degree() const { return reduction_.top_degree(); }
    int dim(int n) const { return reduction_.dim(n); }
    const ChainReduction& reduction() const { return reduction_; }

    /// delta applied to a degree-n vector (zero vector of length 0 past the top).
    RationalVector coboundary(int n, const RationalVector& x) const;
    RationalVector boundary(int n, const RationalVector& chain) const;

    AbelianGroupPresentation cohomology(int n, const Coeff& coeff) const;
    AbelianGroupPresentation homology(int n) const;

    /// Throws MathError(NotClosed) if x is not a cocycle for the coefficient domain.
    ClassCoordinates coordinates(int n, const RationalVector& x, const Coeff& coeff) const;

    /// Returns b with x - delta b vanishing in the coefficient domain (integral b for Z, Zmod), if one exists.
    std::optional<RationalVector> solve_coboundary(int n, const RationalVector& x, const Coeff& coeff) const;

    /// Z: integral cocycles matching the coordinate order of coordinates(n, ., Z).
    std::vector<RationalVector> integral_generators(int n) const;
    /// QmodZ torsion generators (rational lifts with integral coboundary), one per torsion summand.
    std::vector<RationalVector> circle_torsion_generators(int n) const;
    /// Integral cocycles spanning the free Q/Z summands (each generates a circle's worth of classes).
    std::vector<RationalVector> circle_free_generators(int n) const;

    /// omega rational cocycle: integral cocycle z and rational b with omega = z + delta b, if they exist.
    std::optional<std::pair<RationalVector, RationalVector>> integral_lift(int n, const RationalVector& omega) const;

    /// Integral cycles whose classes generate the free part of H_n (ordered like homology coordinates).
    std::vector<RationalVector> free_cycle_generators(int n) const;

private:
    struct Degree {
        SNFResult d;       // SNF of the reduced differential out of this degree
        SNFResult kernel;  // SNF of M = rows >= rank of Vinv * D_{n-1}
        SNFResult cycles;  // SNF of N = rows >= rank_{n-1} of Uinv_{n-1}^T * D_n^T
        int prev_rank = 0;
    };

    const Degree& degree(int n) const;
    void check_degree(int n) const;
    RationalVector reduced_to_full(int n, const RationalVector& compact) const;

    ChainReduction reduction_;
    std::vector<Degree> degrees_;
};

}  // namespace gcoh
