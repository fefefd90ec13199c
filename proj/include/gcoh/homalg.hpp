#pragma once

#include "gcoh/total_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcoh {

/// A class in H^n(total, coeff) together with its representative and coordinates.
struct CohomologyClass {
    int degree = 0;
    Coeff coeff;
    RationalVector representative;
    AbelianGroupPresentation group;
    ClassCoordinates coordinates;  // empty for Z/n coefficients
    bool trivial = true;
};

/// Throws InputError unless degree n is exact for T.
void require_exact_degree(const TotalComplex& t, int n);

AbelianGroupPresentation cohomology(const TotalComplex& t, int n, const Coeff& coeff);
AbelianGroupPresentation homology(const TotalComplex& t, int n);

/// Checks closedness in the coefficient domain (MathError NotClosed otherwise).
CohomologyClass make_class(const TotalComplex& t, int n, RationalVector representative, const Coeff& coeff);
bool same_class(const TotalComplex& t, int n, const RationalVector& a, const RationalVector& b, const Coeff& coeff);

/// Witness b with c - delta b vanishing in the coefficient domain; nullopt if c is not a coboundary.
std::optional<RationalVector> is_coboundary(const TotalComplex& t, int n, const RationalVector& c, const Coeff& coeff);

/// omega = z + delta b with z integral and b rational?
bool is_integer_class(const TotalComplex& t, int n, const RationalVector& omega);

struct PairingReport {
    bool integral = true;
    std::vector<Rational> values;  // one per free cycle generator
};
PairingReport integrality_by_pairing(const TotalComplex& t, int n, const RationalVector& omega);

/// Pairing with degree and closedness checks on both sides.
Rational pair_checked(const TotalComplex& t, int n, const RationalVector& chain, const RationalVector& cochain);

/// x - delta y with vanishing (n,0) component, y rational; nullopt when the rows do not allow it.
std::optional<RationalVector> de_rham_representative(const TotalComplex& t, int n, const RationalVector& x);

/// Least-effort exact solvers for m x = rhs.
std::optional<RationalVector> solve_rational(const SparseMatrix& m, const RationalVector& rhs);
std::optional<RationalVector> solve_integral(const SparseMatrix& m, const RationalVector& rhs);

/// Restriction of a degree-n total differential to the given row/column bidegree blocks.
SparseMatrix block_matrix(const TotalComplex& t, const SparseMatrix& m, int n_out, const std::vector<int>& row_ps,
                          int n_in, const std::vector<int>& col_ps);

/// Components of x in the given degree-n bidegree blocks, concatenated in block order.
RationalVector gather(const TotalComplex& t, int n, const std::vector<int>& ps, const RationalVector& x);
/// Inverse of gather: a degree-n vector zero outside the blocks.
RationalVector scatter(const TotalComplex& t, int n, const std::vector<int>& ps, const RationalVector& values);

}  // namespace gcoh
