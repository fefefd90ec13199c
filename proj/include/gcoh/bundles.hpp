#pragma once

#include "gcoh/homalg.hpp"

#include <string>
#include <vector>

namespace gcoh {

/// An S^1-bundle trivialized over the objects, with a pseudo-connection.
/// `c` is a rational lift of the circle-valued transition cocycle, a degree-1 cochain pure in bidegree (1,0).
/// `A` is the connection 1-form on the objects, a degree-1 cochain pure in bidegree (0,1).
struct BundleDatum {
    RationalVector c;
    RationalVector A;
};

/// omega in (1,1) and Omega in (0,2), both as degree-2 cochains.
struct PseudoCurvature {
    RationalVector omega;
    RationalVector Omega;
    RationalVector total() const;
};

/// Violations of: shape, purity, integrality of del c, and d del c = 0.
std::vector<std::string> validate_bundle(const TotalComplex& t, const RationalVector& c);

/// [del c] in H^2(total, Z). Throws MathError(InvalidCocycle) on an invalid c.
CohomologyClass chern_class(const TotalComplex& t, const RationalVector& c);

/// omega = del A + d c, Omega = dA; so that omega + Omega = delta(A - c) + del c is closed.
PseudoCurvature pseudo_curvature(const TotalComplex& t, const BundleDatum& b);

/// A datum whose pseudo-curvature equals psi exactly.
/// Errors: NotClosed, NotIntegral (detail carries the pairings), NeedsRefinement.
BundleDatum realize_bundle(const TotalComplex& t, const RationalVector& psi);

/// Class in H^1(total, Q/Z) of (c - c') - (A - A'). Throws CurvatureMismatch on unequal pseudo-curvatures.
CohomologyClass difference_class(const TotalComplex& t, const BundleDatum& a, const BundleDatum& b);

/// Acts by a degree-1 Q/Z cocycle x whose coboundary is pure (2,0): (c + x_(1,0), A - x_(0,1)).
BundleDatum twist(const TotalComplex& t, const BundleDatum& b, const RationalVector& x);

}  // namespace gcoh
