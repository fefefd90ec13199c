#pragma once

#include "gcoh/homalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcoh {

/// A central extension trivialized over the arrows, with a pseudo-connection theta + B.
/// `sigma` lifts the circle-valued 2-cocycle (pure (2,0)), `A` is pure (1,1), `B` pure (0,2); all degree 2.
struct GerbeDatum {
    RationalVector sigma;
    RationalVector A;
    RationalVector B;
};

/// eta in (2,1), omega in (1,2), Omega in (0,3), all degree 3.
struct GerbeCurvature {
    RationalVector eta;
    RationalVector omega;
    RationalVector Omega;
    RationalVector total() const;
};

std::vector<std::string> validate_extension_cocycle(const TotalComplex& t, const RationalVector& sigma);

/// [del sigma] in H^3(total, Z).
CohomologyClass dd_class(const TotalComplex& t, const RationalVector& sigma);

/// Omega = dB, omega = del B - dA, eta = del A - d sigma.
GerbeCurvature pseudo_curvature_gerbe(const TotalComplex& t, const GerbeDatum& g);

/// eta = 0.
bool connective_check(const TotalComplex& t, const GerbeDatum& g);
/// B with del B = dA, nullopt when the curving equation has no solution.
std::optional<RationalVector> find_curving(const TotalComplex& t, const RationalVector& A);
RationalVector curvature(const TotalComplex& t, const RationalVector& B);
bool is_flat(const TotalComplex& t, const GerbeDatum& g);

/// A datum with pseudo-curvature exactly psi.
/// Errors: NotClosed, NotIntegral, OmegaNotExact, NeedsRefinement.
GerbeDatum realize_gerbe(const TotalComplex& t, const RationalVector& psi);

/// Componentwise difference of two data with equal pseudo-curvature (CurvatureMismatch otherwise).
GerbeDatum difference_flat(const TotalComplex& t, const GerbeDatum& a, const GerbeDatum& b);
GerbeDatum add_data(const GerbeDatum& a, const GerbeDatum& b);

/// Class of sigma - A - B in H^2(total, Q/Z) for a flat datum (NotFlat otherwise).
CohomologyClass flat_class(const TotalComplex& t, const GerbeDatum& flat);

RationalVector tensor(const TotalComplex& t, const RationalVector& s1, const RationalVector& s2);

/// A groupoid R over a finite base whose arrows are pairs (g, s), s in Z/N, multiplied by
/// (g,s)(h,t) = (gh, s + t + N sigma(g,h)).
struct ExtensionGroupoid {
    FiniteGroupoid base;
    int order = 1;  // N
    FiniteGroupoid groupoid;
    std::vector<int> projection;  // arrow of R -> arrow of the base
    std::vector<int> fiber;       // arrow of R -> coordinate in Z/N
    int arrow(int g, int s) const;
};

/// Finite regime only. sigma must take values in (1/N)Z/Z.
ExtensionGroupoid extension_from_cocycle(const TotalComplex& t, const RationalVector& sigma, int order);
/// Groupoid axioms, projection a morphism, free transitive fiber action, centrality.
std::vector<std::string> validate_extension(const ExtensionGroupoid& r);
/// section[g] = arrow of R over g; empty means fiber coordinate 0. Values in [0,1).
RationalVector cocycle_from_extension(const TotalComplex& t, const ExtensionGroupoid& r,
                                      const std::vector<int>& section = {});

/// Representatives of the N-torsion of H^2(total, Q/Z), values in [0,1) (finite regime only).
std::vector<RationalVector> enumerate_extension_classes(const TotalComplex& t, int order);

/// Sum of a 1-cochain of K over a closed 1-chain, mod 1. a must be flat (da integral) and the loop closed.
Rational holonomy(const SimplicialComplex& k, const RationalVector& a, const RationalVector& loop);
/// Zero holonomy on every 1-cycle.
bool holonomy_free(const SimplicialComplex& k, const RationalVector& a);
/// a_x = A(id_x) - eta(id_x, id_x) on the carrier of object x, as a 1-cochain of K.
RationalVector theorem_connection(const TotalComplex& t, const GerbeDatum& g, int object);

}  // namespace gcoh
