#pragma once

#include "gcoh/groupoid.hpp"
#include "gcoh/simplicial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcoh {

/// A finite groupoid whose objects and arrows are spread over subcomplexes of a simplicial complex K.
///
/// Finite regime: K is a point and everything is carried by it. Cech regime: the pair groupoid on the
/// patches of a cover, arrow (a|b) carried by the intersection of the two patches. Constant regime:
/// a finite groupoid times K.
struct CarriedGroupoid {
    enum class Regime { Finite, Cech, Constant };

    Regime regime = Regime::Finite;
    FiniteGroupoid groupoid;
    SimplicialComplex complex;
    std::vector<Subcomplex> object_carrier;
    std::vector<Subcomplex> arrow_carrier;
    std::optional<Cover> cover;  // Cech regime only

    /// Cech regime: the arrow a -> b of the pair groupoid.
    int pair_arrow(int a, int b) const;
    std::string regime_name() const;
};

CarriedGroupoid carried_finite(const FiniteGroupoid& g);
/// Throws InputError if the cover is invalid.
CarriedGroupoid cech_groupoid(const Cover& cover);
CarriedGroupoid constant_product(const FiniteGroupoid& g, const SimplicialComplex& k);

/// Carrier consistency: subcomplexes, arrows inside source and target carriers, identities and inverses
/// carried like their objects/arrows, composites carried on the overlap of their factors.
std::vector<std::string> validate_carriers(const CarriedGroupoid& cg);

/// Fibered-product property: over every simplex, exactly one arrow between any two objects carried there.
std::vector<std::string> check_banal(const CarriedGroupoid& cg);

/// Nerve levels 0..p_max with cells pruned to nonempty carriers; carriers[p][cell] alongside.
struct CarriedNerve {
    std::vector<NerveLevel> levels;
    std::vector<std::vector<Subcomplex>> carriers;
};

/// `cell_budget` bounds the number of nerve cells; exceeding it throws SizeGuardExceeded.
CarriedNerve carried_nerve(const CarriedGroupoid& cg, int p_max, std::size_t cell_budget);

}  // namespace gcoh
