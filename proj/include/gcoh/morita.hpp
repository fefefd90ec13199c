#pragma once

#include "gcoh/homalg.hpp"

#include <string>
#include <vector>

namespace gcoh {

/// Problems with f: source -> target as a carried Morita morphism (empty when it is one).
/// Cartesianness is checked over every simplex; surjectivity is essential surjectivity over every simplex.
std::vector<std::string> validate_morita(const CarriedGroupoid& source, const CarriedGroupoid& target,
                                         const GroupoidMorphism& f);

/// Degreewise pullback f^*: C^n(target) -> C^n(source), (f^* c)(x, s) = c(f x, s), n = 0..top.
std::vector<SparseMatrix> pullback_map(const TotalComplex& target, const TotalComplex& source, const GroupoidMorphism& f);

/// Violations of delta_source F_n = F_{n+1} delta_target.
std::vector<std::string> check_chain_map(const TotalComplex& target, const TotalComplex& source,
                                         const std::vector<SparseMatrix>& maps);

struct DegreeVerdict {
    int degree = 0;
    AbelianGroupPresentation target_group;
    AbelianGroupPresentation source_group;
    bool isomorphism = false;
    std::string reason;
};

/// Per-degree verdict on f^*: H^n(target, coeff) -> H^n(source, coeff) for n = 0..max_degree.
std::vector<DegreeVerdict> verify_invariance(const TotalComplex& target, const TotalComplex& source,
                                             const GroupoidMorphism& f, const Coeff& coeff, int max_degree);

/// Cech morphism induced by sending fine patch i into coarse patch assignment[i].
/// Throws MathError(NotARefinement) if a fine patch is not contained in its coarse patch.
GroupoidMorphism refinement_morphism(const Cover& fine, const Cover& coarse, const std::vector<int>& assignment);

}  // namespace gcoh
