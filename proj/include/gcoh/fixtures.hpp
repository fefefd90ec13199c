#pragma once

#include "gcoh/carried.hpp"

#include <string>
#include <vector>

namespace gcoh {

/// Built-in fixtures: trivial, Z2, Z4, V4, S3 (finite groups), triangle and tetrahedron star covers,
/// their refinements triangle-halves and tetrahedron-split, and the constant product Z2xS1.
std::vector<std::string> fixture_names();
CarriedGroupoid fixture(const std::string& name);
/// Cover behind a Cech fixture.
Cover fixture_cover(const std::string& name);

/// Simplicial circle and sphere used by the star covers.
SimplicialComplex triangle_boundary();
SimplicialComplex tetrahedron_boundary();

}  // namespace gcoh
