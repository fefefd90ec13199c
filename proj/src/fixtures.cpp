#include "gcoh/fixtures.hpp"

#include "gcoh/error.hpp"

namespace gcoh {

SimplicialComplex triangle_boundary() { return simplex_boundary(2); }
SimplicialComplex tetrahedron_boundary() { return simplex_boundary(3); }

std::vector<std::string> fixture_names() {
    return {"trivial", "Z2", "Z4", "V4", "S3", "triangle", "triangle-halves", "tetrahedron", "tetrahedron-split", "Z2xS1"};
}

Cover fixture_cover(const std::string& name) {
    if (name == "triangle") return vertex_star_cover(triangle_boundary());
    if (name == "triangle-halves") return facet_cover(vertex_star_cover(triangle_boundary()).complex, "H");
    if (name == "tetrahedron") return vertex_star_cover(tetrahedron_boundary());
    if (name == "tetrahedron-split") return split_patch(vertex_star_cover(tetrahedron_boundary()), 0);
    throw InputError("no cover fixture named '" + name + "'");
}

CarriedGroupoid fixture(const std::string& name) {
    if (name == "trivial") return carried_finite(trivial_groupoid());
    if (name == "Z2") return carried_finite(cyclic_group(2));
    if (name == "Z4") return carried_finite(cyclic_group(4));
    if (name == "V4") return carried_finite(klein_four());
    if (name == "S3") return carried_finite(symmetric_group3());
    if (name == "Z2xS1") return constant_product(cyclic_group(2), triangle_boundary());
    return cech_groupoid(fixture_cover(name));
}

}  // namespace gcoh
