#include "doctest.h"

#include "gcoh/carried.hpp"
#include "gcoh/simplicial.hpp"
#include "support/oracles.hpp"

using namespace gcoh;

namespace {

int nonempty_offdiagonal_pairs(const Cover& c) {
    int count = 0;
    for (int a = 0; a < c.size(); ++a)
        for (int b = 0; b < c.size(); ++b)
            if (a != b && !intersect(c.patches[a].simplices, c.patches[b].simplices).empty()) ++count;
    return count;
}

}  // namespace

TEST_SUITE("simplicial") {

TEST_CASE("closure and counts") {
    auto s1 = simplex_boundary(2);
    CHECK(s1.num_simplices() == 6);
    auto s2 = simplex_boundary(3);
    CHECK(s2.simplices_of_dim(2).size() == 4);
    CHECK(full_simplex(2).num_simplices() == 7);
    auto sd = barycentric_subdivision(s2);
    CHECK(sd.simplices_of_dim(0).size() == 14);
    CHECK(sd.simplices_of_dim(1).size() == 36);
    CHECK(sd.simplices_of_dim(2).size() == 24);
    CHECK(sd.vertex_names()[0] == "v0");
}

TEST_CASE("coboundary squares to zero") {
    auto sd = barycentric_subdivision(simplex_boundary(3));
    CHECK((sd.coboundary(1) * sd.coboundary(0)).is_zero());
}

TEST_CASE("triangle star cover") {
    auto cover = vertex_star_cover(simplex_boundary(2));
    CHECK(validate_cover(cover).empty());
    CHECK(cover.size() == 3);
    CHECK(nonempty_offdiagonal_pairs(cover) == 6);
    auto triple = intersect(intersect(cover.patches[0].simplices, cover.patches[1].simplices), cover.patches[2].simplices);
    CHECK(triple.empty());
}

TEST_CASE("tetrahedron star cover") {
    auto cover = vertex_star_cover(simplex_boundary(3));
    CHECK(validate_cover(cover).empty());
    CHECK(nonempty_offdiagonal_pairs(cover) == 12);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c)
                CHECK_FALSE(intersect(intersect(cover.patches[a].simplices, cover.patches[b].simplices),
                                      cover.patches[c].simplices)
                                .empty());
    auto all = cover.patches[0].simplices;
    for (int a = 1; a < 4; ++a) all = intersect(all, cover.patches[a].simplices);
    CHECK(all.empty());
}

TEST_CASE("refinements") {
    auto stars = vertex_star_cover(simplex_boundary(2));
    auto halves = facet_cover(stars.complex, "H");
    CHECK(halves.size() == 6);
    CHECK(validate_cover(halves).empty());
    auto assignment = containment_assignment(halves, stars);
    for (int a : assignment) CHECK(a >= 0);

    auto tetra = vertex_star_cover(simplex_boundary(3));
    auto split = split_patch(tetra, 0);
    CHECK(split.size() == 5);
    CHECK(validate_cover(split).empty());
    CHECK(split.patches[0].name == "Uv0a");
    for (int a : containment_assignment(split, tetra)) CHECK(a >= 0);
}

TEST_CASE("invalid covers are reported") {
    auto k = simplex_boundary(2);
    Cover c;
    c.complex = k;
    c.patches.push_back({"A", k.closure({k.find({0, 1})})});
    CHECK_FALSE(validate_cover(c).empty());
    CHECK_THROWS(cech_groupoid(c));
}

TEST_CASE("carriers of Cech groupoids are consistent and banal") {
    auto cg = cech_groupoid(vertex_star_cover(simplex_boundary(3)));
    CHECK(validate_carriers(cg).empty());
    CHECK(check_banal(cg).empty());
    auto single = cech_groupoid(single_patch_cover(simplex_boundary(2)));
    CHECK(single.groupoid.num_arrows() == 1);
    CHECK(check_banal(single).empty());
    auto prod = constant_product(cyclic_group(2), full_simplex(2));
    CHECK(validate_carriers(prod).empty());
    CHECK_FALSE(check_banal(prod).empty());
}

TEST_CASE("oracle simplicial cohomology of the sphere") {
    auto g = oracle::simplicial_cohomology(simplex_boundary(3), 2);
    CHECK(g.rank == 1);
    CHECK(g.torsion.empty());
}

}
