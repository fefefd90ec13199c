#include "doctest.h"

#include "gcoh/error.hpp"
#include "gcoh/total_complex.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace gcoh;

namespace {

AbelianGroupPresentation as_presentation(const oracle::Group& g) {
    AbelianGroupPresentation p;
    p.rank = g.rank;
    p.torsion = g.torsion;
    return p;
}

std::vector<std::vector<int>> table_of(const FiniteGroupoid& g) {
    int n = g.num_arrows();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = g.compose(a, b);
    return t;
}

}  // namespace

TEST_SUITE("total_complex") {

TEST_CASE("identities hold on every regime") {
    TotalComplex finite(carried_finite(cyclic_group(3)), TotalOptions::for_degree(3, 0));
    CHECK(finite.check_identities().empty());
    auto tetra = vertex_star_cover(simplex_boundary(3));
    TotalComplex cech(cech_groupoid(tetra), TotalOptions::for_degree(3, 2));
    CHECK(cech.check_identities().empty());
    TotalComplex constant(constant_product(cyclic_group(2), simplex_boundary(2)), TotalOptions::for_degree(2, 1));
    CHECK(constant.check_identities().empty());
    TotalComplex pair(carried_finite(pair_groupoid(3)), TotalOptions::for_degree(3, 0));
    CHECK(pair.check_identities().empty());
}

TEST_CASE("finite groups against the bar complex") {
    for (int n : {2, 3, 4}) {
        TotalComplex t(carried_finite(cyclic_group(n)), TotalOptions::for_degree(4, 0));
        auto table = oracle::cyclic_table(n);
        for (int k = 0; k <= 4; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(t.engine().cohomology(k, Coeff::Z()) == as_presentation(oracle::group_cohomology(table, k)));
        }
    }
    auto v4 = klein_four();
    TotalComplex t(carried_finite(v4), TotalOptions::for_degree(3, 0));
    for (int k = 0; k <= 3; ++k)
        CHECK(t.engine().cohomology(k, Coeff::Z()) == as_presentation(oracle::group_cohomology(table_of(v4), k)));
    CHECK(t.engine().cohomology(2, Coeff::QmodZ()).to_string() == "Z/2");
    auto s3 = symmetric_group3();
    TotalComplex ts(carried_finite(s3), TotalOptions::for_degree(3, 0));
    for (int k = 0; k <= 3; ++k)
        CHECK(ts.engine().cohomology(k, Coeff::Z()) == as_presentation(oracle::group_cohomology(table_of(s3), k)));
}

TEST_CASE("pair groupoid is equivalent to a point") {
    TotalComplex t(carried_finite(pair_groupoid(3)), TotalOptions::for_degree(3, 0));
    CHECK(t.engine().cohomology(0, Coeff::Z()).to_string() == "Z");
    for (int k = 1; k <= 3; ++k) CHECK(t.engine().cohomology(k, Coeff::Z()).is_trivial());
}

TEST_CASE("banal groupoids recover the cohomology of K") {
    for (auto k : {simplex_boundary(2), simplex_boundary(3)}) {
        for (const auto& cover : {vertex_star_cover(k), single_patch_cover(barycentric_subdivision(k))}) {
            TotalComplex t(cech_groupoid(cover), TotalOptions::for_degree(3, cover.complex.dimension()));
            for (int n = 0; n <= t.valid_max_degree(); ++n) {
                CAPTURE(n);
                CHECK(t.engine().cohomology(n, Coeff::Z()) ==
                      as_presentation(oracle::simplicial_cohomology(cover.complex, n)));
            }
        }
    }
}

TEST_CASE("constant product is the Kunneth product") {
    TotalComplex t(constant_product(cyclic_group(2), simplex_boundary(2)), TotalOptions::for_degree(2, 1));
    CHECK(t.engine().cohomology(0, Coeff::Z()).to_string() == "Z");
    CHECK(t.engine().cohomology(1, Coeff::Z()).to_string() == "Z");
    CHECK(t.engine().cohomology(2, Coeff::Z()).to_string() == "Z/2");
}

TEST_CASE("fundamental cycle pairs to one with the orientation class") {
    auto cover = vertex_star_cover(simplex_boundary(3));
    TotalComplex t(cech_groupoid(cover), TotalOptions::for_degree(3, 2));
    auto cycle = fundamental_cycle(t);
    CHECK(t.engine().boundary(2, cycle).empty() == false);
    CHECK(is_zero(t.engine().boundary(2, cycle)));
    auto gens = t.engine().integral_generators(2);
    REQUIRE(gens.size() == 1);
    auto value = pair(cycle, gens[0]);
    CHECK((value == 1 || value == -1));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coin(-2, 2);
    for (int trial = 0; trial < 5; ++trial) {
        auto b = t.zero(1);
        for (auto& e : b) e = coin(rng);
        CHECK(pair(cycle, t.apply_delta(1, b)) == 0);
    }
}

TEST_CASE("orientation of the sphere") {
    auto signs = orient_pseudomanifold(simplex_boundary(3));
    CHECK(signs.size() == 4);
    CHECK_THROWS_AS(orient_pseudomanifold(full_simplex(2)), InputError);
}

TEST_CASE("size guard") {
    auto cover = vertex_star_cover(simplex_boundary(3));
    auto options = TotalOptions::for_degree(3, 2);
    options.cell_cap = 50;
    CHECK_THROWS_AS(TotalComplex(cech_groupoid(cover), options), SizeGuardExceeded);
}

}
