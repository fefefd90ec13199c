#include "doctest.h"

#include "gcoh/error.hpp"
#include "gcoh/fixtures.hpp"
#include "gcoh/morita.hpp"

using namespace gcoh;

TEST_SUITE("morita") {

TEST_CASE("identity and inclusion") {
    auto z2 = fixture("Z2");
    CHECK(validate_morita(z2, z2, identity_morphism(z2.groupoid)).empty());
    auto e = fixture("trivial");
    GroupoidMorphism inclusion{{0}, {0}};
    CHECK_FALSE(validate_morita(e, z2, inclusion).empty());

    TotalComplex tz(z2, TotalOptions::for_degree(3, 0));
    TotalComplex te(e, TotalOptions::for_degree(3, 0));
    auto maps = pullback_map(tz, te, inclusion);
    CHECK(check_chain_map(tz, te, maps).empty());
    auto verdicts = verify_invariance(tz, te, inclusion, Coeff::Z(), 2);
    CHECK(verdicts[0].isomorphism);
    CHECK_FALSE(verdicts[2].isomorphism);
}

TEST_CASE("pair groupoid onto a point") {
    auto pair = carried_finite(pair_groupoid(2));
    auto point = fixture("trivial");
    GroupoidMorphism collapse{{0, 0}, {0, 0, 0, 0}};
    CHECK(validate_morita(pair, point, collapse).empty());
    TotalComplex tp(pair, TotalOptions::for_degree(3, 0));
    TotalComplex tt(point, TotalOptions::for_degree(3, 0));
    for (const auto& v : verify_invariance(tt, tp, collapse, Coeff::Z(), 3)) CHECK(v.isomorphism);
    CHECK(cohomology(tp, 0, Coeff::Z()).to_string() == "Z");
}

TEST_CASE("triangle refinement") {
    auto coarse = fixture_cover("triangle");
    auto fine = fixture_cover("triangle-halves");
    CHECK(fine.size() == 6);
    auto f = refinement_morphism(fine, coarse, containment_assignment(fine, coarse));
    auto cf = cech_groupoid(fine), cc = cech_groupoid(coarse);
    CHECK(validate_morita(cf, cc, f).empty());
    TotalComplex tf(cf, TotalOptions::for_degree(3, 1));
    TotalComplex tc(cc, TotalOptions::for_degree(3, 1));
    CHECK(check_chain_map(tc, tf, pullback_map(tc, tf, f)).empty());
    for (const auto& coeff : {Coeff::Z(), Coeff::Q(), Coeff::QmodZ()})
        for (const auto& v : verify_invariance(tc, tf, f, coeff, 2)) {
            CAPTURE(v.degree);
            CHECK(v.isomorphism);
        }
    auto wrong = containment_assignment(fine, coarse);
    wrong[0] = (wrong[0] + 1) % 3;
    bool contained = false;
    try {
        refinement_morphism(fine, coarse, wrong);
    } catch (const MathError& e) {
        contained = e.kind() == MathErrorKind::NotARefinement;
    }
    // The half-star may still sit in the neighbouring star; only a genuine failure must throw.
    if (!contained) {
        auto ok = refinement_morphism(fine, coarse, wrong);
        CHECK(validate_morita(cf, cc, ok).empty());
    }
    auto self = refinement_morphism(coarse, coarse, {0, 1, 2});
    CHECK(self.arrow_map == identity_morphism(cc.groupoid).arrow_map);
}

TEST_CASE("quotient Z4 to Z2 is not Morita") {
    auto z4 = fixture("Z4"), z2 = fixture("Z2");
    GroupoidMorphism q{{0}, {0, 1, 0, 1}};
    CHECK_FALSE(validate_morita(z4, z2, q).empty());
}

}
