#include "doctest.h"

#include "gcoh/numeric.hpp"
#include "gcoh/presentation.hpp"

using namespace gcoh;

TEST_SUITE("numeric") {

TEST_CASE("rationals parse and print exactly") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(parse_rational(" 7 ")) == "7");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("1.5"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("circle values reduce into [0,1)") {
    CHECK(parse_circle("3/2 mod 1") == Rational(1, 2));
    CHECK(parse_circle("-1/3 mod 1") == Rational(2, 3));
    CHECK(parse_circle("2") == 0);
    CHECK(circle_to_string(Rational(-1, 4)) == "3/4 mod 1");
}

TEST_CASE("floor and residues") {
    CHECK(floor(Rational(-1, 2)) == -1);
    CHECK(floor(Rational(5, 2)) == 2);
    CHECK(floor(Rational(-4)) == -4);
    CHECK(mod(Integer(-3), Integer(4)) == 1);
    CHECK(gcd(Integer(12), Integer(-18)) == 6);
    CHECK(lcm(Integer(4), Integer(6)) == 12);
}

TEST_CASE("checked int64 arithmetic throws on overflow") {
    CHECK(checked_add(2, 3) == 5);
    CHECK_THROWS_AS(checked_mul(std::int64_t(1) << 62, 4), std::overflow_error);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
}

TEST_CASE("coefficient names round trip") {
    CHECK(Coeff::parse("Z") == Coeff::Z());
    CHECK(Coeff::parse("QmodZ") == Coeff::QmodZ());
    CHECK(Coeff::parse("Zmod:6").modulus == 6);
    CHECK(Coeff::parse("Zmod:6").name() == "Zmod:6");
    CHECK_THROWS(Coeff::parse("R"));
    CHECK_THROWS(Coeff::parse("Zmod:1"));
}

TEST_CASE("canonical presentations follow the divisibility chain") {
    auto p = canonical_presentation({Integer(2), Integer(3), Integer(0), Integer(1)});
    CHECK(p.rank == 1);
    REQUIRE(p.torsion.size() == 1);
    CHECK(p.torsion[0] == 6);
    auto q = canonical_presentation({Integer(2), Integer(4)});
    CHECK(q.to_string() == "Z/2 + Z/4");
    CHECK(AbelianGroupPresentation{}.to_string() == "0");
}

}
