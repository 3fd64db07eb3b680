#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace pivotrace;
using namespace testutil;

TEST_CASE("built-in Sweedler data passes every axiom") {
    CategoryData d = builtin_sweedler();
    CHECK(validate_hopf(d.hopf).empty());
    REQUIRE(d.modules.size() == 4);
    for (const auto& m : d.modules) CHECK(validate_module(d.hopf, m).empty());
}

TEST_CASE("built-in group algebras pass every axiom") {
    for (auto* f : {Field::prime(2), Field::prime(5), Field::rationals()}) {
        CategoryData d = builtin_group_algebra(2, f);
        CHECK(validate_hopf(d.hopf).empty());
        for (const auto& m : d.modules) CHECK(validate_module(d.hopf, m).empty());
    }
}

TEST_CASE("the non-spherical Z/4 over F5 fixture is a valid pivotal Hopf algebra") {
    CategoryData d = z4_f5_data();
    CHECK(validate_hopf(d.hopf).empty());
    for (const auto& m : d.modules) CHECK(validate_module(d.hopf, m).empty());
}

TEST_CASE("corrupted structure constants are detected") {
    CategoryData d = builtin_sweedler();
    SUBCASE("broken associativity") {
        d.hopf.mult[2][3][0] = FieldElement::one(d.hopf.field);  // x*gx = 1 is wrong
        CHECK_FALSE(validate_hopf(d.hopf).empty());
    }
    SUBCASE("broken antipode") {
        d.hopf.antipode.at(3, 2) = FieldElement::one(d.hopf.field);  // S(x) = +gx is wrong
        CHECK_FALSE(validate_hopf(d.hopf).empty());
    }
    SUBCASE("pivot not grouplike") {
        d.hopf.pivot = d.hopf.zero_vec();
        d.hopf.pivot[2] = FieldElement::one(d.hopf.field);  // x is not grouplike
        CHECK_FALSE(validate_hopf(d.hopf).empty());
    }
    SUBCASE("broken module") {
        d.modules[2].action[1].at(0, 0) = -FieldElement::one(d.hopf.field);
        CHECK_FALSE(validate_module(d.hopf, d.modules[2]).empty());
    }
}

TEST_CASE("multiplication, counit, inversion") {
    CategoryData d = builtin_sweedler();
    const HopfAlgebra& h = d.hopf;
    const Field* f = h.field;
    auto e = [&](size_t i) {
        auto v = h.zero_vec();
        v[i] = FieldElement::one(f);
        return v;
    };
    // g * g = 1
    CHECK(h.multiply(e(1), e(1)) == h.unit);
    // x * x = 0
    CHECK(h.multiply(e(2), e(2)) == h.zero_vec());
    CHECK(h.counit_of(e(1)).is_one());
    CHECK(h.counit_of(e(2)).is_zero());
    // g is its own inverse; x is not invertible
    CHECK(h.invert(e(1)) == e(1));
    CHECK_THROWS_AS(h.invert(e(2)), HopfError);
    // left multiplication by the unit is the identity
    CHECK(h.left_mult_matrix(h.unit).is_identity());
}

TEST_CASE("category file parser reproduces the group algebra") {
    std::string text =
        "# Z/2 over F2\n"
        "field Fp 2\n"
        "hopf dim 2\n"
        "mult 0 0 -> 1 0\n"
        "mult 0 1 -> 0 1\n"
        "mult 1 0 -> 0 1\n"
        "mult 1 1 -> 1 0\n"
        "comult 0 -> 0 0 1\n"
        "comult 1 -> 1 1 1\n"
        "counit 1 1\n"
        "antipode 0 -> 1 0\n"
        "antipode 1 -> 0 1\n"
        "pivot 1 0\n"
        "module triv dim 1\n"
        "action triv 0 -> 1\n"
        "action triv 1 -> 1\n"
        "module reg dim 2\n"
        "action reg 0 -> 1 0 ; 0 1\n"
        "action reg 1 -> 0 1 ; 1 0\n";
    CategoryData d = parse_category_file(text, "z2");
    CHECK(validate_hopf(d.hopf).empty());
    REQUIRE(d.modules.size() == 2);
    for (const auto& m : d.modules) CHECK(validate_module(d.hopf, m).empty());
    CategoryData ref = builtin_group_algebra(2, Field::prime(2));
    CHECK(d.hopf.antipode == ref.hopf.antipode);
    CHECK(d.modules[1].action[1] == ref.modules[1].action[1]);
}

TEST_CASE("category file parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_category_file("hopf dim 2\n", "bad"),
                         doctest::Contains("line 1"), HopfError);
    CHECK_THROWS_WITH_AS(parse_category_file("field Q\nhopf dim 2\nmult 5 0 -> 1 0\n", "bad"),
                         doctest::Contains("line 3"), HopfError);
    CHECK_THROWS_AS(parse_category_file("field Q\n", "bad"), HopfError);
}

TEST_CASE("load_category resolves builtin specs") {
    CHECK(load_category("sweedler").name == "sweedler");
    CHECK(load_category("group_algebra:2:Fp 2").modules.size() == 2);
    CHECK_THROWS_AS(load_category("no_such_file.cat"), HopfError);
}
