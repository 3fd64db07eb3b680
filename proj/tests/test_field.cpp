#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pivotrace/field.hpp"

using namespace pivotrace;

TEST_CASE("rational arithmetic is exact") {
    const Field* q = Field::rationals();
    auto a = FieldElement::parse(q, "3/4");
    auto b = FieldElement::parse(q, "-2/6");
    CHECK((a + b).str() == "5/12");
    CHECK((a * b).str() == "-1/4");
    CHECK((a - a).is_zero());
    CHECK((a / a).is_one());
    CHECK(a.inverse().str() == "4/3");
    CHECK((-b).str() == "1/3");
}

TEST_CASE("rational parse/str round-trips") {
    const Field* q = Field::rationals();
    for (const char* s : {"0", "1", "-1", "7/3", "-22/7"}) {
        auto v = FieldElement::parse(q, s);
        CHECK(FieldElement::parse(q, v.str()) == v);
    }
    CHECK_THROWS_AS(FieldElement::parse(q, "abc"), FieldError);
}

TEST_CASE("prime field residues") {
    const Field* f5 = Field::prime(5);
    auto two = FieldElement::from_long(f5, 2);
    auto seven = FieldElement::from_long(f5, 7);
    CHECK(seven == two);
    CHECK((two * two * two).str() == "3");
    CHECK(two.inverse() == FieldElement::from_long(f5, 3));
    CHECK((two + FieldElement::from_long(f5, 3)).is_zero());
    CHECK(f5->characteristic() == 5);

    const Field* f2 = Field::prime(2);
    auto one = FieldElement::one(f2);
    CHECK((one + one).is_zero());
}

TEST_CASE("field elements of different fields do not mix") {
    auto a = FieldElement::one(Field::rationals());
    auto b = FieldElement::one(Field::prime(5));
    CHECK_THROWS_AS((void)(a + b), FieldError);
}

TEST_CASE("cyclotomic field Q(zeta_8)") {
    const Field* c8 = Field::cyclotomic(8);
    CHECK(c8->degree() == 4);  // Phi_8 = x^4 + 1
    auto z = FieldElement::parse(c8, "z");
    auto z4 = z * z * z * z;
    CHECK(z4 == -FieldElement::one(c8));
    // zeta_8 is a primitive 8th root
    auto z8 = z4 * z4;
    CHECK(z8.is_one());
    // inverse: z * z^-1 = 1
    CHECK((z * z.inverse()).is_one());
    auto mixed = FieldElement::parse(c8, "1/2+3z^2-z");
    CHECK((mixed - mixed).is_zero());
    CHECK((mixed * mixed.inverse()).is_one());
    CHECK(FieldElement::parse(c8, mixed.str()) == mixed);
}

TEST_CASE("cyclotomic polynomial values") {
    auto p12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
    REQUIRE(p12.size() == 5);
    CHECK(p12[0] == 1);
    CHECK(p12[2] == -1);
    CHECK(p12[4] == 1);
    auto p3 = cyclotomic_polynomial(3);  // x^2 + x + 1
    REQUIRE(p3.size() == 3);
    CHECK(p3[1] == 1);
}

TEST_CASE("field interning and parse") {
    CHECK(Field::parse("Q") == Field::rationals());
    CHECK(Field::parse("Fp 5") == Field::prime(5));
    CHECK(Field::parse("Cyclotomic 8") == Field::cyclotomic(8));
    CHECK(Field::prime(5) == Field::prime(5));
}
