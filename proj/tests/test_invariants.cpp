#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace pivotrace;
using namespace testutil;

namespace {

Generator gen(Generator::Kind k, const std::string& obj, int eps = +1) {
    Generator g;
    g.kind = k;
    g.obj = Factor{obj, 0};
    g.eps = eps;
    return g;
}

Generator coupon(const std::string& name) {
    Generator g;
    g.kind = Generator::Kind::Coupon;
    g.coupon = name;
    return g;
}

Diagram closed(const std::string& name, std::vector<std::vector<Generator>> rows) {
    Diagram d;
    d.name = name;
    d.rows = std::move(rows);
    return d;
}

/// All cutting presentations of a closed diagram.
std::vector<Diagram> all_cuttings(const Category& c, const Diagram& d, const CouponTable& coupons) {
    std::vector<Diagram> out;
    for (auto [b, p] : cut_points(d, coupons)) {
        Diagram pres = cut(d, coupons, b, p);
        typecheck(c, pres, coupons);
        out.push_back(std::move(pres));
    }
    return out;
}

/// The corpus over F2[Z/2]: five closed diagrams colored by the regular
/// module, with intertwiner coupons s (the socle map) and u (coev after tev).
CouponTable z2_coupons() {
    Category& c = z2_f2();
    CouponTable t;
    CouponDef s;
    s.name = "s";
    s.source = {{Factor{"reg", 0}, +1}};
    s.target = s.source;
    s.mat = Matrix::from_rows(c.field(), {{FieldElement::one(c.field()), FieldElement::one(c.field())},
                                          {FieldElement::one(c.field()), FieldElement::one(c.field())}});
    s.has_matrix = true;
    t[s.name] = s;
    CouponDef u;
    u.name = "u";
    u.source = {{Factor{"reg", 0}, +1}, {Factor{"reg", 0}, -1}};
    u.target = u.source;
    u.mat = c.compose(c.coev(W("reg")), c.tev(W("reg"))).mat;
    u.has_matrix = true;
    t[u.name] = u;
    return t;
}

std::vector<Diagram> z2_corpus() {
    auto id_p = gen(Generator::Kind::Id, "reg", +1);
    auto id_m = gen(Generator::Kind::Id, "reg", -1);
    auto cv = gen(Generator::Kind::Coev, "reg");
    auto tv = gen(Generator::Kind::Tev, "reg");
    return {
        closed("bubble-s", {{cv}, {coupon("s"), id_m}, {tv}}),
        closed("bubble-ss", {{cv}, {coupon("s"), id_m}, {coupon("s"), id_m}, {tv}}),
        closed("bubble-uu", {{cv}, {coupon("u")}, {coupon("u")}, {tv}}),
        closed("two-bubbles", {{cv, cv}, {coupon("s"), id_m, coupon("s"), id_m}, {tv, tv}}),
        closed("nested", {{cv},
                          {id_p, cv, id_m},
                          {id_p, coupon("s"), id_m, id_m},
                          {id_p, tv, id_m},
                          {tv}}),
    };
}

}  // namespace

TEST_CASE("cut points and cuttings of closed diagrams") {
    Category& c = z2_f2();
    CouponTable coupons = z2_coupons();
    Diagram d = z2_corpus()[0];  // bubble-s: 3 rows, internal boundaries of width 2
    auto sigs = boundary_signatures(d, coupons);
    REQUIRE(sigs.size() == 4);
    CHECK(sigs[0].empty());
    CHECK(sigs[1].size() == 2);
    CHECK(sigs[2].size() == 2);
    CHECK(sigs[3].empty());
    auto pts = cut_points(d, coupons);
    CHECK(pts.size() == 4);
    for (const Diagram& pres : all_cuttings(c, d, coupons)) {
        REQUIRE(pres.source.size() == 1);
        CHECK(pres.source == pres.target);
    }
    // cutting a non-closed diagram is rejected
    Diagram open = cut(d, coupons, 1, 1);
    CHECK_THROWS_AS(cut_points(open, coupons), InvariantError);
    CHECK_THROWS_AS(cut(d, coupons, 3, 1), InvariantError);
    CHECK_THROWS_AS(cut(d, coupons, 1, 5), InvariantError);
}

TEST_CASE("two-sided invariance across the closed-diagram corpus") {
    Category& c = z2_f2();
    CouponTable coupons = z2_coupons();
    auto sols = solve_ambidextrous(c, {W("reg")}, AmbiMode::Spherical, {W("reg")});
    REQUIRE(sols.size() == 1);
    ExtendedTrace t(c, sols[0], {W("reg")});
    for (const Diagram& d : z2_corpus()) {
        auto presentations = all_cuttings(c, d, coupons);
        REQUIRE(presentations.size() >= 3);
        auto report = invariance_audit(c, t, coupons, presentations, InvariantVariant::TwoSided);
        CAPTURE(d.name);
        CHECK(report.empty());
    }
}

TEST_CASE("A-colored rotation invariance on the non-spherical fixture") {
    Category& c = z4_f5();
    const Field* f = c.field();
    ExtendedTrace t(c, usual_trace_family(c, Side::Left, {W("V0"), W("V1"), W("V2"), W("V3")}), {W("V0")});
    std::vector<Word> a_set = {W("V0"), W("V2")};
    CouponTable coupons;
    CouponDef w;
    w.name = "w";
    w.source = {{Factor{"V2", 0}, +1}};
    w.target = w.source;
    w.mat = Matrix::scalar(FieldElement::from_long(f, 2));
    w.has_matrix = true;
    coupons[w.name] = w;
    Diagram d = closed("v2-bubble", {{gen(Generator::Kind::Coev, "V2")},
                                     {coupon("w"), gen(Generator::Kind::Id, "V2", -1)},
                                     {gen(Generator::Kind::Tev, "V2")}});
    auto presentations = all_cuttings(c, d, coupons);
    REQUIRE(presentations.size() >= 3);
    auto report = invariance_audit(c, t, coupons, presentations, InvariantVariant::AColored, a_set);
    CHECK(report.empty());
}

TEST_CASE("sections outside A yield gap notes, not claims") {
    Category& c = z4_f5();
    ExtendedTrace t(c, usual_trace_family(c, Side::Left, {W("V0"), W("V1"), W("V2"), W("V3")}), {W("V0")});
    std::vector<Word> a_set = {W("V0"), W("V2")};
    CouponTable coupons;
    Diagram d = closed("v1-circle", {{gen(Generator::Kind::Coev, "V1")}, {gen(Generator::Kind::Tev, "V1")}});
    auto presentations = all_cuttings(c, d, coupons);
    // a single presentation: no rotation claim is made, only a gap note
    auto gap = invariance_audit(c, t, coupons, {presentations[0]}, InvariantVariant::Left, a_set);
    REQUIRE(gap.size() == 1);
    CHECK(gap[0].rfind("gap:", 0) == 0);
    CHECK_FALSE(has_violations(gap));
    // outside A the two cut orientations genuinely disagree for a one-sided
    // trace (dim_l(V1) != dim_l(V1*)), and the audit says so
    auto report = invariance_audit(c, t, coupons, presentations, InvariantVariant::Left, a_set);
    CHECK(has_violations(report));
    // the A-colored variant refuses V1-colored diagrams outright
    CHECK_THROWS_AS(invariant(c, t, coupons, presentations[0], InvariantVariant::AColored, a_set), InadmissibleError);
}

TEST_CASE("one-sided invariants require admissible sections") {
    Category& c = uq3_f7();
    auto sols = solve_ambidextrous(c, {W("St")}, AmbiMode::Left, {});
    REQUIRE(sols.size() == 1);
    ExtendedTrace t(c, sols[0], {W("St")});
    CouponTable coupons;
    Diagram good;
    good.name = "st-id";
    good.source = {{Factor{"St", 0}, +1}};
    good.target = good.source;
    good.rows = {{gen(Generator::Kind::Id, "St", +1)}};
    CHECK(invariant(c, t, coupons, good, InvariantVariant::Left, {W("St")}) == t.modified_dim(W("St")));
    Diagram bad = good;
    bad.name = "v2-id";
    bad.source = {{Factor{"V2", 0}, +1}};
    bad.target = bad.source;
    bad.rows = {{gen(Generator::Kind::Id, "V2", +1)}};
    CHECK_THROWS_AS(invariant(c, t, coupons, bad, InvariantVariant::Left, {}), InadmissibleError);
    // mismatched variant and trace side
    CHECK_THROWS_AS(invariant(c, t, coupons, good, InvariantVariant::Right, {}), InvariantError);
    // non-endomorphism presentations are rejected
    Diagram not_section = closed("closed", {{gen(Generator::Kind::Coev, "St")}, {gen(Generator::Kind::Tev, "St")}});
    CHECK_THROWS_AS(invariant(c, t, coupons, not_section, InvariantVariant::Left, {}), InvariantError);
}

TEST_CASE("trivalent pair check on B-colored theta graphs") {
    Category& c = z4_f5();
    const Field* f = c.field();
    ExtendedTrace t(c, usual_trace_family(c, Side::Left, {W("V0"), W("V1"), W("V2"), W("V3")}), {W("V0")});
    std::vector<Word> a_set = {W("V0"), W("V2")};
    std::vector<Word> b_set = a_set;
    std::map<std::string, FieldElement> d = {{"V0", t.modified_dim(W("V0"))}, {"V2", t.modified_dim(W("V2"))}};
    CouponTable coupons;
    auto vertex = [&](const std::string& name, bool up, std::vector<std::string> colors) {
        CouponDef cd;
        cd.name = name;
        Signature sig;
        for (const auto& col : colors) sig.push_back({Factor{col, 0}, +1});
        if (up) cd.target = sig; else cd.source = sig;
        cd.mat = Matrix::scalar(FieldElement::one(f));
        cd.has_matrix = true;
        coupons[name] = cd;
    };
    // theta graphs: Hom(1, V_a (x) V_b (x) V_c) is nonzero iff a+b+c = 0 mod 4
    vertex("up022", true, {"V0", "V2", "V2"});
    vertex("dn022", false, {"V0", "V2", "V2"});
    vertex("up000", true, {"V0", "V0", "V0"});
    vertex("dn000", false, {"V0", "V0", "V0"});
    TrivalentGraph g1{"theta-022", {}};
    Diagram d1 = closed("theta-022", {{coupon("up022")}, {coupon("dn022")}});
    g1.cuttings = all_cuttings(c, d1, coupons);
    REQUIRE(g1.cuttings.size() == 3);
    TrivalentGraph g2{"theta-000", {}};
    Diagram d2 = closed("theta-000", {{coupon("up000")}, {coupon("dn000")}});
    g2.cuttings = all_cuttings(c, d2, coupons);
    auto report = trivalent_pair_check(c, t, coupons, b_set, d, {g1, g2}, a_set);
    CHECK(report.empty());
    // an empty B is reported as vacuous, not as success
    auto vac = trivalent_pair_check(c, t, coupons, {}, d, {g1}, a_set);
    REQUIRE(vac.size() == 1);
    CHECK(vac[0].rfind("gap: vacuous", 0) == 0);
}

TEST_CASE("diagram colors are collected from strands and coupons") {
    CouponTable coupons = z2_coupons();
    Diagram d = z2_corpus()[0];
    auto cols = diagram_colors(d, coupons);
    REQUIRE(cols.size() == 1);
    CHECK(cols[0] == W("reg"));
}
