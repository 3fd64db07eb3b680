#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace pivotrace;
using namespace testutil;

namespace {

}  // namespace

TEST_CASE("diagram file parsing") {
    Category& c = sweedler();
    std::string text =
        "use sweedler\n"
        "coupon f : [P++] -> [P++]\n"
        "matrix f = ( 2 0 ; 0 2 )\n"
        "# a zig-zag\n"
        "diagram Z : [P++] -> [P++] {\n"
        "  row coev P+ , id P++ ;\n"
        "  row id P++ , ev P+ ;\n"
        "}\n"
        "diagram C : [P++] -> [P++] {\n"
        "  row coupon f ;\n"
        "}\n";
    DiagramFile file = parse_diagram_file(text, c.field());
    CHECK(file.category == "sweedler");
    REQUIRE(file.coupons.count("f") == 1);
    CHECK(file.coupons.at("f").mat.at(0, 0) == FieldElement::from_long(c.field(), 2));
    REQUIRE(file.diagrams.size() == 2);
    const Diagram* z = file.find("Z");
    REQUIRE(z != nullptr);
    CHECK(z->rows.size() == 2);
    CHECK(z->source.size() == 1);
    CHECK(z->source[0].eps == 1);
    // the zig-zag evaluates to the identity, the coupon to 2*Id
    CHECK(evaluate(c, *z, file.coupons).mat.is_identity());
    CHECK(evaluate(c, *file.find("C"), file.coupons).mat ==
          Matrix::identity(c.field(), 2) * FieldElement::from_long(c.field(), 2));
}

TEST_CASE("parse errors are reported with positions") {
    Category& c = sweedler();
    CHECK_THROWS_WITH_AS(parse_diagram_file("diagram X : [P] -> [] { }", c.field()),
                         doctest::Contains("signature entry"), DiagramError);
    CHECK_THROWS_AS(parse_diagram_file("coupon : [] -> []", c.field()), DiagramError);
    CHECK_THROWS_AS(parse_diagram_file("diagram D : [P++] -> [P++] { row flip P+ ; }", c.field()), DiagramError);
    CHECK_THROWS_AS(parse_diagram_file("matrix g = ( 1 )", c.field()), DiagramError);
}

TEST_CASE("typecheck names the offending row") {
    Category& c = sweedler();
    std::string text =
        "use sweedler\n"
        "diagram B : [P++] -> [P++] {\n"
        "  row id P+- ;\n"
        "}\n";
    DiagramFile file = parse_diagram_file(text, c.field());
    CHECK_THROWS_WITH_AS(typecheck(c, *file.find("B"), file.coupons), doctest::Contains("row 1"), DiagramError);
}

TEST_CASE("evaluation is functorial under vertical stacking") {
    std::mt19937 rng(23);
    Category& c = sweedler();
    CouponTable none;
    int built = 0;
    while (built < 20) {
        Signature src;
        size_t n = rng() % 3;
        for (size_t i = 0; i < n; ++i) src.push_back(random_entry(c, rng));
        Diagram a = random_diagram(c, src, 1 + rng() % 2, rng);
        Diagram b = random_diagram(c, a.target, 1 + rng() % 2, rng);
        Diagram s = stack(a, b);
        typecheck(c, s, none);
        Morphism fa = evaluate(c, a, none);
        Morphism fb = evaluate(c, b, none);
        CHECK(evaluate(c, s, none).mat == (fb.mat * fa.mat));
        ++built;
    }
}

TEST_CASE("evaluation is monoidal under horizontal juxtaposition") {
    std::mt19937 rng(29);
    Category& c = sweedler();
    CouponTable none;
    for (int t = 0; t < 20; ++t) {
        Signature sa, sb;
        for (size_t i = 0; i < rng() % 3; ++i) sa.push_back(random_entry(c, rng));
        for (size_t i = 0; i < 1 + rng() % 2; ++i) sb.push_back(random_entry(c, rng));
        Diagram a = random_diagram(c, sa, 1 + rng() % 3, rng);
        Diagram b = random_diagram(c, sb, 1 + rng() % 2, rng);
        Diagram s = beside(a, b);
        typecheck(c, s, none);
        CHECK(evaluate(c, s, none).mat == kron(evaluate(c, a, none).mat, evaluate(c, b, none).mat));
    }
}

TEST_CASE("closure of a 1-1 diagram computes the categorical trace") {
    std::mt19937 rng(31);
    Category& c = sweedler();
    for (int t = 0; t < 10; ++t) {
        SigEntry e = random_entry(c, rng);
        Word w = sig_word({e});
        CouponTable coupons;
        CouponDef f;
        f.name = "f";
        f.source = {e};
        f.target = {e};
        f.mat = random_matrix(c.field(), c.dim(w), c.dim(w), rng);
        f.has_matrix = true;
        coupons["f"] = f;
        Diagram d;
        d.name = "T";
        d.source = {e};
        d.target = {e};
        Generator g;
        g.kind = Generator::Kind::Coupon;
        g.coupon = "f";
        d.rows.push_back({g});
        Morphism fm = evaluate(c, d, coupons);
        for (Side side : {Side::Left, Side::Right}) {
            Morphism closed = evaluate(c, close(d, side), coupons);
            CHECK(closed.mat.at(0, 0) == trace_endo(c, fm, side));
        }
    }
}

TEST_CASE("partial closure computes the partial trace strand by strand") {
    std::mt19937 rng(37);
    Category& c = sweedler();
    for (int t = 0; t < 8; ++t) {
        Signature sig = {random_entry(c, rng), random_entry(c, rng)};
        Word w = sig_word(sig);
        CouponTable coupons;
        CouponDef f;
        f.name = "f";
        f.source = sig;
        f.target = sig;
        f.mat = random_matrix(c.field(), c.dim(w), c.dim(w), rng);
        f.has_matrix = true;
        coupons["f"] = f;
        Diagram d;
        d.name = "T";
        d.source = sig;
        d.target = sig;
        Generator g;
        g.kind = Generator::Kind::Coupon;
        g.coupon = "f";
        d.rows.push_back({g});
        Morphism fm = evaluate(c, d, coupons);
        Word left_word = sig_word({sig[0]});
        Word right_word = sig_word({sig[1]});
        CHECK(evaluate(c, partial_close(d, 1, Side::Left), coupons).mat ==
              partial_trace(c, fm, left_word, Side::Left).mat);
        CHECK(evaluate(c, partial_close(d, 1, Side::Right), coupons).mat ==
              partial_trace(c, fm, right_word, Side::Right).mat);
        // closing both strands one by one equals the full trace
        Morphism full = evaluate(c, partial_close(d, 2, Side::Left), coupons);
        CHECK(full.mat.at(0, 0) == trace_endo(c, fm, Side::Left));
    }
}

TEST_CASE("rotation satisfies the duality identity with the psi isomorphisms") {
    std::mt19937 rng(41);
    Category& c = sweedler();
    CouponTable none;
    for (int t = 0; t < 12; ++t) {
        Signature src;
        for (size_t i = 0; i < 1 + rng() % 2; ++i) src.push_back(random_entry(c, rng));
        Diagram d = random_diagram(c, src, 1 + rng() % 2, rng);
        Diagram rot = rotate_dual(d);
        typecheck(c, rot, none);
        Morphism lhs = evaluate(c, rot, none);
        // rhs = (tensor of psi^-1 over reversed source) o F(d)* o (tensor of psi over reversed target)
        Morphism pre = c.identity({});
        for (auto it = d.target.rbegin(); it != d.target.rend(); ++it) pre = c.tensor(pre, psi_iso(c, *it));
        Morphism post = c.identity({});
        for (auto it = d.source.rbegin(); it != d.source.rend(); ++it) {
            Morphism psi = psi_iso(c, *it);
            auto inv = solve_linear(psi.mat, Matrix::identity(c.field(), psi.mat.rows()));
            REQUIRE(inv.has_value());
            post = c.tensor(post, Morphism(psi.target, psi.source, inv->particular));
        }
        Morphism dual = c.dual_mor(evaluate(c, d, none));
        CHECK(lhs.mat == (post.mat * dual.mat * pre.mat));
        CHECK(rot.source == dual_signature(d.target));
        CHECK(rot.target == dual_signature(d.source));
    }
}

TEST_CASE("psi isomorphisms") {
    Category& c = sweedler();
    SigEntry plus{Factor{"P+", 0}, +1};
    SigEntry minus{Factor{"P+", 0}, -1};
    CHECK(psi_iso(c, plus).mat.is_identity());
    CHECK(psi_iso(c, minus).mat == c.pivot_iso(W("P+")).mat);
}
