#pragma once

#include "pivotrace/category.hpp"

#include <map>

namespace pivotrace {

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One boundary strand: an object together with an orientation sign.
/// F maps (X,+) to X and (X,-) to X*.
struct SigEntry {
    Factor obj;
    int eps = +1;
    bool operator==(const SigEntry& o) const { return obj == o.obj && eps == o.eps; }
};
using Signature = std::vector<SigEntry>;

std::string sig_str(const Signature& s);
/// Reversed signature with negated signs (the boundary of the rotated diagram).
Signature dual_signature(const Signature& s);
/// The object of C underlying a signature.
Word sig_word(const Signature& s);

struct Generator {
    enum class Kind { Id, Ev, Coev, Tev, Tcoev, Coupon } kind = Kind::Id;
    Factor obj;           // for strand generators
    int eps = +1;         // for Id
    std::string coupon;   // for Coupon
};

struct CouponDef {
    std::string name;
    Signature source, target;
    Matrix mat;
    bool has_matrix = false;
};
using CouponTable = std::map<std::string, CouponDef>;

/// A sliced diagram: rows of horizontally juxtaposed generators, bottom row
/// first. Well-formedness (row-by-row signature compatibility) is checked by
/// typecheck/evaluate.
struct Diagram {
    std::string name;
    Signature source, target;
    std::vector<std::vector<Generator>> rows;
};

/// Parsed diagram file: category reference, coupon table, named diagrams.
struct DiagramFile {
    std::string category;
    CouponTable coupons;
    std::vector<Diagram> diagrams;

    const Diagram* find(const std::string& name) const;
};

/// Parses the diagram DSL; matrix entries are read as literals of the field f.
DiagramFile parse_diagram_file(const std::string& text, const Field* f);

/// Source/target signatures of a single generator.
std::pair<Signature, Signature> generator_signature(const Generator& g, const CouponTable& coupons);

/// Checks row-by-row signature compatibility; throws DiagramError naming the
/// offending row on mismatch.
void typecheck(const Category& c, const Diagram& d, const CouponTable& coupons);

/// The evaluation functor F.
Morphism evaluate(const Category& c, const Diagram& d, const CouponTable& coupons);

/// The rotation by pi: T* with source = dual_signature(target) and
/// target = dual_signature(source).
Diagram rotate_dual(const Diagram& t);

/// Closes the k leftmost (resp. rightmost) strands of an endomorphism diagram.
Diagram partial_close(const Diagram& t, size_t k, Side side);

/// Full closure of a 1-1 diagram; evaluates to tr_side(F(T)).
Diagram close(const Diagram& t, Side side);

/// The isomorphism psi_{(V,eps)}: V^{-eps} -> (V^eps)^*;
/// psi_{(V,-)} = phi_V and psi_{(V,+)} = Id_{V*}.
Morphism psi_iso(const Category& c, const SigEntry& e);

}  // namespace pivotrace
