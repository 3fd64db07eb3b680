#pragma once

#include "pivotrace/diagram.hpp"
#include "pivotrace/modtrace.hpp"

namespace pivotrace {

/// Raised when a presentation fails the variant's admissibility condition.
struct InadmissibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class InvariantVariant { Left, Right, TwoSided, AColored };

/// Colors of a diagram: the object of every strand generator and every coupon
/// boundary entry, deduplicated, as single-factor words.
std::vector<Word> diagram_colors(const Diagram& d, const CouponTable& coupons);

/// The invariant t_{V^eps}(F(T)) of the closed graph presented by the 1-1
/// endomorphism diagram `pres` with section (V, eps) = its single boundary
/// entry. Admissibility per variant:
///   left/right  — the section object lies in the trace's ideal;
///   two-sided   — the cut edge's color lies in the ideal;
///   A-colored   — every color of the diagram lies in a_set.
/// Throws InadmissibleError naming the failing condition.
FieldElement invariant(const Category& c, const ExtendedTrace& t, const CouponTable& coupons, const Diagram& pres,
                       InvariantVariant variant, const std::vector<Word>& a_set = {});

/// Compares the invariant across the given presentations (asserted by the
/// caller to present the same closed graph), and against the rotation partner
/// rotate_dual(T) of each. Sections outside a_set produce "gap: outside A"
/// notes instead of rotation claims (one-sided/A variants). Empty report =
/// all equal.
std::vector<std::string> invariance_audit(const Category& c, const ExtendedTrace& t, const CouponTable& coupons,
                                          const std::vector<Diagram>& presentations, InvariantVariant variant,
                                          const std::vector<Word>& a_set = {});

/// A closed trivalent graph given by its cutting presentations.
struct TrivalentGraph {
    std::string name;
    std::vector<Diagram> cuttings;
};

/// For End-rank-1 colors: checks d(V) <T> equal across the cuttings of each
/// graph and equal to the A-colored invariant. b_set empty => "gap: vacuous"
/// note. Non-simple sections raise InvariantError.
std::vector<std::string> trivalent_pair_check(const Category& c, const ExtendedTrace& t, const CouponTable& coupons,
                                              const std::vector<Word>& b_set,
                                              const std::map<std::string, FieldElement>& d,
                                              const std::vector<TrivalentGraph>& graphs,
                                              const std::vector<Word>& a_set);

/// Signatures at every horizontal boundary of a diagram (size rows+1; entry 0
/// is the source).
std::vector<Signature> boundary_signatures(const Diagram& d, const CouponTable& coupons);

/// Cut points of a closed diagram: (boundary index b in 1..rows-1, strand
/// position p in 1..|sig_b|).
std::vector<std::pair<size_t, size_t>> cut_points(const Diagram& d, const CouponTable& coupons);

/// Cutting presentation of the closed diagram `d` obtained by opening the
/// strand at position `pos` of internal boundary `boundary`: rotates the rows
/// cyclically so that boundary becomes the horizontal cut, then closes every
/// other strand to the respective side.
Diagram cut(const Diagram& d, const CouponTable& coupons, size_t boundary, size_t pos);

}  // namespace pivotrace
