#include "pivotrace/invariants.hpp"

#include <algorithm>

namespace pivotrace {

namespace {

bool contains_word(const std::vector<Word>& set, const Word& w) {
    for (const Word& v : set)
        if (v == w || dual_word(v) == w) return true;
    return false;
}

void require_section(const Diagram& pres) {
    if (pres.source.size() != 1 || !(pres.source == pres.target))
        throw InvariantError("presentation '" + pres.name + "' is not a 1-1 endomorphism diagram");
}

}  // namespace

std::vector<Word> diagram_colors(const Diagram& d, const CouponTable& coupons) {
    std::vector<Word> out;
    auto add = [&](const Factor& f) {
        Word w = {f};
        for (const Word& v : out)
            if (v == w) return;
        out.push_back(w);
    };
    for (const auto& e : d.source) add(e.obj);
    for (const auto& e : d.target) add(e.obj);
    for (const auto& row : d.rows)
        for (const Generator& g : row) {
            if (g.kind == Generator::Kind::Coupon) {
                const CouponDef& cd = coupons.at(g.coupon);
                for (const auto& e : cd.source) add(e.obj);
                for (const auto& e : cd.target) add(e.obj);
            } else {
                add(g.obj);
            }
        }
    return out;
}

FieldElement invariant(const Category& c, const ExtendedTrace& t, const CouponTable& coupons, const Diagram& pres,
                       InvariantVariant variant, const std::vector<Word>& a_set) {
    require_section(pres);
    const SigEntry& section = pres.source[0];
    Word section_word = sig_word(pres.source);
    switch (variant) {
        case InvariantVariant::Left:
        case InvariantVariant::Right: {
            Side want = variant == InvariantVariant::Left ? Side::Left : Side::Right;
            if (t.side() != want) throw InvariantError("variant does not match the trace's side");
            if (!t.admissible(section_word))
                throw InadmissibleError("section object " + word_str(section_word) + " is not in the trace's ideal");
            break;
        }
        case InvariantVariant::TwoSided: {
            if (t.side() != Side::TwoSided) throw InvariantError("variant does not match the trace's side");
            if (!t.admissible({section.obj}))
                throw InadmissibleError("cut edge color " + word_str({section.obj}) + " is not in the ideal");
            break;
        }
        case InvariantVariant::AColored: {
            for (const Word& col : diagram_colors(pres, coupons))
                if (!contains_word(a_set, col))
                    throw InadmissibleError("color " + word_str(col) + " is not in A");
            break;
        }
    }
    return t.eval(evaluate(c, pres, coupons));
}

std::vector<std::string> invariance_audit(const Category& c, const ExtendedTrace& t, const CouponTable& coupons,
                                          const std::vector<Diagram>& presentations, InvariantVariant variant,
                                          const std::vector<Word>& a_set) {
    std::vector<std::string> report;
    std::optional<FieldElement> ref;
    std::string ref_name;
    for (const Diagram& pres : presentations) {
        FieldElement val = invariant(c, t, coupons, pres, variant, a_set);
        if (!ref) {
            ref = val;
            ref_name = pres.name;
        } else if (val != *ref) {
            report.push_back("presentations '" + ref_name + "' and '" + pres.name + "' disagree: " + ref->str() +
                             " vs " + val.str());
        }
        // rotation partner t_{V^{-eps}}(F(T*))
        bool claim_rotation = true;
        if (variant == InvariantVariant::AColored || variant == InvariantVariant::Left ||
            variant == InvariantVariant::Right) {
            Word color = {pres.source[0].obj};
            if (!contains_word(a_set, color)) {
                report.push_back("gap: outside A — no claim for rotation of '" + pres.name + "' (section color " +
                                 word_str(color) + ")");
                claim_rotation = false;
            }
        }
        if (claim_rotation) {
            Diagram rot = rotate_dual(pres);
            FieldElement rval = t.eval(evaluate(c, rot, coupons));
            if (rval != val)
                report.push_back("rotation partner of '" + pres.name + "' disagrees: " + val.str() + " vs " +
                                 rval.str());
        }
    }
    return report;
}

std::vector<std::string> trivalent_pair_check(const Category& c, const ExtendedTrace& t, const CouponTable& coupons,
                                              const std::vector<Word>& b_set,
                                              const std::map<std::string, FieldElement>& d,
                                              const std::vector<TrivalentGraph>& graphs,
                                              const std::vector<Word>& a_set) {
    std::vector<std::string> report;
    if (b_set.empty()) {
        report.push_back("gap: vacuous — B is empty for this fixture");
        return report;
    }
    for (const TrivalentGraph& g : graphs) {
        std::optional<FieldElement> ref;
        std::string ref_name;
        for (const Diagram& cutting : g.cuttings) {
            require_section(cutting);
            Word w = sig_word(cutting.source);
            if (!c.is_simple(w))
                throw InvariantError("graph '" + g.name + "': section " + word_str(w) + " is not End-rank-1");
            Word color = {cutting.source[0].obj};
            auto it = d.find(word_str(color));
            if (it == d.end()) {
                report.push_back("graph '" + g.name + "': no d-value for color " + word_str(color));
                continue;
            }
            FieldElement val = it->second * c.bracket(evaluate(c, cutting, coupons));
            if (!ref) {
                ref = val;
                ref_name = cutting.name;
            } else if (val != *ref) {
                report.push_back("graph '" + g.name + "': cuttings '" + ref_name + "' and '" + cutting.name +
                                 "' give " + ref->str() + " vs " + val.str());
            }
            FieldElement fa = invariant(c, t, coupons, cutting, InvariantVariant::AColored, a_set);
            if (fa != val)
                report.push_back("graph '" + g.name + "': d(V)<T> = " + val.str() +
                                 " differs from the A-colored invariant " + fa.str() + " at cutting '" +
                                 cutting.name + "'");
        }
    }
    return report;
}

std::vector<Signature> boundary_signatures(const Diagram& d, const CouponTable& coupons) {
    std::vector<Signature> sigs;
    sigs.push_back(d.source);
    for (const auto& row : d.rows) {
        Signature s;
        for (const Generator& g : row) {
            auto [src, tgt] = generator_signature(g, coupons);
            (void)src;
            s.insert(s.end(), tgt.begin(), tgt.end());
        }
        sigs.push_back(std::move(s));
    }
    return sigs;
}

std::vector<std::pair<size_t, size_t>> cut_points(const Diagram& d, const CouponTable& coupons) {
    if (!d.source.empty() || !d.target.empty()) throw InvariantError("cut_points: diagram is not closed");
    std::vector<std::pair<size_t, size_t>> out;
    auto sigs = boundary_signatures(d, coupons);
    for (size_t b = 1; b + 1 < sigs.size(); ++b)
        for (size_t p = 1; p <= sigs[b].size(); ++p) out.emplace_back(b, p);
    return out;
}

Diagram cut(const Diagram& d, const CouponTable& coupons, size_t boundary, size_t pos) {
    if (!d.source.empty() || !d.target.empty()) throw InvariantError("cut: diagram is not closed");
    auto sigs = boundary_signatures(d, coupons);
    if (boundary == 0 || boundary >= d.rows.size()) throw InvariantError("cut: boundary index out of range");
    const Signature& sig = sigs[boundary];
    if (pos == 0 || pos > sig.size()) throw InvariantError("cut: strand position out of range");
    // cyclic rotation: rows above the boundary first, then the rows below
    Diagram rot;
    rot.name = d.name + "@b" + std::to_string(boundary) + "p" + std::to_string(pos);
    rot.source = sig;
    rot.target = sig;
    for (size_t r = boundary; r < d.rows.size(); ++r) rot.rows.push_back(d.rows[r]);
    for (size_t r = 0; r < boundary; ++r) rot.rows.push_back(d.rows[r]);
    // close everything except strand `pos`
    Diagram closed_right = partial_close(rot, sig.size() - pos, Side::Right);
    Diagram open = partial_close(closed_right, pos - 1, Side::Left);
    open.name = rot.name;
    return open;
}

}  // namespace pivotrace
