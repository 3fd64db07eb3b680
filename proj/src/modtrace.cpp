#include "pivotrace/modtrace.hpp"

namespace pivotrace {

namespace {

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

}  // namespace

ExtendedTrace::ExtendedTrace(const Category& c, TraceFamily seed, std::vector<Word> generators,
                             std::vector<Word> probes)
    : c_(&c), seed_(std::move(seed)), gens_(std::move(generators)), probes_(std::move(probes)) {
    for (const Word& x : gens_)
        if (!seed_.index_of(x)) throw ModTraceError("seed family does not cover generator " + word_str(x));
}

bool ExtendedTrace::admissible(const Word& u) const {
    if (seed_.index_of(u)) return true;
    try {
        witness(u);
        return true;
    } catch (const ModTraceError&) {
        return false;
    }
}

const Witness& ExtendedTrace::witness(const Word& u) const {
    std::string key = word_str(u);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto w = membership(*c_, u, gens_, seed_.side, probes_);
    if (!w) {
        std::string msg = "not admissible: no membership witness for " + word_str(u);
        if (seed_.side == Side::TwoSided) msg += " at current probes";
        throw ModTraceError(msg);
    }
    return cache_.emplace(key, std::move(*w)).first->second;
}

FieldElement ExtendedTrace::eval_via(const Witness& w, const Morphism& endo) const {
    if (endo.source != endo.target || !(endo.source == w.u))
        throw ModTraceError("eval_via: morphism is not an endomorphism of the witnessed object");
    RetractData r = retract_from_witness(*c_, w);
    Morphism h = c_->compose(r.q, c_->compose(endo, r.p));  // q a p in End(ambient)
    if (w.side == Side::Left) {
        Word y = concat(w.u, dual_word(w.generator));
        return seed_.eval(*c_, partial_trace(*c_, h, y, Side::Left));
    }
    if (w.side == Side::Right) {
        Word z = concat(dual_word(w.generator), w.u);
        return seed_.eval(*c_, partial_trace(*c_, h, z, Side::Right));
    }
    Word g = concat(w.generator, w.probe);
    Word y = concat(w.u, dual_word(g));
    Morphism inner = partial_trace(*c_, h, w.probe, Side::Right);
    return seed_.eval(*c_, partial_trace(*c_, inner, y, Side::Left));
}

FieldElement ExtendedTrace::eval(const Morphism& endo) const {
    if (endo.source != endo.target) throw ModTraceError("eval: not an endomorphism");
    if (seed_.index_of(endo.source)) return seed_.eval(*c_, endo);
    return eval_via(witness(endo.source), endo);
}

FieldElement ExtendedTrace::modified_dim(const Word& v) const { return eval(c_->identity(v)); }

FieldElement ExtendedTrace::dual_eval(const Morphism& endo) const {
    if (endo.source != endo.target) throw ModTraceError("dual_eval: not an endomorphism");
    return eval(c_->dual_mor(endo));
}

TraceFamily ExtendedTrace::snapshot(const std::vector<Word>& domain) const {
    TraceFamily t;
    t.side = seed_.side;
    t.domain = domain;
    for (const Word& v : domain) {
        std::vector<FieldElement> row;
        for (const Morphism& b : c_->hom_basis(v, v)) row.push_back(eval(b));
        t.coeffs.push_back(std::move(row));
    }
    return t;
}

std::vector<std::string> ExtendedTrace::well_definedness_audit(const Word& u, size_t max_kernel_shifts) const {
    // collect presentations: one witness per generator (and probe), plus
    // kernel-shifted variants of each
    std::vector<std::pair<std::string, Witness>> pres;
    std::vector<Word> zs = {{}};
    if (seed_.side == Side::TwoSided)
        for (const Word& z : probes_)
            if (!z.empty()) zs.push_back(z);
    for (const Word& x : gens_) {
        for (const Word& z : zs) {
            auto w = membership(*c_, u, {x}, seed_.side, seed_.side == Side::TwoSided ? std::vector<Word>{z} : std::vector<Word>{});
            if (seed_.side == Side::TwoSided && w && !(w->probe == z)) continue;  // only the requested probe
            if (!w) continue;
            std::string label = "generator " + word_str(x);
            if (seed_.side == Side::TwoSided) label += " probe " + word_str(z);
            pres.emplace_back(label, *w);
            size_t shifts = std::min(max_kernel_shifts, w->kernel.size());
            for (size_t k = 0; k < shifts; ++k) {
                Witness ws = *w;
                ws.f = Morphism(ws.f.source, ws.f.target, ws.f.mat + w->kernel[k].mat);
                pres.emplace_back(label + " shifted by kernel element " + std::to_string(k + 1), std::move(ws));
            }
            if (seed_.side != Side::TwoSided) break;  // zs only matters two-sided
        }
    }
    if (seed_.index_of(u)) pres.emplace_back("seed restriction", Witness{});  // sentinel for the direct seed value
    std::vector<std::string> report;
    if (pres.size() < 2) {
        report.push_back("audit skipped: only " + std::to_string(pres.size()) + " presentation(s) of " + word_str(u));
        return report;
    }
    const auto& basis = c_->hom_basis(u, u);
    for (size_t bi = 0; bi < basis.size(); ++bi) {
        std::optional<FieldElement> ref;
        std::string ref_label;
        for (const auto& [label, w] : pres) {
            FieldElement val = label == "seed restriction" ? seed_.eval(*c_, basis[bi]) : eval_via(w, basis[bi]);
            if (!ref) {
                ref = val;
                ref_label = label;
            } else if (val != *ref) {
                report.push_back("disagreement on End(" + word_str(u) + ") basis element " + std::to_string(bi) +
                                 ": " + ref_label + " gives " + ref->str() + ", " + label + " gives " + val.str());
            }
        }
    }
    return report;
}

std::vector<Word> ExtendedTrace::compute_A(const std::vector<Word>& candidates) const {
    std::vector<Word> out;
    for (const Word& v : candidates) {
        if (!admissible(v) || !admissible(dual_word(v))) continue;
        bool ok = true;
        for (const Morphism& b : c_->hom_basis(v, v))
            if (eval(b) != dual_eval(b)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(v);
    }
    return out;
}

ExtendedTrace::SlopeReport ExtendedTrace::slope_table(const std::vector<Word>& a_objects,
                                                      const std::vector<RetractTriple>& triples) const {
    SlopeReport rep;
    auto slope_of = [&](const Word& v) -> std::optional<FieldElement> {
        FieldElement d = modified_dim(v);
        FieldElement dd = modified_dim(dual_word(v));
        if (d.is_zero() || dd.is_zero()) return std::nullopt;
        return d * dd.inverse();
    };
    for (const Word& v : a_objects) {
        FieldElement d = modified_dim(v);
        FieldElement dd = modified_dim(dual_word(v));
        if (d.is_zero() || dd.is_zero()) {
            rep.notes.push_back("entry " + word_str(v) +
                                " rejected: zero modified dimension (nonzero requires a simple object with epi "
                                "evaluation; got d=" +
                                d.str() + ", d*=" + dd.str() + ")");
            continue;
        }
        FieldElement s = d * dd.inverse();
        rep.table.push_back({v, d, dd, s});
        // s(V*) = s(V)^{-1}
        if (auto sd = slope_of(dual_word(v))) {
            if (*sd * s != FieldElement::one(c_->field()))
                rep.notes.push_back("property (a) fails on " + word_str(v) + ": s(V)s(V*) != 1");
        } else {
            rep.notes.push_back("property (a) unverifiable on " + word_str(v) + ": zero dimension at the dual");
        }
        // t = tv on End(V) iff s(V) = 1
        bool self_dual = true;
        for (const Morphism& b : c_->hom_basis(v, v))
            if (eval(b) != dual_eval(b)) {
                self_dual = false;
                break;
            }
        if (self_dual != (s == FieldElement::one(c_->field())))
            rep.notes.push_back("property (c) fails on " + word_str(v) + ": tv = t is " +
                                (self_dual ? "true" : "false") + " but s = " + s.str());
    }
    for (const auto& tr : triples) {
        auto su = slope_of(tr.u), sv = slope_of(tr.v), sw = slope_of(tr.w);
        if (!su || !sv || !sw) {
            rep.notes.push_back("retract triple (" + word_str(tr.u) + " <= " + word_str(tr.v) + " (x) " +
                                word_str(tr.w) + ") unverifiable: zero dimension");
            continue;
        }
        if (*su != *sv * *sw)
            rep.notes.push_back("property (b) fails on retract triple (" + word_str(tr.u) + " <= " + word_str(tr.v) +
                                " (x) " + word_str(tr.w) + ")");
    }
    return rep;
}

}  // namespace pivotrace
