#include "pivotrace/trace.hpp"

namespace pivotrace {

namespace {

bool is_prefix(const Word& p, const Word& w) {
    if (p.size() > w.size()) return false;
    for (size_t i = 0; i < p.size(); ++i)
        if (!(p[i] == w[i])) return false;
    return true;
}

bool is_suffix(const Word& s, const Word& w) {
    if (s.size() > w.size()) return false;
    size_t off = w.size() - s.size();
    for (size_t i = 0; i < s.size(); ++i)
        if (!(s[i] == w[off + i])) return false;
    return true;
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

}  // namespace

Morphism partial_trace(const Category& c, const Morphism& f, const Word& x, Side side) {
    if (side == Side::Left) {
        if (!is_prefix(x, f.source) || !is_prefix(x, f.target))
            throw TraceError("partial_trace(left): " + word_str(x) + " is not a prefix of both " +
                             word_str(f.source) + " and " + word_str(f.target));
        Word y(f.source.begin() + long(x.size()), f.source.end());
        Word z(f.target.begin() + long(x.size()), f.target.end());
        return c.compose(c.tensor(c.ev(x), c.identity(z)),
                         c.compose(c.tensor(c.identity(dual_word(x)), f), c.tensor(c.tcoev(x), c.identity(y))));
    }
    if (side == Side::Right) {
        if (!is_suffix(x, f.source) || !is_suffix(x, f.target))
            throw TraceError("partial_trace(right): " + word_str(x) + " is not a suffix of both " +
                             word_str(f.source) + " and " + word_str(f.target));
        Word y(f.source.begin(), f.source.end() - long(x.size()));
        Word z(f.target.begin(), f.target.end() - long(x.size()));
        return c.compose(c.tensor(c.identity(z), c.tev(x)),
                         c.compose(c.tensor(f, c.identity(dual_word(x))), c.tensor(c.identity(y), c.coev(x))));
    }
    throw TraceError("partial_trace: side must be left or right");
}

FieldElement trace_endo(const Category& c, const Morphism& f, Side side) {
    if (f.source != f.target) throw TraceError("trace_endo: not an endomorphism");
    const Word& x = f.source;
    Morphism closed = side == Side::Right
                          ? c.compose(c.tev(x), c.compose(c.tensor(f, c.identity(dual_word(x))), c.coev(x)))
                          : c.compose(c.ev(x), c.compose(c.tensor(c.identity(dual_word(x)), f), c.tcoev(x)));
    return closed.mat.at(0, 0);
}

std::pair<FieldElement, FieldElement> dims(const Category& c, const Word& w) {
    Morphism id = c.identity(w);
    return {trace_endo(c, id, Side::Left), trace_endo(c, id, Side::Right)};
}

std::optional<size_t> TraceFamily::index_of(const Word& w) const {
    for (size_t i = 0; i < domain.size(); ++i)
        if (domain[i] == w) return i;
    return std::nullopt;
}

FieldElement TraceFamily::eval(const Category& c, const Morphism& endo) const {
    if (endo.source != endo.target) throw TraceError("TraceFamily::eval: not an endomorphism");
    auto idx = index_of(endo.source);
    if (!idx) throw TraceError("TraceFamily::eval: " + word_str(endo.source) + " is not in the domain");
    auto coords = c.hom_coords(endo);
    FieldElement out = FieldElement::zero(c.field());
    for (size_t k = 0; k < coords.size(); ++k) out += coeffs[*idx][k] * coords[k];
    return out;
}

TraceFamily usual_trace_family(const Category& c, Side side, const std::vector<Word>& domain) {
    TraceFamily t;
    t.side = side;
    t.domain = domain;
    for (const Word& v : domain) {
        std::vector<FieldElement> row;
        for (const Morphism& b : c.hom_basis(v, v))
            row.push_back(trace_endo(c, b, side == Side::Right ? Side::Right : Side::Left));
        t.coeffs.push_back(std::move(row));
    }
    return t;
}

TraceFamily bracket_family(const Category& c, const Word& obj, Side side) {
    if (!c.is_simple(obj)) throw TraceError("bracket seed requires an End-rank-1 object");
    const Morphism& b = c.hom_basis(obj, obj)[0];
    TraceFamily t;
    t.side = side;
    t.domain = {obj};
    t.coeffs = {{b.mat.at(0, 0)}};  // b = mu * Id, and <b> = mu
    return t;
}

bool has_violations(const std::vector<std::string>& report) {
    for (const auto& e : report)
        if (e.rfind("gap:", 0) != 0) return true;
    return false;
}

std::vector<std::string> check_trace_axioms(const Category& c, const TraceFamily& t, const std::vector<Word>& probes) {
    std::vector<std::string> report;
    // cyclicity on all domain pairs
    for (const Word& u : t.domain)
        for (const Word& v : t.domain) {
            const auto& gb = c.hom_basis(u, v);
            const auto& hb = c.hom_basis(v, u);
            for (const Morphism& g : gb)
                for (const Morphism& h : hb) {
                    if (t.eval(c, c.compose(g, h)) != t.eval(c, c.compose(h, g)))
                        report.push_back("cyclicity fails for a basis pair in Hom(" + word_str(u) + "," + word_str(v) +
                                         ")");
                }
        }
    // partial-trace axiom against probes
    for (const Word& x : t.domain)
        for (const Word& y : probes) {
            if (t.side == Side::Left || t.side == Side::TwoSided) {
                Word w = concat(y, x);
                if (t.index_of(w)) {
                    for (const Morphism& f : c.hom_basis(w, w))
                        if (t.eval(c, f) != t.eval(c, partial_trace(c, f, y, Side::Left)))
                            report.push_back("left partial-trace axiom fails on End(" + word_str(w) + ") over " +
                                             word_str(x));
                } else {
                    report.push_back("gap: " + word_str(w) + " not in domain; left axiom unchecked");
                }
            }
            if (t.side == Side::Right || t.side == Side::TwoSided) {
                Word w = concat(x, y);
                if (t.index_of(w)) {
                    for (const Morphism& f : c.hom_basis(w, w))
                        if (t.eval(c, f) != t.eval(c, partial_trace(c, f, y, Side::Right)))
                            report.push_back("right partial-trace axiom fails on End(" + word_str(w) + ") over " +
                                             word_str(x));
                } else {
                    report.push_back("gap: " + word_str(w) + " not in domain; right axiom unchecked");
                }
            }
        }
    return report;
}

namespace {

// One instance of an ambidexterity equation: t_{lhs_obj}(lhs_arg) = t_{rhs_obj}(rhs_arg).
struct AmbiEquation {
    Word lhs_obj, rhs_obj;
    Morphism lhs_arg, rhs_arg;
    std::string what;
};

// phi_X^{-1} h^* phi_X for h in End(X^*), landing in End(X).
Morphism conj_by_pivot(const Category& c, const Word& x, const Morphism& h) {
    return c.compose(c.pivot_iso_inv(x), c.compose(c.dual_mor(h), c.pivot_iso(x)));
}

std::vector<AmbiEquation> ambi_equations(const Category& c, const std::vector<Word>& o, AmbiMode mode,
                                         const std::vector<Word>& middles) {
    std::vector<AmbiEquation> eqs;
    std::vector<Word> mids = {{}};  // always include the unit
    for (const Word& y : middles)
        if (!y.empty()) mids.push_back(y);
    for (const Word& x : o)
        for (const Word& xp : o) {
            Word xs = dual_word(x);
            if (mode == AmbiMode::Left) {
                Word w = concat(xp, xs);
                for (const Morphism& f : c.hom_basis(w, w))
                    eqs.push_back({x, xp, conj_by_pivot(c, x, partial_trace(c, f, xp, Side::Left)),
                                   partial_trace(c, f, xs, Side::Right),
                                   "left equation on End(" + word_str(w) + ")"});
            } else if (mode == AmbiMode::Right) {
                Word w = concat(xs, xp);
                for (const Morphism& g : c.hom_basis(w, w))
                    eqs.push_back({x, xp, conj_by_pivot(c, x, partial_trace(c, g, xp, Side::Right)),
                                   partial_trace(c, g, xs, Side::Left),
                                   "right equation on End(" + word_str(w) + ")"});
            } else {
                for (const Word& y : mids) {
                    Word w1 = concat(xp, concat(y, xs));
                    for (const Morphism& f : c.hom_basis(w1, w1))
                        eqs.push_back({x, xp, conj_by_pivot(c, x, partial_trace(c, f, concat(xp, y), Side::Left)),
                                       partial_trace(c, f, concat(y, xs), Side::Right),
                                       "spherical equation (i) on End(" + word_str(w1) + ")"});
                    Word w2 = concat(xs, concat(y, xp));
                    for (const Morphism& g : c.hom_basis(w2, w2))
                        eqs.push_back({x, xp, conj_by_pivot(c, x, partial_trace(c, g, concat(y, xp), Side::Right)),
                                       partial_trace(c, g, concat(xs, y), Side::Left),
                                       "spherical equation (ii) on End(" + word_str(w2) + ")"});
                }
            }
        }
    return eqs;
}

}  // namespace

std::vector<std::string> check_ambidextrous(const Category& c, const TraceFamily& t, const std::vector<Word>& o,
                                            AmbiMode mode, const std::vector<Word>& middles) {
    std::vector<std::string> report;
    for (const AmbiEquation& eq : ambi_equations(c, o, mode, middles)) {
        if (t.eval(c, eq.lhs_arg) != t.eval(c, eq.rhs_arg)) report.push_back(eq.what + " fails");
    }
    return report;
}

std::vector<TraceFamily> solve_ambidextrous(const Category& c, const std::vector<Word>& o, AmbiMode mode,
                                            const std::vector<Word>& middles) {
    // unknowns: for each X in O, the values of t_X on hom_basis(X,X)
    std::vector<size_t> offset;
    size_t total = 0;
    for (const Word& x : o) {
        offset.push_back(total);
        total += c.hom_basis(x, x).size();
    }
    auto eqs = ambi_equations(c, o, mode, middles);
    Matrix a(c.field(), eqs.size(), total);
    for (size_t r = 0; r < eqs.size(); ++r) {
        const AmbiEquation& eq = eqs[r];
        auto put = [&](const Word& obj, const Morphism& arg, bool plus) {
            size_t idx = 0;
            while (!(o[idx] == obj)) ++idx;
            auto coords = c.hom_coords(arg);
            for (size_t k = 0; k < coords.size(); ++k) {
                if (plus)
                    a.at(r, offset[idx] + k) += coords[k];
                else
                    a.at(r, offset[idx] + k) -= coords[k];
            }
        };
        put(eq.lhs_obj, eq.lhs_arg, true);
        put(eq.rhs_obj, eq.rhs_arg, false);
    }
    std::vector<TraceFamily> out;
    for (const Matrix& v : kernel_basis(a)) {
        TraceFamily t;
        t.side = mode == AmbiMode::Left ? Side::Left : (mode == AmbiMode::Right ? Side::Right : Side::TwoSided);
        t.domain = o;
        for (size_t i = 0; i < o.size(); ++i) {
            size_t len = c.hom_basis(o[i], o[i]).size();
            std::vector<FieldElement> row;
            for (size_t k = 0; k < len; ++k) row.push_back(v.at(offset[i] + k, 0));
            t.coeffs.push_back(std::move(row));
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace pivotrace
