#pragma once

#include "pivotrace/ideal.hpp"

namespace pivotrace {

struct ModTraceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The unique extension of an ambidextrous seed family on the generators O to
/// the ideal they generate. Values are computed through cached retract
/// presentations obtained from membership witnesses (first witness in
/// generator order, deterministic).
class ExtendedTrace {
  public:
    ExtendedTrace(const Category& c, TraceFamily seed, std::vector<Word> generators, std::vector<Word> probes = {});

    const Category& category() const { return *c_; }
    Side side() const { return seed_.side; }
    const TraceFamily& seed() const { return seed_; }
    const std::vector<Word>& generators() const { return gens_; }

    bool admissible(const Word& u) const;
    /// Cached first witness; throws ModTraceError("not admissible ...") when
    /// the membership search fails.
    const Witness& witness(const Word& u) const;

    /// t_U(endo) through the cached presentation (seed value when U is in the
    /// seed domain).
    FieldElement eval(const Morphism& endo) const;
    /// t_U(endo) through an explicit presentation.
    FieldElement eval_via(const Witness& w, const Morphism& endo) const;

    /// d(V) = t_V(Id_V).
    FieldElement modified_dim(const Word& v) const;
    /// t-dual value: tv_V(f) = t_{V*}(f*); admissible when V* is.
    FieldElement dual_eval(const Morphism& endo) const;

    /// The extension restricted to a finite domain, as a plain TraceFamily.
    TraceFamily snapshot(const std::vector<Word>& domain) const;

    /// Evaluates t_U over a basis of End(U) through every available
    /// presentation (one per generator/probe, plus kernel-shifted witnesses)
    /// and reports disagreements. Fewer than two presentations yields an
    /// "audit skipped" note.
    std::vector<std::string> well_definedness_audit(const Word& u, size_t max_kernel_shifts = 2) const;

    /// A = {V : V and V* admissible and t_V = tv_V as forms on End(V)}.
    std::vector<Word> compute_A(const std::vector<Word>& candidates) const;

    struct SlopeEntry {
        Word v;
        FieldElement d, d_dual, slope;
    };
    struct RetractTriple {
        Word u, v, w;  // U a retract of V (x) W
    };
    struct SlopeReport {
        std::vector<SlopeEntry> table;
        std::vector<std::string> notes;  // rejected entries and property failures
    };
    /// Slope table s(V) = d(V)/d(V*) plus verification of s(V)s(V*) = 1 and
    /// the t = tv <=> s = 1 equivalence on entries, and s(U) = s(V)s(W) on
    /// the declared retract triples.
    SlopeReport slope_table(const std::vector<Word>& a_objects, const std::vector<RetractTriple>& triples = {}) const;

  private:
    const Category* c_;
    TraceFamily seed_;
    std::vector<Word> gens_, probes_;
    mutable std::map<std::string, Witness> cache_;
};

}  // namespace pivotrace
