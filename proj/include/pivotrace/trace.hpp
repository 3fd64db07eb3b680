#pragma once

#include "pivotrace/category.hpp"

namespace pivotrace {

struct TraceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Left partial trace tr_l^X(f) for f: X(x)Y -> X(x)Z (X a prefix word), or
/// right partial trace tr_r^X(f) for f: Y(x)X -> Z(x)X (X a suffix word).
Morphism partial_trace(const Category& c, const Morphism& f, const Word& x, Side side);

/// Full left/right trace of an endomorphism, as a scalar.
FieldElement trace_endo(const Category& c, const Morphism& f, Side side);

/// (dim_l, dim_r) of an object.
std::pair<FieldElement, FieldElement> dims(const Category& c, const Word& w);

/// A family of linear forms t_V on End(V) for V in a finite domain. The form
/// is stored by its values on hom_basis(V,V).
struct TraceFamily {
    Side side = Side::Left;
    std::vector<Word> domain;
    std::vector<std::vector<FieldElement>> coeffs;  // values on End bases

    std::optional<size_t> index_of(const Word& w) const;
    FieldElement eval(const Category& c, const Morphism& endo) const;
};

/// The usual tr_l / tr_r family on the given domain.
TraceFamily usual_trace_family(const Category& c, Side side, const std::vector<Word>& domain);

/// The bracket form <.> on a single End-rank-1 object (so t(Id) = 1).
TraceFamily bracket_family(const Category& c, const Word& obj, Side side);

/// Checks the trace axioms on the family's domain: cyclicity on all domain
/// pairs, and the partial-trace axiom for probe objects Y whenever the
/// relevant product lies in the domain. Violations are plain entries; skipped
/// product objects produce entries prefixed "gap:".
std::vector<std::string> check_trace_axioms(const Category& c, const TraceFamily& t, const std::vector<Word>& probes);

/// True when the report contains an actual violation (ignores "gap:" notes).
bool has_violations(const std::vector<std::string>& report);

enum class AmbiMode { Left, Right, Spherical };

/// Checks the ambidexterity equations of the given mode for all pairs from O
/// on full End bases; spherical mode also ranges over the probe middles
/// (the unit is always included as a middle).
std::vector<std::string> check_ambidextrous(const Category& c, const TraceFamily& t, const std::vector<Word>& o,
                                            AmbiMode mode, const std::vector<Word>& middles);

/// Basis of the space of all families on O satisfying the mode's equations.
std::vector<TraceFamily> solve_ambidextrous(const Category& c, const std::vector<Word>& o, AmbiMode mode,
                                            const std::vector<Word>& middles);

}  // namespace pivotrace
