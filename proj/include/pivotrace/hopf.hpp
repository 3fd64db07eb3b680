#pragma once

#include "pivotrace/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace pivotrace {

struct HopfError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sparse comultiplication of one basis element: list of (left, right, coeff).
struct ComultTerm {
    size_t left, right;
    FieldElement coeff;
};

/// A finite-dimensional Hopf algebra over an exact field, given by structure
/// constants, together with a distinguished grouplike pivot element.
class HopfAlgebra {
  public:
    const Field* field = nullptr;
    size_t dim = 0;
    // mult[i][j] = coefficients of basis_i * basis_j
    std::vector<std::vector<std::vector<FieldElement>>> mult;
    std::vector<FieldElement> unit;
    std::vector<std::vector<ComultTerm>> comult;
    std::vector<FieldElement> counit;
    Matrix antipode;  // column j = S(basis_j)
    std::vector<FieldElement> pivot;

    std::vector<FieldElement> multiply(const std::vector<FieldElement>& a,
                                       const std::vector<FieldElement>& b) const;
    FieldElement counit_of(const std::vector<FieldElement>& a) const;
    Matrix left_mult_matrix(const std::vector<FieldElement>& a) const;
    std::vector<FieldElement> apply(const Matrix& m, const std::vector<FieldElement>& a) const;
    /// Solves a*x = 1; throws when a is not invertible.
    std::vector<FieldElement> invert(const std::vector<FieldElement>& a) const;

    std::vector<FieldElement> zero_vec() const { return std::vector<FieldElement>(dim, FieldElement::zero(field)); }
};

/// A finite-dimensional module given by one action matrix per Hopf basis
/// element.
struct ModuleObject {
    std::string name;
    size_t dim = 0;
    std::vector<Matrix> action;
};

/// A Hopf algebra together with its named module catalogue.
struct CategoryData {
    std::string name;
    HopfAlgebra hopf;
    std::vector<ModuleObject> modules;

    const ModuleObject* find(const std::string& name) const;
};

/// Checks all Hopf axioms plus the pivotal requirements (pivot grouplike and
/// invertible, S^2 = conjugation by the pivot). Returns the list of failed
/// axioms; empty means valid.
std::vector<std::string> validate_hopf(const HopfAlgebra& h);

/// Checks the module axioms rho(1) = Id and rho(a)rho(b) = rho(ab) exactly.
std::vector<std::string> validate_module(const HopfAlgebra& h, const ModuleObject& m);

/// Built-in fixtures: "sweedler" (over Q) and "group_algebra" (cyclic group
/// of order n over the given field).
CategoryData builtin_sweedler();
CategoryData builtin_group_algebra(long n, const Field* f);

/// Resolves "sweedler" / "group_algebra:n:Fp p" / a file path.
CategoryData load_category(const std::string& spec);

/// Parses the line-oriented category file format.
CategoryData parse_category_file(const std::string& text, const std::string& name);

}  // namespace pivotrace
