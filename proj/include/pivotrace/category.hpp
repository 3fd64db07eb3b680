#pragma once

#include "pivotrace/hopf.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pivotrace {

struct CategoryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One tensor factor: a named module with a number of duals applied.
/// level 0 is the module itself, level 1 its dual, and so on.
struct Factor {
    std::string name;
    int level = 0;
    bool operator==(const Factor& o) const { return name == o.name && level == o.level; }
};

/// An object of the category: a tensor word of factors. The empty word is the
/// monoidal unit. Objects are compared structurally, which makes the tensor
/// product strictly associative and (X (x) Y)^* literally equal to Y^* (x) X^*.
using Word = std::vector<Factor>;

std::string word_str(const Word& w);
/// Parses "P+ (x) P-*" style words; also accepts a bare "1" for the unit.
Word parse_word(const std::string& text);
/// Parses a single factor token such as "P+**".
Factor parse_factor(const std::string& text);

Word dual_word(const Word& w);  // reversed factors, each level +1

/// A morphism f : source -> target, stored as a (dim target x dim source)
/// matrix in the standard tensor bases.
struct Morphism {
    Word source, target;
    Matrix mat;

    Morphism() = default;
    Morphism(Word s, Word t, Matrix m) : source(std::move(s)), target(std::move(t)), mat(std::move(m)) {}
};

enum class Side { Left, Right, TwoSided };

/// Category of finite-dimensional modules over a pivotal Hopf algebra, with
/// memoized action matrices, duality data, and hom-space bases.
class Category {
  public:
    explicit Category(CategoryData data);

    const CategoryData& data() const { return data_; }
    const HopfAlgebra& hopf() const { return data_.hopf; }
    const Field* field() const { return data_.hopf.field; }

    size_t dim(const Word& w) const;
    /// Action matrices of the word, one per Hopf basis element.
    const std::vector<Matrix>& action(const Word& w) const;
    /// Pivot acting on the word, and its inverse.
    const Matrix& pivot_action(const Word& w) const;
    const Matrix& pivot_action_inv(const Word& w) const;

    // duality morphisms (left duality ev/coev, right duality tev/tcoev)
    Morphism ev(const Word& w) const;     // w* (x) w -> 1
    Morphism coev(const Word& w) const;   // 1 -> w (x) w*
    Morphism tev(const Word& w) const;    // w (x) w* -> 1
    Morphism tcoev(const Word& w) const;  // 1 -> w* (x) w

    Morphism identity(const Word& w) const;
    Morphism compose(const Morphism& g, const Morphism& f) const;  // g after f
    Morphism tensor(const Morphism& f, const Morphism& g) const;
    /// Dual morphism f^* : Y^* -> X^* of f : X -> Y.
    Morphism dual_mor(const Morphism& f) const;
    /// Pivotal isomorphism phi_X : X -> X^**, built from the duality data.
    Morphism pivot_iso(const Word& w) const;
    Morphism pivot_iso_inv(const Word& w) const;

    /// True when mat intertwines the actions of source and target.
    bool is_intertwiner(const Morphism& f) const;

    /// Basis of Hom(X, Y), deterministic, memoized.
    const std::vector<Morphism>& hom_basis(const Word& x, const Word& y) const;
    /// Coordinates of f in hom_basis(f.source, f.target).
    std::vector<FieldElement> hom_coords(const Morphism& f) const;

    bool is_simple(const Word& w) const;  // End(w) is one-dimensional
    /// Scalar bracket <f> of an endomorphism of a simple object: the lambda
    /// with f = lambda * Id. Throws when the object is not simple.
    FieldElement bracket(const Morphism& f) const;

    /// Finds a catalogue module isomorphic to the word, if any.
    std::optional<std::string> identify(const Word& w) const;

  private:
    CategoryData data_;
    mutable std::map<std::string, std::vector<Matrix>> action_cache_;
    mutable std::map<std::string, std::pair<Matrix, Matrix>> pivot_cache_;
    mutable std::map<std::string, std::vector<Morphism>> hom_cache_;

    const ModuleObject& module(const std::string& name) const;
    std::vector<Matrix> factor_action(const Factor& f) const;
    const std::pair<Matrix, Matrix>& pivot_pair(const Word& w) const;
};

/// Permutation sending the lexicographic multi-index of w to the
/// lexicographic multi-index of the reversed word: perm[plain] = reversed.
std::vector<size_t> reversal_permutation(const Category& c, const Word& w);

}  // namespace pivotrace
