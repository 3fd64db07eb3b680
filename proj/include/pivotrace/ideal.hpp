#pragma once

#include "pivotrace/trace.hpp"

namespace pivotrace {

struct IdealError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Membership witness: an endomorphism f of the criterion shape whose partial
/// trace is Id_U. For left ideals f lies in End(U (x) X*), for right ideals in
/// End(X* (x) U); for two-sided ideals the generator is replaced by X (x) Z
/// with Z a probe word (possibly the unit).
struct Witness {
    Word u;
    Word generator;  // X, a declared generator
    Word probe;      // Z (two-sided only; empty otherwise)
    Side side = Side::Left;
    Morphism f;
    std::vector<Morphism> kernel;  // f + any kernel element is again a witness
};

/// A retract presentation U <= ambient with p q = Id_U exactly.
struct RetractData {
    Word u, ambient;
    Morphism p;  // ambient -> u
    Morphism q;  // u -> ambient
};

/// Decides membership of U in the ideal generated by `generators` on the given
/// side by solving the linear criterion per generator; returns the first
/// witness in generator order, or nullopt ("not found" is inconclusive for the
/// two-sided case, where probes bound the search).
std::optional<Witness> membership(const Category& c, const Word& u, const std::vector<Word>& generators, Side side,
                                  const std::vector<Word>& probes = {});

/// All witnesses shifted by k kernel elements give further presentations; this
/// builds the canonical (p, q) from a witness and verifies p q = Id_U exactly.
RetractData retract_from_witness(const Category& c, const Witness& w);

/// Module splitting s of the action surjection H (x) U -> U, u-major in the
/// free module basis; a solution certifies projectivity of the word's module.
std::optional<Matrix> is_projective(const Category& c, const Word& u);

/// Epi = surjective: rank equals the dimension of the target.
bool is_epi(const Morphism& f);

/// Invertible intertwiner U -> V among 0/1 combinations of the Hom basis, if
/// any (deterministic search, bounded).
std::optional<Morphism> find_iso(const Category& c, const Word& u, const Word& v);

}  // namespace pivotrace
