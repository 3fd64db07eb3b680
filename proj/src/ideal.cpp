#include "pivotrace/ideal.hpp"

namespace pivotrace {

namespace {

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

// Solves the one-sided criterion for generator word g: find f in
// End(U (x) g*) with tr_r^{g*}(f) = Id_U (left side), or f in End(g* (x) U)
// with tr_l^{g*}(f) = Id_U (right side).
std::optional<Witness> solve_criterion(const Category& c, const Word& u, const Word& g, Side side) {
    Word gs = dual_word(g);
    Word w = side == Side::Left ? concat(u, gs) : concat(gs, u);
    const auto& basis = c.hom_basis(w, w);
    size_t du = c.dim(u);
    Matrix a(c.field(), du * du, basis.size());
    for (size_t k = 0; k < basis.size(); ++k) {
        Matrix tr = partial_trace(c, basis[k], gs, side == Side::Left ? Side::Right : Side::Left).mat;
        Matrix v = tr.vectorize();
        for (size_t r = 0; r < v.rows(); ++r) a.at(r, k) = v.at(r, 0);
    }
    Matrix rhs = Matrix::identity(c.field(), du).vectorize();
    auto sol = solve_linear(a, rhs);
    if (!sol) return std::nullopt;
    auto combine = [&](const Matrix& coeffs) {
        Matrix m(c.field(), c.dim(w), c.dim(w));
        for (size_t k = 0; k < basis.size(); ++k) m = m + basis[k].mat * coeffs.at(k, 0);
        return Morphism(w, w, std::move(m));
    };
    Witness wit;
    wit.u = u;
    wit.generator = g;
    wit.side = side;
    wit.f = combine(sol->particular);
    for (const Matrix& k : sol->kernel) wit.kernel.push_back(combine(k));
    return wit;
}

}  // namespace

std::optional<Witness> membership(const Category& c, const Word& u, const std::vector<Word>& generators, Side side,
                                  const std::vector<Word>& probes) {
    if (side == Side::Left || side == Side::Right) {
        for (const Word& x : generators)
            if (auto w = solve_criterion(c, u, x, side)) return w;
        return std::nullopt;
    }
    // two-sided: left criterion with generator word X (x) Z, Z over the unit
    // and the declared probes
    std::vector<Word> zs = {{}};
    for (const Word& z : probes)
        if (!z.empty()) zs.push_back(z);
    for (const Word& x : generators)
        for (const Word& z : zs)
            if (auto w = solve_criterion(c, u, concat(x, z), Side::Left)) {
                w->generator = x;
                w->probe = z;
                w->side = Side::TwoSided;
                return w;
            }
    return std::nullopt;
}

RetractData retract_from_witness(const Category& c, const Witness& w) {
    Word g = w.side == Side::TwoSided ? concat(w.generator, w.probe) : w.generator;
    RetractData r;
    r.u = w.u;
    if (w.side == Side::Right) {
        r.ambient = concat(g, concat(dual_word(g), w.u));
        r.p = c.tensor(c.tev(g), c.identity(w.u));
        r.q = c.compose(c.tensor(c.identity(g), w.f), c.tensor(c.coev(g), c.identity(w.u)));
    } else {
        r.ambient = concat(w.u, concat(dual_word(g), g));
        r.p = c.tensor(c.identity(w.u), c.ev(g));
        r.q = c.compose(c.tensor(w.f, c.identity(g)), c.tensor(c.identity(w.u), c.tcoev(g)));
    }
    Morphism pq = c.compose(r.p, r.q);
    if (!pq.mat.is_identity())
        throw IdealError("retract_from_witness: p q != Id on " + word_str(w.u) + " (witness precondition fails)");
    return r;
}

std::optional<Matrix> is_projective(const Category& c, const Word& u) {
    const HopfAlgebra& h = c.hopf();
    size_t n = h.dim, du = c.dim(u);
    if (du == 0) return Matrix(c.field(), 0, 0);
    const auto& rho = c.action(u);
    // surjection pi: H (x) U -> U, pi(b_h (x) v) = rho(b_h) v
    Matrix pi(c.field(), du, n * du);
    for (size_t bh = 0; bh < n; ++bh)
        for (size_t vp = 0; vp < du; ++vp)
            for (size_t v = 0; v < du; ++v) pi.at(vp, bh * du + v) = rho[bh].at(vp, v);
    // unknown s: U -> H (x) U (an (n*du) x du matrix), constraints:
    //   pi s = Id_U  and  s rho(b) = (L_b (x) Id_U) s for each basis element b
    // stacked via the row-major identity vec(A S B) = kron(A, B^T) vec(S)
    size_t vars = n * du * du;
    Matrix ihp = Matrix::identity(c.field(), n * du);
    Matrix iu = Matrix::identity(c.field(), du);
    std::vector<Matrix> blocks;
    std::vector<Matrix> rhs_blocks;
    blocks.push_back(kron(pi, iu));
    rhs_blocks.push_back(iu.vectorize());
    for (size_t b = 0; b < n; ++b) {
        std::vector<FieldElement> eb = h.zero_vec();
        eb[b] = FieldElement::one(c.field());
        Matrix free_act = kron(h.left_mult_matrix(eb), iu);  // action on H (x) U
        Matrix row = kron(ihp, rho[b].transpose()) - kron(free_act, iu);
        blocks.push_back(row);
        rhs_blocks.push_back(Matrix(c.field(), row.rows(), 1));
    }
    size_t total = 0;
    for (const auto& m : blocks) total += m.rows();
    Matrix a(c.field(), total, vars), rhs(c.field(), total, 1);
    size_t off = 0;
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        for (size_t i = 0; i < blocks[bi].rows(); ++i) {
            for (size_t j = 0; j < vars; ++j) a.at(off + i, j) = blocks[bi].at(i, j);
            rhs.at(off + i, 0) = rhs_blocks[bi].at(i, 0);
        }
        off += blocks[bi].rows();
    }
    auto sol = solve_linear(a, rhs);
    if (!sol) return std::nullopt;
    Matrix s(c.field(), n * du, du);
    for (size_t i = 0; i < n * du; ++i)
        for (size_t j = 0; j < du; ++j) s.at(i, j) = sol->particular.at(i * du + j, 0);
    return s;
}

bool is_epi(const Morphism& f) { return rank(f.mat) == f.mat.rows(); }

std::optional<Morphism> find_iso(const Category& c, const Word& u, const Word& v) {
    if (c.dim(u) != c.dim(v)) return std::nullopt;
    const auto& basis = c.hom_basis(u, v);
    if (basis.empty())
        return c.dim(u) == 0 ? std::make_optional(Morphism(u, v, Matrix(c.field(), 0, 0))) : std::nullopt;
    size_t n = basis.size();
    if (n > 12) n = 12;  // bounded 0/1 search
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        Matrix m(c.field(), c.dim(v), c.dim(u));
        for (size_t k = 0; k < n; ++k)
            if (mask & (size_t(1) << k)) m = m + basis[k].mat;
        if (rank(m) == c.dim(u)) return Morphism(u, v, std::move(m));
    }
    return std::nullopt;
}

}  // namespace pivotrace
