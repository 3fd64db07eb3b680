#include "pivotrace/category.hpp"

#include <sstream>

namespace pivotrace {

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += " (x) ";
        out += w[i].name;
        out += std::string(size_t(w[i].level), '*');
    }
    return out;
}

Factor parse_factor(const std::string& text) {
    size_t stars = 0;
    while (stars < text.size() && text[text.size() - 1 - stars] == '*') ++stars;
    std::string name = text.substr(0, text.size() - stars);
    if (name.empty()) throw CategoryError("empty object name in '" + text + "'");
    return Factor{name, int(stars)};
}

Word parse_word(const std::string& text) {
    // split on "(x)" or standalone "@"
    std::vector<std::string> toks;
    std::istringstream in(text);
    std::string t;
    while (in >> t) toks.push_back(t);
    Word w;
    for (const auto& tok : toks) {
        if (tok == "(x)" || tok == "@") continue;
        if (tok == "1" && toks.size() == 1) return {};
        w.push_back(parse_factor(tok));
    }
    return w;
}

Word dual_word(const Word& w) {
    Word d;
    for (auto it = w.rbegin(); it != w.rend(); ++it) d.push_back(Factor{it->name, it->level + 1});
    return d;
}

namespace {

std::string word_key(const Word& w) {
    std::string k;
    for (const auto& f : w) {
        k += f.name;
        k += '^';
        k += std::to_string(f.level);
        k += '|';
    }
    return k;
}

}  // namespace

Category::Category(CategoryData data) : data_(std::move(data)) {
    auto rep = validate_hopf(data_.hopf);
    if (!rep.empty()) throw CategoryError("invalid pivotal Hopf data: " + rep.front());
    for (const auto& m : data_.modules) {
        auto mrep = validate_module(data_.hopf, m);
        if (!mrep.empty()) throw CategoryError("invalid module: " + mrep.front());
    }
}

const ModuleObject& Category::module(const std::string& name) const {
    const ModuleObject* m = data_.find(name);
    if (!m) throw CategoryError("unknown object '" + name + "'");
    return *m;
}

size_t Category::dim(const Word& w) const {
    size_t d = 1;
    for (const auto& f : w) d *= module(f.name).dim;
    return d;
}

std::vector<Matrix> Category::factor_action(const Factor& fac) const {
    const ModuleObject& m = module(fac.name);
    const HopfAlgebra& h = data_.hopf;
    if (fac.level == 0) return m.action;
    // S^level as a matrix on H
    Matrix sk = Matrix::identity(h.field, h.dim);
    for (int i = 0; i < fac.level; ++i) sk = h.antipode * sk;
    std::vector<Matrix> out;
    out.reserve(h.dim);
    for (size_t j = 0; j < h.dim; ++j) {
        Matrix a(h.field, m.dim, m.dim);
        for (size_t i = 0; i < h.dim; ++i)
            if (!sk.at(i, j).is_zero()) a = a + m.action[i] * sk.at(i, j);
        out.push_back(fac.level % 2 ? a.transpose() : a);
    }
    return out;
}

const std::vector<Matrix>& Category::action(const Word& w) const {
    std::string key = word_key(w);
    auto it = action_cache_.find(key);
    if (it != action_cache_.end()) return it->second;
    const HopfAlgebra& h = data_.hopf;
    std::vector<Matrix> acts;
    if (w.empty()) {
        for (size_t j = 0; j < h.dim; ++j) acts.push_back(Matrix::scalar(h.counit[j]));
    } else {
        acts = factor_action(w[0]);
        for (size_t fi = 1; fi < w.size(); ++fi) {
            std::vector<Matrix> next = factor_action(w[fi]);
            size_t dp = acts[0].rows(), dn = next[0].rows();
            std::vector<Matrix> merged(h.dim, Matrix(h.field, dp * dn, dp * dn));
            for (size_t j = 0; j < h.dim; ++j)
                for (const auto& t : h.comult[j]) merged[j] = merged[j] + kron(acts[t.left], next[t.right]) * t.coeff;
            acts = std::move(merged);
        }
    }
    return action_cache_.emplace(std::move(key), std::move(acts)).first->second;
}

const std::pair<Matrix, Matrix>& Category::pivot_pair(const Word& w) const {
    std::string key = word_key(w);
    auto it = pivot_cache_.find(key);
    if (it != pivot_cache_.end()) return it->second;
    const HopfAlgebra& h = data_.hopf;
    const auto& acts = action(w);
    Matrix p(h.field, acts[0].rows(), acts[0].cols());
    for (size_t j = 0; j < h.dim; ++j)
        if (!h.pivot[j].is_zero()) p = p + acts[j] * h.pivot[j];
    auto sol = solve_linear(p, Matrix::identity(h.field, p.rows()));
    if (!sol) throw CategoryError("pivot does not act invertibly on " + word_str(w));
    return pivot_cache_.emplace(std::move(key), std::make_pair(std::move(p), std::move(sol->particular))).first->second;
}

const Matrix& Category::pivot_action(const Word& w) const { return pivot_pair(w).first; }
const Matrix& Category::pivot_action_inv(const Word& w) const { return pivot_pair(w).second; }

std::vector<size_t> reversal_permutation(const Category& c, const Word& w) {
    std::vector<size_t> dims;
    size_t total = 1;
    for (const auto& f : w) {
        dims.push_back(c.dim({f}));
        total *= dims.back();
    }
    std::vector<size_t> perm(total);
    for (size_t idx = 0; idx < total; ++idx) {
        // decompose (last factor fastest), then reassemble reversed
        std::vector<size_t> mi(dims.size());
        size_t rem = idx;
        for (size_t k = dims.size(); k-- > 0;) {
            mi[k] = rem % dims[k];
            rem /= dims[k];
        }
        size_t rev = 0;
        for (size_t k = dims.size(); k-- > 0;) rev = rev * dims[k] + mi[k];
        perm[idx] = rev;
    }
    return perm;
}

Morphism Category::ev(const Word& w) const {
    size_t d = dim(w);
    auto perm = reversal_permutation(*this, w);
    Matrix m(field(), 1, d * d);
    for (size_t b = 0; b < d; ++b) m.at(0, perm[b] * d + b) = FieldElement::one(field());
    Word src = dual_word(w);
    src.insert(src.end(), w.begin(), w.end());
    return Morphism(src, {}, std::move(m));
}

Morphism Category::coev(const Word& w) const {
    size_t d = dim(w);
    auto perm = reversal_permutation(*this, w);
    Matrix m(field(), d * d, 1);
    for (size_t b = 0; b < d; ++b) m.at(b * d + perm[b], 0) = FieldElement::one(field());
    Word tgt = w;
    Word dw = dual_word(w);
    tgt.insert(tgt.end(), dw.begin(), dw.end());
    return Morphism({}, tgt, std::move(m));
}

Morphism Category::tev(const Word& w) const {
    size_t d = dim(w);
    auto perm = reversal_permutation(*this, w);
    const Matrix& g = pivot_action(w);
    Matrix m(field(), 1, d * d);
    for (size_t b = 0; b < d; ++b)
        for (size_t k = 0; k < d; ++k)
            if (!g.at(k, b).is_zero()) m.at(0, b * d + perm[k]) = g.at(k, b);
    Word src = w;
    Word dw = dual_word(w);
    src.insert(src.end(), dw.begin(), dw.end());
    return Morphism(src, {}, std::move(m));
}

Morphism Category::tcoev(const Word& w) const {
    size_t d = dim(w);
    auto perm = reversal_permutation(*this, w);
    const Matrix& ginv = pivot_action_inv(w);
    Matrix m(field(), d * d, 1);
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k)
            if (!ginv.at(k, i).is_zero()) m.at(perm[i] * d + k, 0) = ginv.at(k, i);
    Word tgt = dual_word(w);
    tgt.insert(tgt.end(), w.begin(), w.end());
    return Morphism({}, tgt, std::move(m));
}

Morphism Category::identity(const Word& w) const { return Morphism(w, w, Matrix::identity(field(), dim(w))); }

Morphism Category::compose(const Morphism& g, const Morphism& f) const {
    if (g.source != f.target)
        throw CategoryError("compose: source of outer (" + word_str(g.source) + ") != target of inner (" +
                            word_str(f.target) + ")");
    return Morphism(f.source, g.target, g.mat * f.mat);
}

Morphism Category::tensor(const Morphism& f, const Morphism& g) const {
    Word src = f.source, tgt = f.target;
    src.insert(src.end(), g.source.begin(), g.source.end());
    tgt.insert(tgt.end(), g.target.begin(), g.target.end());
    return Morphism(std::move(src), std::move(tgt), kron(f.mat, g.mat));
}

Morphism Category::dual_mor(const Morphism& f) const {
    auto permS = reversal_permutation(*this, f.source);
    auto permT = reversal_permutation(*this, f.target);
    Matrix m(field(), permS.size(), permT.size());
    for (size_t a = 0; a < permS.size(); ++a)
        for (size_t b = 0; b < permT.size(); ++b) m.at(permS[a], permT[b]) = f.mat.at(b, a);
    return Morphism(dual_word(f.target), dual_word(f.source), std::move(m));
}

Morphism Category::pivot_iso(const Word& w) const {
    Word dd = dual_word(dual_word(w));
    Morphism m = compose(tensor(tev(w), identity(dd)), tensor(identity(w), coev(dual_word(w))));
    m.source = w;
    m.target = dd;
    return m;
}

Morphism Category::pivot_iso_inv(const Word& w) const {
    Morphism phi = pivot_iso(w);
    auto sol = solve_linear(phi.mat, Matrix::identity(field(), phi.mat.rows()));
    if (!sol) throw CategoryError("pivotal isomorphism is singular on " + word_str(w));
    return Morphism(phi.target, phi.source, sol->particular);
}

bool Category::is_intertwiner(const Morphism& f) const {
    const auto& as = action(f.source);
    const auto& at = action(f.target);
    for (size_t j = 0; j < data_.hopf.dim; ++j)
        if (at[j] * f.mat != f.mat * as[j]) return false;
    return true;
}

const std::vector<Morphism>& Category::hom_basis(const Word& x, const Word& y) const {
    std::string key = word_key(x) + "->" + word_key(y);
    auto it = hom_cache_.find(key);
    if (it != hom_cache_.end()) return it->second;
    const HopfAlgebra& h = data_.hopf;
    size_t dx = dim(x), dy = dim(y);
    const auto& ax = action(x);
    const auto& ay = action(y);
    // unknowns: vec(M) row-major, M is dy x dx
    Matrix a(field(), h.dim * dy * dx, dy * dx);
    size_t row = 0;
    for (size_t b = 0; b < h.dim; ++b)
        for (size_t i = 0; i < dy; ++i)
            for (size_t j = 0; j < dx; ++j, ++row) {
                for (size_t k = 0; k < dy; ++k)
                    if (!ay[b].at(i, k).is_zero()) a.at(row, k * dx + j) += ay[b].at(i, k);
                for (size_t l = 0; l < dx; ++l)
                    if (!ax[b].at(l, j).is_zero()) a.at(row, i * dx + l) -= ax[b].at(l, j);
            }
    std::vector<Morphism> basis;
    for (const Matrix& v : kernel_basis(a)) {
        Matrix m(field(), dy, dx);
        for (size_t i = 0; i < dy; ++i)
            for (size_t j = 0; j < dx; ++j) m.at(i, j) = v.at(i * dx + j, 0);
        basis.emplace_back(x, y, std::move(m));
    }
    return hom_cache_.emplace(std::move(key), std::move(basis)).first->second;
}

std::vector<FieldElement> Category::hom_coords(const Morphism& f) const {
    const auto& basis = hom_basis(f.source, f.target);
    if (basis.empty()) {
        if (!f.mat.is_zero()) throw CategoryError("morphism outside the (trivial) hom space");
        return {};
    }
    size_t len = f.mat.rows() * f.mat.cols();
    Matrix a(field(), len, basis.size());
    for (size_t k = 0; k < basis.size(); ++k) {
        Matrix v = basis[k].mat.vectorize();
        for (size_t i = 0; i < len; ++i) a.at(i, k) = v.at(i, 0);
    }
    auto sol = solve_linear(a, f.mat.vectorize());
    if (!sol) throw CategoryError("morphism is not an intertwiner (outside the hom space)");
    std::vector<FieldElement> out;
    for (size_t k = 0; k < basis.size(); ++k) out.push_back(sol->particular.at(k, 0));
    return out;
}

bool Category::is_simple(const Word& w) const { return hom_basis(w, w).size() == 1; }

FieldElement Category::bracket(const Morphism& f) const {
    if (f.source != f.target) throw CategoryError("bracket: not an endomorphism");
    if (!is_simple(f.source)) throw CategoryError("bracket: object " + word_str(f.source) + " is not simple");
    FieldElement lambda = f.mat.at(0, 0);
    if (f.mat != Matrix::identity(field(), f.mat.rows()) * lambda)
        throw CategoryError("bracket: endomorphism is not scalar");
    return lambda;
}

std::optional<std::string> Category::identify(const Word& w) const {
    size_t d = dim(w);
    for (const auto& m : data_.modules) {
        if (m.dim != d) continue;
        const auto& basis = hom_basis(w, {Factor{m.name, 0}});
        if (basis.empty()) continue;
        // search small 0/1 combinations for an invertible intertwiner
        size_t n = basis.size();
        size_t limit = n >= 12 ? 4096 : (size_t(1) << n);
        for (size_t mask = 1; mask < limit; ++mask) {
            Matrix cand(field(), d, d);
            for (size_t k = 0; k < n; ++k)
                if (mask & (size_t(1) << k)) cand = cand + basis[k].mat;
            if (rank(cand) == d) return m.name;
        }
    }
    return std::nullopt;
}

}  // namespace pivotrace
