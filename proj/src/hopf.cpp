#include "pivotrace/hopf.hpp"

#include <fstream>
#include <sstream>

namespace pivotrace {

std::vector<FieldElement> HopfAlgebra::multiply(const std::vector<FieldElement>& a,
                                                const std::vector<FieldElement>& b) const {
    std::vector<FieldElement> out = zero_vec();
    for (size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            FieldElement c = a[i] * b[j];
            for (size_t k = 0; k < dim; ++k) out[k] += c * mult[i][j][k];
        }
    }
    return out;
}

FieldElement HopfAlgebra::counit_of(const std::vector<FieldElement>& a) const {
    FieldElement out = FieldElement::zero(field);
    for (size_t i = 0; i < dim; ++i) out += counit[i] * a[i];
    return out;
}

Matrix HopfAlgebra::left_mult_matrix(const std::vector<FieldElement>& a) const {
    Matrix m(field, dim, dim);
    for (size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j)
            for (size_t k = 0; k < dim; ++k) m.at(k, j) += a[i] * mult[i][j][k];
    }
    return m;
}

std::vector<FieldElement> HopfAlgebra::apply(const Matrix& m, const std::vector<FieldElement>& a) const {
    std::vector<FieldElement> out = zero_vec();
    for (size_t j = 0; j < dim; ++j) {
        if (a[j].is_zero()) continue;
        for (size_t i = 0; i < dim; ++i) out[i] += m.at(i, j) * a[j];
    }
    return out;
}

std::vector<FieldElement> HopfAlgebra::invert(const std::vector<FieldElement>& a) const {
    Matrix rhs(field, dim, 1);
    for (size_t i = 0; i < dim; ++i) rhs.at(i, 0) = unit[i];
    auto sol = solve_linear(left_mult_matrix(a), rhs);
    if (!sol) throw HopfError("element is not invertible");
    std::vector<FieldElement> out = zero_vec();
    for (size_t i = 0; i < dim; ++i) out[i] = sol->particular.at(i, 0);
    // left inverse of an element of a finite-dimensional algebra is two-sided,
    // but check exactly anyway
    auto check = multiply(a, out);
    if (check != unit) throw HopfError("element is not invertible");
    return out;
}

const ModuleObject* CategoryData::find(const std::string& n) const {
    for (const auto& m : modules)
        if (m.name == n) return &m;
    return nullptr;
}

namespace {

std::vector<FieldElement> basis_vec(const HopfAlgebra& h, size_t i) {
    auto v = h.zero_vec();
    v[i] = FieldElement::one(h.field);
    return v;
}

// Dense coefficients of an element of H (x) H, indexed [l*dim + r].
using Tensor2 = std::vector<FieldElement>;

Tensor2 comult_dense(const HopfAlgebra& h, size_t i) {
    Tensor2 t(h.dim * h.dim, FieldElement::zero(h.field));
    for (const auto& term : h.comult[i]) t[term.left * h.dim + term.right] += term.coeff;
    return t;
}

}  // namespace

std::vector<std::string> validate_hopf(const HopfAlgebra& h) {
    std::vector<std::string> report;
    const Field* f = h.field;
    size_t n = h.dim;
    auto zero2 = [&] { return Tensor2(n * n, FieldElement::zero(f)); };

    if (h.mult.size() != n || h.comult.size() != n || h.counit.size() != n || h.unit.size() != n ||
        h.pivot.size() != n || h.antipode.rows() != n || h.antipode.cols() != n) {
        report.push_back("structure tensors have inconsistent dimensions");
        return report;
    }

    // associativity
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
        for (size_t j = 0; j < n && ok; ++j)
            for (size_t k = 0; k < n && ok; ++k) {
                auto lhs = h.multiply(h.mult[i][j], basis_vec(h, k));
                auto rhs = h.multiply(basis_vec(h, i), h.mult[j][k]);
                if (lhs != rhs) {
                    report.push_back("associativity fails at basis triple (" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ")");
                    ok = false;
                }
            }
    // unit
    for (size_t i = 0; i < n; ++i) {
        if (h.multiply(h.unit, basis_vec(h, i)) != basis_vec(h, i) ||
            h.multiply(basis_vec(h, i), h.unit) != basis_vec(h, i)) {
            report.push_back("unit axiom fails at basis element " + std::to_string(i));
            break;
        }
    }
    // coassociativity: (Delta x id)Delta = (id x Delta)Delta
    for (size_t i = 0; i < n; ++i) {
        std::vector<FieldElement> lhs(n * n * n, FieldElement::zero(f)), rhs(n * n * n, FieldElement::zero(f));
        for (const auto& t : h.comult[i]) {
            for (const auto& u : h.comult[t.left]) lhs[(u.left * n + u.right) * n + t.right] += t.coeff * u.coeff;
            for (const auto& u : h.comult[t.right]) rhs[(t.left * n + u.left) * n + u.right] += t.coeff * u.coeff;
        }
        if (lhs != rhs) {
            report.push_back("coassociativity fails at basis element " + std::to_string(i));
            break;
        }
    }
    // counit axiom
    for (size_t i = 0; i < n; ++i) {
        auto l = h.zero_vec(), r = h.zero_vec();
        for (const auto& t : h.comult[i]) {
            l[t.right] += h.counit[t.left] * t.coeff;
            r[t.left] += h.counit[t.right] * t.coeff;
        }
        if (l != basis_vec(h, i) || r != basis_vec(h, i)) {
            report.push_back("counit axiom fails at basis element " + std::to_string(i));
            break;
        }
    }
    // Delta is an algebra map
    {
        Tensor2 unit2 = zero2();
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) unit2[a * n + b] = h.unit[a] * h.unit[b];
        Tensor2 dunit = zero2();
        for (size_t i = 0; i < n; ++i)
            if (!h.unit[i].is_zero())
                for (const auto& t : h.comult[i]) dunit[t.left * n + t.right] += h.unit[i] * t.coeff;
        if (dunit != unit2) report.push_back("comultiplication does not preserve the unit");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Tensor2 lhs = zero2();
            for (size_t k = 0; k < n; ++k)
                if (!h.mult[i][j][k].is_zero())
                    for (const auto& t : h.comult[k]) lhs[t.left * n + t.right] += h.mult[i][j][k] * t.coeff;
            Tensor2 rhs = zero2();
            for (const auto& t : h.comult[i])
                for (const auto& u : h.comult[j]) {
                    FieldElement c = t.coeff * u.coeff;
                    const auto& lprod = h.mult[t.left][u.left];
                    const auto& rprod = h.mult[t.right][u.right];
                    for (size_t a = 0; a < n; ++a) {
                        if (lprod[a].is_zero()) continue;
                        for (size_t b = 0; b < n; ++b)
                            if (!rprod[b].is_zero()) rhs[a * n + b] += c * lprod[a] * rprod[b];
                    }
                }
            if (lhs != rhs) {
                report.push_back("comultiplication is not multiplicative at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
                i = n;
                break;
            }
        }
    // counit is an algebra map
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (h.counit_of(h.mult[i][j]) != h.counit[i] * h.counit[j]) {
                report.push_back("counit is not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) +
                                 ")");
                i = n;
                break;
            }
    if (!h.counit_of(h.unit).is_one()) report.push_back("counit of the unit is not 1");
    // antipode axiom
    for (size_t i = 0; i < n; ++i) {
        auto l = h.zero_vec(), r = h.zero_vec();
        for (const auto& t : h.comult[i]) {
            auto sleft = h.apply(h.antipode, basis_vec(h, t.left));
            auto sright = h.apply(h.antipode, basis_vec(h, t.right));
            auto lterm = h.multiply(sleft, basis_vec(h, t.right));
            auto rterm = h.multiply(basis_vec(h, t.left), sright);
            for (size_t k = 0; k < n; ++k) {
                l[k] += t.coeff * lterm[k];
                r[k] += t.coeff * rterm[k];
            }
        }
        auto target = h.zero_vec();
        for (size_t k = 0; k < n; ++k) target[k] = h.counit[i] * h.unit[k];
        if (l != target || r != target) {
            report.push_back("antipode axiom fails at basis element " + std::to_string(i));
            break;
        }
    }
    // pivot: grouplike, counit 1, invertible, S^2 = conjugation by pivot
    {
        Tensor2 gxg = zero2();
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) gxg[a * n + b] = h.pivot[a] * h.pivot[b];
        Tensor2 dg = zero2();
        for (size_t i = 0; i < n; ++i)
            if (!h.pivot[i].is_zero())
                for (const auto& t : h.comult[i]) dg[t.left * n + t.right] += h.pivot[i] * t.coeff;
        if (dg != gxg) report.push_back("pivot is not grouplike");
        if (!h.counit_of(h.pivot).is_one()) report.push_back("pivot has counit != 1");
        bool invertible = true;
        std::vector<FieldElement> ginv;
        try {
            ginv = h.invert(h.pivot);
        } catch (const HopfError&) {
            invertible = false;
            report.push_back("pivot is not invertible");
        }
        if (invertible) {
            for (size_t i = 0; i < n; ++i) {
                auto s2 = h.apply(h.antipode, h.apply(h.antipode, basis_vec(h, i)));
                auto conj = h.multiply(h.pivot, h.multiply(basis_vec(h, i), ginv));
                if (s2 != conj) {
                    report.push_back("S^2 is not conjugation by the pivot at basis element " + std::to_string(i));
                    break;
                }
            }
        }
    }
    return report;
}

std::vector<std::string> validate_module(const HopfAlgebra& h, const ModuleObject& m) {
    std::vector<std::string> report;
    if (m.action.size() != h.dim) {
        report.push_back("module " + m.name + ": wrong number of action matrices");
        return report;
    }
    for (size_t i = 0; i < h.dim; ++i)
        if (m.action[i].rows() != m.dim || m.action[i].cols() != m.dim || m.action[i].field() != h.field) {
            report.push_back("module " + m.name + ": action matrix " + std::to_string(i) + " has wrong shape");
            return report;
        }
    Matrix rho_unit(h.field, m.dim, m.dim);
    for (size_t i = 0; i < h.dim; ++i) rho_unit = rho_unit + m.action[i] * h.unit[i];
    if (!rho_unit.is_identity()) report.push_back("module " + m.name + ": unit does not act as identity");
    for (size_t i = 0; i < h.dim; ++i)
        for (size_t j = 0; j < h.dim; ++j) {
            Matrix lhs = m.action[i] * m.action[j];
            Matrix rhs(h.field, m.dim, m.dim);
            for (size_t k = 0; k < h.dim; ++k)
                if (!h.mult[i][j][k].is_zero()) rhs = rhs + m.action[k] * h.mult[i][j][k];
            if (lhs != rhs) {
                report.push_back("module " + m.name + ": action not multiplicative at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
                return report;
            }
        }
    return report;
}

namespace {

void hopf_init_empty(HopfAlgebra& h, const Field* f, size_t n) {
    h.field = f;
    h.dim = n;
    h.mult.assign(n, std::vector<std::vector<FieldElement>>(n, std::vector<FieldElement>(n, FieldElement::zero(f))));
    h.unit = h.zero_vec();
    h.comult.assign(n, {});
    h.counit = h.zero_vec();
    h.antipode = Matrix(f, n, n);
    h.pivot = h.zero_vec();
}

}  // namespace

CategoryData builtin_sweedler() {
    const Field* f = Field::rationals();
    FieldElement one = FieldElement::one(f), neg = -one;
    CategoryData cat;
    cat.name = "sweedler";
    HopfAlgebra& h = cat.hopf;
    hopf_init_empty(h, f, 4);
    // basis: 0 = 1, 1 = g, 2 = x, 3 = gx
    auto set = [&](size_t i, size_t j, size_t k, const FieldElement& c) { h.mult[i][j][k] = c; };
    for (size_t j = 0; j < 4; ++j) {
        set(0, j, j, one);          // 1 * b = b
        if (j) set(j, 0, j, one);   // b * 1 = b
    }
    set(1, 1, 0, one);   // g*g = 1
    set(1, 2, 3, one);   // g*x = gx
    set(1, 3, 2, one);   // g*gx = x
    set(2, 1, 3, neg);   // x*g = -gx
    set(3, 1, 2, neg);   // gx*g = -x
    // x*x = x*gx = gx*x = gx*gx = 0
    h.unit[0] = one;
    h.comult[0] = {{0, 0, one}};
    h.comult[1] = {{1, 1, one}};
    h.comult[2] = {{2, 0, one}, {1, 2, one}};
    h.comult[3] = {{3, 1, one}, {0, 3, one}};
    h.counit[0] = one;
    h.counit[1] = one;
    h.antipode.at(0, 0) = one;
    h.antipode.at(1, 1) = one;
    h.antipode.at(3, 2) = neg;  // S(x) = -gx
    h.antipode.at(2, 3) = one;  // S(gx) = x
    h.pivot[1] = one;

    auto mk1 = [&](const std::string& name, const FieldElement& gval) {
        ModuleObject m;
        m.name = name;
        m.dim = 1;
        m.action.assign(4, Matrix(f, 1, 1));
        m.action[0].at(0, 0) = one;
        m.action[1].at(0, 0) = gval;
        return m;
    };
    auto mk2 = [&](const std::string& name, const FieldElement& gtop) {
        ModuleObject m;
        m.name = name;
        m.dim = 2;
        m.action.assign(4, Matrix(f, 2, 2));
        m.action[0] = Matrix::identity(f, 2);
        m.action[1].at(0, 0) = gtop;
        m.action[1].at(1, 1) = -gtop;
        m.action[2].at(1, 0) = one;
        m.action[3] = m.action[1] * m.action[2];
        return m;
    };
    cat.modules.push_back(mk1("k+", one));
    cat.modules.push_back(mk1("k-", neg));
    cat.modules.push_back(mk2("P+", one));
    cat.modules.push_back(mk2("P-", neg));
    return cat;
}

CategoryData builtin_group_algebra(long n, const Field* f) {
    if (n < 1) throw HopfError("group_algebra: order must be positive");
    CategoryData cat;
    cat.name = "group_algebra:" + std::to_string(n) + ":" + f->name();
    HopfAlgebra& h = cat.hopf;
    size_t nn = size_t(n);
    hopf_init_empty(h, f, nn);
    FieldElement one = FieldElement::one(f);
    for (size_t i = 0; i < nn; ++i) {
        for (size_t j = 0; j < nn; ++j) h.mult[i][j][(i + j) % nn] = one;
        h.comult[i] = {{i, i, one}};
        h.counit[i] = one;
        h.antipode.at((nn - i) % nn, i) = one;
    }
    h.unit[0] = one;
    h.pivot[0] = one;

    ModuleObject triv;
    triv.name = "triv";
    triv.dim = 1;
    triv.action.assign(nn, Matrix(f, 1, 1));
    for (size_t i = 0; i < nn; ++i) triv.action[i].at(0, 0) = one;
    cat.modules.push_back(triv);

    ModuleObject reg;
    reg.name = "reg";
    reg.dim = nn;
    reg.action.assign(nn, Matrix(f, nn, nn));
    for (size_t i = 0; i < nn; ++i)
        for (size_t j = 0; j < nn; ++j) reg.action[i].at((i + j) % nn, j) = one;
    cat.modules.push_back(reg);
    return cat;
}

namespace {

// Tokenized line with '#' comments stripped.
struct Line {
    size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    size_t num = 0;
    while (std::getline(in, raw)) {
        ++num;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::istringstream ls(raw);
        Line line{num, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(const Line& l, const std::string& msg) {
    throw HopfError("category file line " + std::to_string(l.number) + ": " + msg);
}

size_t parse_index(const Line& l, const std::string& tok, size_t bound, const std::string& what) {
    size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(tok, &pos);
    } catch (...) {
        fail(l, "expected " + what + " index, got '" + tok + "'");
    }
    if (pos != tok.size() || v >= bound) fail(l, what + " index out of range: '" + tok + "'");
    return size_t(v);
}

}  // namespace

CategoryData parse_category_file(const std::string& text, const std::string& name) {
    CategoryData cat;
    cat.name = name;
    const Field* f = nullptr;
    HopfAlgebra& h = cat.hopf;
    bool have_dim = false, have_unit = false;
    std::vector<Line> lines = tokenize(text);

    auto coeff = [&](const Line& l, const std::string& tok) {
        try {
            return FieldElement::parse(f, tok);
        } catch (const FieldError& e) {
            fail(l, std::string("bad coefficient '") + tok + "': " + e.what());
        }
    };
    auto read_vec = [&](const Line& l, size_t from, size_t count) {
        if (l.tokens.size() != from + count) fail(l, "expected " + std::to_string(count) + " coefficients");
        std::vector<FieldElement> v;
        for (size_t i = 0; i < count; ++i) v.push_back(coeff(l, l.tokens[from + i]));
        return v;
    };

    for (const Line& l : lines) {
        const std::string& key = l.tokens[0];
        if (key == "field") {
            if (f) fail(l, "duplicate field line");
            std::string spec;
            for (size_t i = 1; i < l.tokens.size(); ++i) spec += (i > 1 ? " " : "") + l.tokens[i];
            f = Field::parse(spec);
        } else if (key == "hopf") {
            if (!f) fail(l, "field must be declared before hopf");
            if (have_dim) fail(l, "duplicate hopf line");
            if (l.tokens.size() != 3 || l.tokens[1] != "dim") fail(l, "expected 'hopf dim N'");
            long n = std::stol(l.tokens[2]);
            if (n < 1) fail(l, "hopf dimension must be positive");
            hopf_init_empty(h, f, size_t(n));
            have_dim = true;
        } else if (!have_dim) {
            fail(l, "'" + key + "' before 'hopf dim'");
        } else if (key == "mult") {
            if (l.tokens.size() < 4 || l.tokens[3] != "->") fail(l, "expected 'mult i j -> coeffs'");
            size_t i = parse_index(l, l.tokens[1], h.dim, "basis");
            size_t j = parse_index(l, l.tokens[2], h.dim, "basis");
            h.mult[i][j] = read_vec(l, 4, h.dim);
        } else if (key == "comult") {
            if (l.tokens.size() < 3 || l.tokens[2] != "->") fail(l, "expected 'comult i -> j k c ; ...'");
            size_t i = parse_index(l, l.tokens[1], h.dim, "basis");
            h.comult[i].clear();
            size_t pos = 3;
            while (pos < l.tokens.size()) {
                if (l.tokens[pos] == ";") {
                    ++pos;
                    continue;
                }
                if (pos + 2 >= l.tokens.size()) fail(l, "comult terms are triples 'j k c'");
                ComultTerm t{parse_index(l, l.tokens[pos], h.dim, "basis"),
                             parse_index(l, l.tokens[pos + 1], h.dim, "basis"), coeff(l, l.tokens[pos + 2])};
                h.comult[i].push_back(t);
                pos += 3;
            }
        } else if (key == "antipode") {
            if (l.tokens.size() < 3 || l.tokens[2] != "->") fail(l, "expected 'antipode i -> coeffs'");
            size_t i = parse_index(l, l.tokens[1], h.dim, "basis");
            auto v = read_vec(l, 3, h.dim);
            for (size_t k = 0; k < h.dim; ++k) h.antipode.at(k, i) = v[k];
        } else if (key == "counit") {
            h.counit = read_vec(l, 1, h.dim);
        } else if (key == "unit") {
            h.unit = read_vec(l, 1, h.dim);
            have_unit = true;
        } else if (key == "pivot") {
            h.pivot = read_vec(l, 1, h.dim);
        } else if (key == "module") {
            if (l.tokens.size() != 4 || l.tokens[2] != "dim") fail(l, "expected 'module NAME dim d'");
            if (cat.find(l.tokens[1])) fail(l, "duplicate module " + l.tokens[1]);
            ModuleObject m;
            m.name = l.tokens[1];
            long d = std::stol(l.tokens[3]);
            if (d < 1) fail(l, "module dimension must be positive");
            m.dim = size_t(d);
            m.action.assign(h.dim, Matrix(f, m.dim, m.dim));
            cat.modules.push_back(std::move(m));
        } else if (key == "action") {
            if (l.tokens.size() < 4 || l.tokens[3] != "->") fail(l, "expected 'action NAME i -> rows'");
            ModuleObject* m = nullptr;
            for (auto& mod : cat.modules)
                if (mod.name == l.tokens[1]) m = &mod;
            if (!m) fail(l, "unknown module " + l.tokens[1]);
            size_t i = parse_index(l, l.tokens[2], h.dim, "basis");
            std::vector<std::vector<FieldElement>> rows(1);
            for (size_t pos = 4; pos < l.tokens.size(); ++pos) {
                if (l.tokens[pos] == ";")
                    rows.emplace_back();
                else
                    rows.back().push_back(coeff(l, l.tokens[pos]));
            }
            if (rows.size() != m->dim) fail(l, "expected " + std::to_string(m->dim) + " rows");
            for (const auto& r : rows)
                if (r.size() != m->dim) fail(l, "expected " + std::to_string(m->dim) + " entries per row");
            m->action[i] = Matrix::from_rows(f, rows);
        } else {
            fail(l, "unknown directive '" + key + "'");
        }
    }
    if (!f) throw HopfError("category file: missing field line");
    if (!have_dim) throw HopfError("category file: missing hopf line");
    if (!have_unit) h.unit[0] = FieldElement::one(f);
    return cat;
}

CategoryData load_category(const std::string& spec) {
    if (spec == "sweedler") return builtin_sweedler();
    if (spec.rfind("group_algebra:", 0) == 0) {
        std::string rest = spec.substr(14);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw HopfError("expected group_algebra:N:FIELD");
        long n = std::stol(rest.substr(0, colon));
        const Field* f = Field::parse(rest.substr(colon + 1));
        return builtin_group_algebra(n, f);
    }
    std::ifstream in(spec);
    if (!in) throw HopfError("cannot open category '" + spec + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_category_file(buf.str(), spec);
}

}  // namespace pivotrace
