#include "pivotrace/diagram.hpp"

#include <sstream>

namespace pivotrace {

std::string sig_str(const Signature& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += s[i].obj.name + std::string(size_t(s[i].obj.level), '*') + (s[i].eps > 0 ? "+" : "-");
    }
    return out + "]";
}

Signature dual_signature(const Signature& s) {
    Signature d;
    for (auto it = s.rbegin(); it != s.rend(); ++it) d.push_back(SigEntry{it->obj, -it->eps});
    return d;
}

Word sig_word(const Signature& s) {
    Word w;
    for (const auto& e : s) w.push_back(Factor{e.obj.name, e.obj.level + (e.eps < 0 ? 1 : 0)});
    return w;
}

const Diagram* DiagramFile::find(const std::string& name) const {
    for (const auto& d : diagrams)
        if (d.name == name) return &d;
    return nullptr;
}

namespace {

struct Token {
    std::string text;
    size_t line, col;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> toks;
    size_t line = 1, col = 1;
    std::string cur;
    size_t curline = 1, curcol = 1;
    auto flush = [&]() {
        if (!cur.empty()) {
            toks.push_back({cur, curline, curcol});
            cur.clear();
        }
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '#') {
            flush();
            while (i < text.size() && text[i] != '\n') ++i;
            --i;
            continue;
        }
        if (ch == '\n') {
            flush();
            ++line;
            col = 1;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == ',') {
            flush();
            ++col;
            continue;
        }
        if (std::string("[](){};:").find(ch) != std::string::npos) {
            flush();
            toks.push_back({std::string(1, ch), line, col});
            ++col;
            continue;
        }
        if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            // "->" only as a standalone token
            if (cur.empty()) {
                toks.push_back({"->", line, col});
                ++i;
                col += 2;
                continue;
            }
        }
        if (cur.empty()) {
            curline = line;
            curcol = col;
        }
        cur += ch;
        ++col;
    }
    flush();
    return toks;
}

struct Parser {
    std::vector<Token> toks;
    size_t pos = 0;
    const Field* field;

    [[noreturn]] void fail(const std::string& msg) {
        if (pos < toks.size())
            throw DiagramError("diagram file line " + std::to_string(toks[pos].line) + ", col " +
                               std::to_string(toks[pos].col) + ": " + msg + " (near '" + toks[pos].text + "')");
        throw DiagramError("diagram file: unexpected end of input: " + msg);
    }
    bool done() const { return pos >= toks.size(); }
    const std::string& peek() {
        if (done()) fail("unexpected end of input");
        return toks[pos].text;
    }
    std::string next() {
        if (done()) fail("unexpected end of input");
        return toks[pos++].text;
    }
    void expect(const std::string& t) {
        if (peek() != t) fail("expected '" + t + "'");
        ++pos;
    }

    SigEntry parse_sig_entry() {
        std::string tok = next();
        char last = tok.back();
        if (last != '+' && last != '-') {
            --pos;
            fail("signature entry must end with + or -");
        }
        SigEntry e;
        e.eps = last == '+' ? +1 : -1;
        std::string objtok = tok.substr(0, tok.size() - 1);
        try {
            e.obj = parse_factor(objtok);
        } catch (const CategoryError& err) {
            --pos;
            fail(err.what());
        }
        return e;
    }

    Signature parse_signature() {
        expect("[");
        Signature s;
        while (peek() != "]") s.push_back(parse_sig_entry());
        expect("]");
        return s;
    }

    Generator parse_generator(const CouponTable& coupons) {
        std::string kind = next();
        Generator g;
        if (kind == "id") {
            g.kind = Generator::Kind::Id;
            SigEntry e = parse_sig_entry();
            g.obj = e.obj;
            g.eps = e.eps;
            return g;
        }
        if (kind == "ev" || kind == "coev" || kind == "tev" || kind == "tcoev") {
            g.kind = kind == "ev"     ? Generator::Kind::Ev
                     : kind == "coev" ? Generator::Kind::Coev
                     : kind == "tev"  ? Generator::Kind::Tev
                                      : Generator::Kind::Tcoev;
            std::string objtok = next();
            try {
                g.obj = parse_factor(objtok);
            } catch (const CategoryError& err) {
                --pos;
                fail(err.what());
            }
            return g;
        }
        if (kind == "coupon") {
            g.kind = Generator::Kind::Coupon;
            g.coupon = next();
            if (!coupons.count(g.coupon)) {
                --pos;
                fail("unknown coupon '" + g.coupon + "'");
            }
            return g;
        }
        --pos;
        fail("unknown generator '" + kind + "'");
    }

    FieldElement parse_entry() {
        std::string tok = next();
        try {
            return FieldElement::parse(field, tok);
        } catch (const FieldError& err) {
            --pos;
            fail(std::string("bad matrix entry: ") + err.what());
        }
    }
};

}  // namespace

DiagramFile parse_diagram_file(const std::string& text, const Field* f) {
    Parser p{tokenize(text), 0, f};
    DiagramFile file;
    while (!p.done()) {
        std::string kw = p.next();
        if (kw == "use") {
            file.category = p.next();
        } else if (kw == "coupon") {
            CouponDef c;
            c.name = p.next();
            if (file.coupons.count(c.name)) p.fail("duplicate coupon '" + c.name + "'");
            p.expect(":");
            c.source = p.parse_signature();
            p.expect("->");
            c.target = p.parse_signature();
            file.coupons[c.name] = std::move(c);
        } else if (kw == "matrix") {
            std::string name = p.next();
            auto it = file.coupons.find(name);
            if (it == file.coupons.end()) p.fail("matrix for undeclared coupon '" + name + "'");
            p.expect("=");
            p.expect("(");
            std::vector<std::vector<FieldElement>> rows(1);
            while (p.peek() != ")") {
                if (p.peek() == ";") {
                    p.next();
                    rows.emplace_back();
                } else {
                    rows.back().push_back(p.parse_entry());
                }
            }
            p.expect(")");
            if (rows.size() == 1 && rows[0].empty()) rows.clear();
            it->second.mat = Matrix::from_rows(f, rows);
            it->second.has_matrix = true;
        } else if (kw == "diagram") {
            Diagram d;
            d.name = p.next();
            p.expect(":");
            d.source = p.parse_signature();
            p.expect("->");
            d.target = p.parse_signature();
            p.expect("{");
            while (p.peek() != "}") {
                p.expect("row");
                std::vector<Generator> row;
                while (p.peek() != ";") row.push_back(p.parse_generator(file.coupons));
                p.expect(";");
                d.rows.push_back(std::move(row));
            }
            p.expect("}");
            file.diagrams.push_back(std::move(d));
        } else {
            --p.pos;
            p.fail("expected 'use', 'coupon', 'matrix', or 'diagram'");
        }
    }
    return file;
}

std::pair<Signature, Signature> generator_signature(const Generator& g, const CouponTable& coupons) {
    switch (g.kind) {
        case Generator::Kind::Id:
            return {{SigEntry{g.obj, g.eps}}, {SigEntry{g.obj, g.eps}}};
        case Generator::Kind::Ev:
            return {{SigEntry{g.obj, -1}, SigEntry{g.obj, +1}}, {}};
        case Generator::Kind::Coev:
            return {{}, {SigEntry{g.obj, +1}, SigEntry{g.obj, -1}}};
        case Generator::Kind::Tev:
            return {{SigEntry{g.obj, +1}, SigEntry{g.obj, -1}}, {}};
        case Generator::Kind::Tcoev:
            return {{}, {SigEntry{g.obj, -1}, SigEntry{g.obj, +1}}};
        case Generator::Kind::Coupon: {
            auto it = coupons.find(g.coupon);
            if (it == coupons.end()) throw DiagramError("unknown coupon '" + g.coupon + "'");
            return {it->second.source, it->second.target};
        }
    }
    throw DiagramError("unreachable");
}

namespace {

Signature row_signature(const std::vector<Generator>& row, const CouponTable& coupons, bool source) {
    Signature s;
    for (const Generator& g : row) {
        auto [src, tgt] = generator_signature(g, coupons);
        const Signature& part = source ? src : tgt;
        s.insert(s.end(), part.begin(), part.end());
    }
    return s;
}

}  // namespace

void typecheck(const Category& c, const Diagram& d, const CouponTable& coupons) {
    // all referenced objects must exist
    for (const auto& e : d.source) c.dim({e.obj});
    for (const auto& e : d.target) c.dim({e.obj});
    Signature cur = d.source;
    for (size_t r = 0; r < d.rows.size(); ++r) {
        Signature need = row_signature(d.rows[r], coupons, true);
        if (!(need == cur))
            throw DiagramError("diagram '" + d.name + "': row " + std::to_string(r + 1) + " expects " +
                               sig_str(need) + " but gets " + sig_str(cur));
        for (const Generator& g : d.rows[r]) {
            if (g.kind == Generator::Kind::Coupon) {
                const CouponDef& cd = coupons.at(g.coupon);
                if (!cd.has_matrix) throw DiagramError("coupon '" + g.coupon + "' has no matrix");
                if (cd.mat.rows() != c.dim(sig_word(cd.target)) || cd.mat.cols() != c.dim(sig_word(cd.source)))
                    throw DiagramError("coupon '" + g.coupon + "' matrix shape does not match its signature");
            } else {
                c.dim({g.obj});
            }
        }
        cur = row_signature(d.rows[r], coupons, false);
    }
    if (!(cur == d.target))
        throw DiagramError("diagram '" + d.name + "': final signature " + sig_str(cur) + " differs from declared " +
                           sig_str(d.target));
}

namespace {

Morphism evaluate_generator(const Category& c, const Generator& g, const CouponTable& coupons) {
    Word w = {g.obj};
    switch (g.kind) {
        case Generator::Kind::Id: {
            Factor f = g.obj;
            if (g.eps < 0) f.level += 1;
            return c.identity({f});
        }
        case Generator::Kind::Ev:
            return c.ev(w);
        case Generator::Kind::Coev:
            return c.coev(w);
        case Generator::Kind::Tev:
            return c.tev(w);
        case Generator::Kind::Tcoev:
            return c.tcoev(w);
        case Generator::Kind::Coupon: {
            const CouponDef& cd = coupons.at(g.coupon);
            return Morphism(sig_word(cd.source), sig_word(cd.target), cd.mat);
        }
    }
    throw DiagramError("unreachable");
}

}  // namespace

Morphism evaluate(const Category& c, const Diagram& d, const CouponTable& coupons) {
    typecheck(c, d, coupons);
    Morphism acc = c.identity(sig_word(d.source));
    for (const auto& row : d.rows) {
        Morphism rm = c.identity({});
        for (const Generator& g : row) rm = c.tensor(rm, evaluate_generator(c, g, coupons));
        acc = c.compose(rm, acc);
    }
    return acc;
}

namespace {

std::vector<Generator> ids_of(const Signature& s) {
    std::vector<Generator> out;
    for (const auto& e : s) {
        Generator g;
        g.kind = Generator::Kind::Id;
        g.obj = e.obj;
        g.eps = e.eps;
        out.push_back(g);
    }
    return out;
}

Generator strand_gen(Generator::Kind k, const Factor& obj) {
    Generator g;
    g.kind = k;
    g.obj = obj;
    return g;
}

// cap consuming (e^*, e): ev for eps=+, tev for eps=-
Generator cap_left(const SigEntry& e) {
    return strand_gen(e.eps > 0 ? Generator::Kind::Ev : Generator::Kind::Tev, e.obj);
}
// cap consuming (e, e^*): tev for eps=+, ev for eps=-
Generator cap_right(const SigEntry& e) {
    return strand_gen(e.eps > 0 ? Generator::Kind::Tev : Generator::Kind::Ev, e.obj);
}
// cup producing (e^*, e): tcoev for eps=+, coev for eps=-
Generator cup_left(const SigEntry& e) {
    return strand_gen(e.eps > 0 ? Generator::Kind::Tcoev : Generator::Kind::Coev, e.obj);
}
// cup producing (e, e^*): coev for eps=+, tcoev for eps=-
Generator cup_right(const SigEntry& e) {
    return strand_gen(e.eps > 0 ? Generator::Kind::Coev : Generator::Kind::Tcoev, e.obj);
}

std::vector<Generator> concat_rows(std::vector<Generator> a, const std::vector<Generator>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

Diagram rotate_dual(const Diagram& t) {
    Diagram r;
    r.name = t.name.empty() ? "" : t.name + "*";
    r.source = dual_signature(t.target);
    r.target = dual_signature(t.source);
    Signature sdual = dual_signature(t.source);
    std::vector<Generator> tgt_dual_ids = ids_of(r.source);
    std::vector<Generator> src_dual_ids = ids_of(sdual);

    // bottom: Id_{target*} (x) coev-network of the source signature
    const Signature& s = t.source;
    for (size_t j = 0; j < s.size(); ++j) {
        std::vector<Generator> row = tgt_dual_ids;
        for (size_t i = 0; i < j; ++i) row.push_back(ids_of({s[i]})[0]);
        row.push_back(cup_right(s[j]));
        for (size_t i = j; i-- > 0;) {
            SigEntry e = s[i];
            e.eps = -e.eps;
            row.push_back(ids_of({e})[0]);
        }
        r.rows.push_back(std::move(row));
    }
    // middle: Id_{target*} (x) T (x) Id_{source*}
    for (const auto& row : t.rows)
        r.rows.push_back(concat_rows(concat_rows(tgt_dual_ids, row), src_dual_ids));
    // top: ev-network of the target signature (x) Id_{source*}
    const Signature& y = t.target;
    for (size_t j = 0; j < y.size(); ++j) {
        std::vector<Generator> row;
        for (size_t i = y.size(); i-- > j + 1;) {
            SigEntry e = y[i];
            e.eps = -e.eps;
            row.push_back(ids_of({e})[0]);
        }
        row.push_back(cap_left(y[j]));
        for (size_t i = j + 1; i < y.size(); ++i) row.push_back(ids_of({y[i]})[0]);
        r.rows.push_back(concat_rows(std::move(row), src_dual_ids));
    }
    return r;
}

Diagram partial_close(const Diagram& t, size_t k, Side side) {
    if (!(t.source == t.target)) throw DiagramError("partial_close: diagram is not an endomorphism");
    if (k > t.source.size()) throw DiagramError("partial_close: k exceeds the number of strands");
    Diagram cur = t;
    for (size_t iter = 0; iter < k; ++iter) {
        Diagram next;
        next.name = cur.name;
        if (side == Side::Left) {
            SigEntry e = cur.source.front();
            SigEntry ebar = e;
            ebar.eps = -e.eps;
            next.source = Signature(cur.source.begin() + 1, cur.source.end());
            next.target = next.source;
            next.rows.push_back(concat_rows({cup_left(e)}, ids_of(next.source)));
            for (const auto& row : cur.rows) next.rows.push_back(concat_rows(ids_of({ebar}), row));
            next.rows.push_back(concat_rows({cap_left(e)}, ids_of(next.source)));
        } else if (side == Side::Right) {
            SigEntry e = cur.source.back();
            SigEntry ebar = e;
            ebar.eps = -e.eps;
            next.source = Signature(cur.source.begin(), cur.source.end() - 1);
            next.target = next.source;
            next.rows.push_back(concat_rows(ids_of(next.source), {cup_right(e)}));
            for (const auto& row : cur.rows) next.rows.push_back(concat_rows(row, ids_of({ebar})));
            next.rows.push_back(concat_rows(ids_of(next.source), {cap_right(e)}));
        } else {
            throw DiagramError("partial_close: side must be left or right");
        }
        cur = std::move(next);
    }
    return cur;
}

Diagram close(const Diagram& t, Side side) {
    if (t.source.size() != 1 || !(t.source == t.target))
        throw DiagramError("close: diagram is not a 1-1 endomorphism");
    return partial_close(t, 1, side);
}

Morphism psi_iso(const Category& c, const SigEntry& e) {
    Factor base = e.obj;
    if (e.eps > 0) {
        Factor d = base;
        d.level += 1;
        return c.identity({d});
    }
    return c.pivot_iso({base});
}

}  // namespace pivotrace
