#include "pivotrace/invariants.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pivotrace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInadmissible = 3;
constexpr int kExitParse = 4;

struct ExitWith {
    int code;
    std::string message;
};

bool g_records = false;

void emit(const std::string& kind, const std::vector<std::pair<std::string, std::string>>& kvs) {
    if (g_records) {
        std::cout << kind;
        for (const auto& [k, v] : kvs) std::cout << " " << k << "=\"" << v << "\"";
        std::cout << "\n";
    } else {
        std::cout << kind << ":";
        for (const auto& [k, v] : kvs) std::cout << " " << k << "=" << v;
        std::cout << "\n";
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ExitWith{kExitParse, "cannot open file: " + path};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Category make_category(const std::string& spec) {
    try {
        CategoryData data = load_category(spec);
        return Category(std::move(data));
    } catch (const HopfError& e) {
        throw ExitWith{kExitParse, e.what()};
    } catch (const CategoryError& e) {
        throw ExitWith{kExitValidation, e.what()};
    }
}

std::vector<Word> parse_words(const std::string& list) {
    std::vector<Word> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_word(item));
    }
    return out;
}

Side parse_side(const std::string& s) {
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    if (s == "two-sided" || s == "twosided") return Side::TwoSided;
    throw ExitWith{kExitParse, "unknown side '" + s + "'"};
}

// "left:{P+}" / "right:{P+,P-}" / "two-sided:{P+}"
std::pair<Side, std::vector<Word>> parse_ideal_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw ExitWith{kExitParse, "ideal spec must look like left:{P+}"};
    Side side = parse_side(spec.substr(0, colon));
    std::string rest = spec.substr(colon + 1);
    if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
        throw ExitWith{kExitParse, "ideal spec generators must be enclosed in {}"};
    return {side, parse_words(rest.substr(1, rest.size() - 2))};
}

// seed spec: "bracket:P+" (canonical bracket on an End-rank-1 object) or
// "usual" (the plain categorical trace on the generators)
TraceFamily make_seed(const Category& c, const std::string& seed, Side side, const std::vector<Word>& gens) {
    if (seed.rfind("bracket:", 0) == 0) {
        Word obj = parse_word(seed.substr(8));
        return bracket_family(c, obj, side);
    }
    if (seed == "usual") return usual_trace_family(c, side, gens);
    throw ExitWith{kExitParse, "unknown seed '" + seed + "' (expected bracket:OBJ or usual)"};
}

// "file.pd#NAME" -> (diagram, coupon table); files are cached per path
struct DiagramSource {
    std::map<std::string, DiagramFile> files;

    std::pair<const Diagram*, const CouponTable*> load(const Category& c, const std::string& ref) {
        auto hash = ref.find('#');
        if (hash == std::string::npos) throw ExitWith{kExitParse, "presentation must look like file.pd#NAME"};
        std::string path = ref.substr(0, hash), name = ref.substr(hash + 1);
        auto it = files.find(path);
        if (it == files.end()) {
            try {
                it = files.emplace(path, parse_diagram_file(read_file(path), c.field())).first;
            } catch (const DiagramError& e) {
                throw ExitWith{kExitParse, e.what()};
            }
        }
        const Diagram* d = it->second.find(name);
        if (!d) throw ExitWith{kExitParse, "no diagram named '" + name + "' in " + path};
        return {d, &it->second.coupons};
    }
};

void print_matrix(const Matrix& m) {
    for (size_t i = 0; i < m.rows(); ++i) {
        std::string row;
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) row += " ";
            row += m.at(i, j).str();
        }
        emit("ROW", {{"i", std::to_string(i)}, {"entries", row}});
    }
}

int run(int argc, char** argv) {
    CLI::App app{"pivotrace: exact computations in pivotal module categories"};
    app.require_subcommand(1);

    std::string category_spec = "sweedler";
    std::string field_spec;
    std::string output_mode = "human";
    app.add_option("--category", category_spec, "builtin name or category file path")->capture_default_str();
    app.add_option("--field", field_spec, "ground field override for builtins, e.g. 'Fp 5'");
    app.add_option("--output", output_mode, "human | records")->capture_default_str();

    auto* validate = app.add_subcommand("validate", "check all Hopf and module axioms");

    auto* eval = app.add_subcommand("eval", "evaluate a named diagram");
    std::string eval_file, eval_name;
    eval->add_option("--diagram", eval_file, "diagram file")->required();
    eval->add_option("--name", eval_name, "diagram name")->required();

    auto* solve = app.add_subcommand("solve-ambi", "solve the ambidexterity equations on a set of objects");
    std::string solve_objects, solve_mode = "left", solve_middles;
    solve->add_option("--objects", solve_objects, "comma-separated object words")->required();
    solve->add_option("--mode", solve_mode, "left | right | spherical")->capture_default_str();
    solve->add_option("--middles", solve_middles, "probe middles for spherical mode");

    auto* ideal = app.add_subcommand("ideal", "ideal membership test");
    std::string ideal_spec, ideal_test, ideal_probes;
    ideal->add_option("--spec", ideal_spec, "e.g. left:{P+}")->required();
    ideal->add_option("--test", ideal_test, "object to test")->required();
    ideal->add_option("--probes", ideal_probes, "probe words for two-sided membership");

    auto* dims_cmd = app.add_subcommand("dims", "modified dimensions under an extended trace");
    std::string dims_seed, dims_side = "left", dims_objects, dims_gens, dims_probes;
    dims_cmd->add_option("--seed", dims_seed, "bracket:OBJ or usual")->required();
    dims_cmd->add_option("--side", dims_side, "left | right | two-sided")->capture_default_str();
    dims_cmd->add_option("--objects", dims_objects, "objects to measure")->required();
    dims_cmd->add_option("--generators", dims_gens, "ideal generators (default: the seed object)");
    dims_cmd->add_option("--probes", dims_probes, "probes for two-sided membership");

    auto* slope = app.add_subcommand("slope", "slope table over the set A");
    std::string slope_seed, slope_side = "left", slope_objects, slope_gens, slope_probes;
    slope->add_option("--seed", slope_seed, "bracket:OBJ or usual")->required();
    slope->add_option("--side", slope_side, "left | right | two-sided")->capture_default_str();
    slope->add_option("--objects", slope_objects, "candidate objects for A")->required();
    slope->add_option("--generators", slope_gens, "ideal generators (default: the seed object)");
    slope->add_option("--probes", slope_probes, "probes for two-sided membership");

    auto* inv = app.add_subcommand("invariant", "graph invariant of a cutting presentation");
    std::string inv_trace, inv_pres, inv_variant = "left", inv_a;
    inv->add_option("--trace", inv_trace, "seed=bracket:OBJ,side=left[,generators=...][,probes=...]")->required();
    inv->add_option("--presentation", inv_pres, "file.pd#NAME")->required();
    inv->add_option("--variant", inv_variant, "left | right | two-sided | A")->capture_default_str();
    inv->add_option("--a-objects", inv_a, "the set A for the A-colored variant");

    auto* audit = app.add_subcommand("audit", "invariance audit across presentations");
    std::string audit_trace, audit_pres, audit_variant = "left", audit_a;
    audit->add_option("--trace", audit_trace, "trace spec as for invariant")->required();
    audit->add_option("--presentations", audit_pres, "comma-separated file.pd#NAME refs")->required();
    audit->add_option("--variant", audit_variant, "left | right | two-sided | A")->capture_default_str();
    audit->add_option("--a-objects", audit_a, "the set A");

    auto* triv = app.add_subcommand("trivalent-check", "d(V)<T> consistency across cuttings");
    std::string triv_trace, triv_pres, triv_b, triv_d, triv_a;
    triv->add_option("--trace", triv_trace, "trace spec as for invariant")->required();
    triv->add_option("--presentations", triv_pres, "cuttings of one graph, file.pd#NAME refs")->required();
    triv->add_option("--b", triv_b, "the color set B")->required();
    triv->add_option("--d", triv_d, "d-values, e.g. P+=1,P-=-1")->required();
    triv->add_option("--a-objects", triv_a, "the set A for the F_t^a comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    g_records = output_mode == "records" || output_mode == "record-per-line";

    // trace spec parser shared by invariant/audit/trivalent-check
    auto make_trace = [&](const Category& c, const std::string& spec) {
        std::string seed, side_s = "left", gens_s, probes_s;
        std::stringstream ss(spec);
        std::string part;
        std::string* last = nullptr;
        while (std::getline(ss, part, ',')) {
            auto eq = part.find('=');
            if (eq == std::string::npos) {
                // continuation of a comma-separated value (e.g. generators=A,B)
                if (!last) throw ExitWith{kExitParse, "trace spec parts must look like key=value"};
                *last += "," + part;
                continue;
            }
            std::string key = part.substr(0, eq), val = part.substr(eq + 1);
            if (key == "seed")
                last = &(seed = val);
            else if (key == "side")
                last = &(side_s = val);
            else if (key == "generators")
                last = &(gens_s = val);
            else if (key == "probes")
                last = &(probes_s = val);
            else
                throw ExitWith{kExitParse, "unknown trace spec key '" + key + "'"};
        }
        if (seed.empty()) throw ExitWith{kExitParse, "trace spec needs seed="};
        Side side = parse_side(side_s);
        std::vector<Word> gens = gens_s.empty() ? std::vector<Word>{} : parse_words(gens_s);
        if (gens.empty() && seed.rfind("bracket:", 0) == 0) gens = {parse_word(seed.substr(8))};
        if (gens.empty()) throw ExitWith{kExitParse, "trace spec needs generators= for this seed"};
        TraceFamily tf = make_seed(c, seed, side, gens);
        return ExtendedTrace(c, std::move(tf), gens, probes_s.empty() ? std::vector<Word>{} : parse_words(probes_s));
    };

    auto parse_variant = [&](const std::string& v) {
        if (v == "left") return InvariantVariant::Left;
        if (v == "right") return InvariantVariant::Right;
        if (v == "two-sided" || v == "twosided") return InvariantVariant::TwoSided;
        if (v == "A" || v == "a" || v == "A-colored") return InvariantVariant::AColored;
        throw ExitWith{kExitParse, "unknown variant '" + v + "'"};
    };

    std::string cat_spec = category_spec;
    if (!field_spec.empty() && cat_spec.rfind("group_algebra:", 0) == 0 &&
        cat_spec.find(':', std::string("group_algebra:").size()) == std::string::npos)
        cat_spec += ":" + field_spec;

    if (validate->parsed()) {
        CategoryData data;
        try {
            data = load_category(cat_spec);
        } catch (const HopfError& e) {
            throw ExitWith{kExitParse, e.what()};
        }
        std::vector<std::string> problems = validate_hopf(data.hopf);
        for (const auto& m : data.modules)
            for (const auto& p : validate_module(data.hopf, m)) problems.push_back("module " + m.name + ": " + p);
        for (const auto& p : problems) emit("VIOLATION", {{"what", p}});
        emit("RESULT", {{"category", data.name},
                        {"valid", problems.empty() ? "true" : "false"},
                        {"violations", std::to_string(problems.size())}});
        return problems.empty() ? kExitOk : kExitValidation;
    }

    Category c = make_category(cat_spec);
    DiagramSource sources;

    if (eval->parsed()) {
        auto [d, coupons] = sources.load(c, eval_file + "#" + eval_name);
        Morphism m;
        try {
            m = evaluate(c, *d, *coupons);
        } catch (const DiagramError& e) {
            throw ExitWith{kExitValidation, e.what()};
        }
        emit("MORPHISM",
             {{"name", eval_name}, {"source", word_str(m.source)}, {"target", word_str(m.target)}});
        print_matrix(m.mat);
        return kExitOk;
    }

    if (solve->parsed()) {
        std::vector<Word> objs = parse_words(solve_objects);
        AmbiMode mode = solve_mode == "left"    ? AmbiMode::Left
                        : solve_mode == "right" ? AmbiMode::Right
                        : solve_mode == "spherical"
                            ? AmbiMode::Spherical
                            : throw ExitWith{kExitParse, "unknown mode '" + solve_mode + "'"};
        auto sols = solve_ambidextrous(c, objs, mode, solve_middles.empty() ? std::vector<Word>{}
                                                                            : parse_words(solve_middles));
        emit("RESULT", {{"dimension", std::to_string(sols.size())}});
        for (size_t s = 0; s < sols.size(); ++s)
            for (size_t i = 0; i < sols[s].domain.size(); ++i) {
                std::string vals;
                for (size_t k = 0; k < sols[s].coeffs[i].size(); ++k) {
                    if (k) vals += " ";
                    vals += sols[s].coeffs[i][k].str();
                }
                emit("SOLUTION", {{"index", std::to_string(s)},
                                  {"object", word_str(sols[s].domain[i])},
                                  {"coeffs", vals}});
            }
        return kExitOk;
    }

    if (ideal->parsed()) {
        auto [side, gens] = parse_ideal_spec(ideal_spec);
        Word u = parse_word(ideal_test);
        auto w = membership(c, u, gens, side,
                            ideal_probes.empty() ? std::vector<Word>{} : parse_words(ideal_probes));
        if (w) {
            emit("RESULT", {{"member", "true"},
                            {"object", word_str(u)},
                            {"generator", word_str(w->generator)},
                            {"kernel_dim", std::to_string(w->kernel.size())}});
            if (!g_records) std::cout << "member (witness stored)\n";
        } else {
            emit("RESULT", {{"member", "false"}, {"object", word_str(u)}});
            if (!g_records) std::cout << "not found\n";
        }
        return kExitOk;
    }

    if (dims_cmd->parsed()) {
        Side side = parse_side(dims_side);
        std::vector<Word> gens = dims_gens.empty() ? std::vector<Word>{} : parse_words(dims_gens);
        if (gens.empty() && dims_seed.rfind("bracket:", 0) == 0) gens = {parse_word(dims_seed.substr(8))};
        if (gens.empty()) throw ExitWith{kExitParse, "dims needs --generators for this seed"};
        TraceFamily tf = make_seed(c, dims_seed, side, gens);
        ExtendedTrace t(c, std::move(tf), gens,
                        dims_probes.empty() ? std::vector<Word>{} : parse_words(dims_probes));
        try {
            for (const Word& v : parse_words(dims_objects))
                emit("DIM", {{"object", word_str(v)}, {"d", t.modified_dim(v).str()}});
        } catch (const ModTraceError& e) {
            throw ExitWith{kExitInadmissible, e.what()};
        }
        return kExitOk;
    }

    if (slope->parsed()) {
        Side side = parse_side(slope_side);
        std::vector<Word> gens = slope_gens.empty() ? std::vector<Word>{} : parse_words(slope_gens);
        if (gens.empty() && slope_seed.rfind("bracket:", 0) == 0) gens = {parse_word(slope_seed.substr(8))};
        if (gens.empty()) throw ExitWith{kExitParse, "slope needs --generators for this seed"};
        TraceFamily tf = make_seed(c, slope_seed, side, gens);
        ExtendedTrace t(c, std::move(tf), gens,
                        slope_probes.empty() ? std::vector<Word>{} : parse_words(slope_probes));
        std::vector<Word> a = t.compute_A(parse_words(slope_objects));
        for (const Word& v : a) emit("A", {{"object", word_str(v)}});
        auto rep = t.slope_table(a);
        for (const auto& e : rep.table)
            emit("SLOPE", {{"object", word_str(e.v)},
                           {"d", e.d.str()},
                           {"d_dual", e.d_dual.str()},
                           {"s", e.slope.str()}});
        for (const auto& n : rep.notes) emit("NOTE", {{"what", n}});
        return rep.notes.empty() ? kExitOk : kExitValidation;
    }

    if (inv->parsed()) {
        ExtendedTrace t = make_trace(c, inv_trace);
        auto [d, coupons] = sources.load(c, inv_pres);
        try {
            FieldElement v = invariant(c, t, *coupons, *d, parse_variant(inv_variant),
                                       inv_a.empty() ? std::vector<Word>{} : parse_words(inv_a));
            emit("INVARIANT", {{"presentation", d->name}, {"value", v.str()}});
        } catch (const InadmissibleError& e) {
            throw ExitWith{kExitInadmissible, e.what()};
        } catch (const ModTraceError& e) {
            throw ExitWith{kExitInadmissible, e.what()};
        }
        return kExitOk;
    }

    if (audit->parsed()) {
        ExtendedTrace t = make_trace(c, audit_trace);
        std::vector<Diagram> pres;
        const CouponTable* coupons = nullptr;
        std::stringstream ss(audit_pres);
        std::string ref;
        while (std::getline(ss, ref, ',')) {
            auto [d, cp] = sources.load(c, ref);
            pres.push_back(*d);
            coupons = cp;
        }
        if (!coupons) throw ExitWith{kExitParse, "audit needs at least one presentation"};
        std::vector<std::string> report;
        try {
            report = invariance_audit(c, t, *coupons, pres, parse_variant(audit_variant),
                                      audit_a.empty() ? std::vector<Word>{} : parse_words(audit_a));
        } catch (const InadmissibleError& e) {
            throw ExitWith{kExitInadmissible, e.what()};
        } catch (const ModTraceError& e) {
            throw ExitWith{kExitInadmissible, e.what()};
        }
        size_t gaps = 0;
        for (const auto& r : report) {
            emit("AUDIT", {{"what", r}});
            if (r.rfind("gap:", 0) == 0) ++gaps;
        }
        emit("RESULT",
             {{"violations", std::to_string(report.size() - gaps)}, {"gaps", std::to_string(gaps)}});
        return has_violations(report) ? kExitInadmissible : kExitOk;
    }

    if (triv->parsed()) {
        ExtendedTrace t = make_trace(c, triv_trace);
        TrivalentGraph g;
        g.name = "cli";
        const CouponTable* coupons = nullptr;
        std::stringstream ss(triv_pres);
        std::string ref;
        while (std::getline(ss, ref, ',')) {
            auto [d, cp] = sources.load(c, ref);
            g.cuttings.push_back(*d);
            coupons = cp;
        }
        if (!coupons) throw ExitWith{kExitParse, "trivalent-check needs at least one presentation"};
        std::map<std::string, FieldElement> dmap;
        std::stringstream ds(triv_d);
        std::string kv;
        while (std::getline(ds, kv, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw ExitWith{kExitParse, "--d entries must look like OBJ=value"};
            dmap[word_str(parse_word(kv.substr(0, eq)))] = FieldElement::parse(c.field(), kv.substr(eq + 1));
        }
        std::vector<std::string> report;
        try {
            report = trivalent_pair_check(c, t, *coupons, parse_words(triv_b), dmap, {g},
                                          triv_a.empty() ? std::vector<Word>{} : parse_words(triv_a));
        } catch (const InadmissibleError& e) {
            throw ExitWith{kExitInadmissible, e.what()};
        } catch (const ModTraceError& e) {
            throw ExitWith{kExitInadmissible, e.what()};
        }
        size_t gaps = 0;
        for (const auto& r : report) {
            emit("CHECK", {{"what", r}});
            if (r.rfind("gap:", 0) == 0) ++gaps;
        }
        emit("RESULT",
             {{"violations", std::to_string(report.size() - gaps)}, {"gaps", std::to_string(gaps)}});
        return has_violations(report) ? kExitInadmissible : kExitOk;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ExitWith& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const FieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DiagramError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CategoryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const HopfError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
