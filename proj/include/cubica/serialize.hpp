#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "cubica/forms.hpp"
#include "cubica/groupoid.hpp"
#include "cubica/suites.hpp"

namespace cubica {

// UTF-8 JSON wire formats.  Key order is fixed (ordered_json) and rationals
// are only ever serialized as "p/q", so reports are byte-reproducible.
using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("parse error in '" + path + "': " + e.what());
    }
}

inline Rational rational_from_json(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": rational must be a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

// --- polynomials: a list of terms {"coeff": "p/q", "exps": [e1,...,en]} ---

inline Json poly_to_json(const Poly<Rational>& p) {
    Json terms = Json::array();
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        Json t;
        t["coeff"] = to_wire(it->second);
        t["exps"] = it->first;
        terms.push_back(std::move(t));
    }
    return terms;
}

inline Poly<Rational> poly_from_json(const Json& j, int vars, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": polynomial must be a list of terms");
    Poly<Rational> p = poly_zero<Rational>(vars);
    int k = 0;
    for (const auto& t : j) {
        const std::string at = where + ".terms[" + std::to_string(k++) + "]";
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
            throw ParseError(at + ": term needs \"coeff\" and \"exps\"");
        Exps e;
        for (const auto& x : t["exps"]) {
            if (!x.is_number_unsigned()) throw ParseError(at + ".exps: nonnegative integers");
            e.push_back(x.get<unsigned>());
        }
        if (static_cast<int>(e.size()) != vars)
            throw ParseError(at + ".exps: expected " + std::to_string(vars) + " entries");
        p.add_term(e, rational_from_json(t["coeff"], at + ".coeff"));
    }
    return p;
}

// --- singular cubes: {"dim_in": k, "dim_out": m, "components": [poly,...]} ---

inline Json cube_to_json(const SingularCube<Rational>& f) {
    Json j;
    j["dim_in"] = f.dim();
    j["dim_out"] = f.ambient();
    Json comps = Json::array();
    for (const auto& c : f.map.comps) comps.push_back(poly_to_json(c));
    j["components"] = std::move(comps);
    return j;
}

inline SingularCube<Rational> cube_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("dim_in") || !j.contains("dim_out") ||
        !j.contains("components"))
        throw ParseError(where + ": cube needs dim_in, dim_out, components");
    const int k = j["dim_in"].get<int>();
    const int m = j["dim_out"].get<int>();
    if (k < 0 || m < 1) throw ParseError(where + ": invalid cube dimensions");
    std::vector<Poly<Rational>> comps;
    int idx = 0;
    for (const auto& c : j["components"])
        comps.push_back(poly_from_json(c, k, where + ".components[" + std::to_string(idx++) + "]"));
    if (static_cast<int>(comps.size()) != m)
        throw ParseError(where + ": expected dim_out components");
    return make_cube(make_poly_map(k, std::move(comps)));
}

// --- forms: {"dim": m, "degree": k, "terms": [{"axes": [...], "poly": [...]}]} ---

inline Json form_to_json(const ClassicalForm<Rational>& w) {
    Json j;
    j["dim"] = w.dim;
    j["degree"] = w.degree;
    Json terms = Json::array();
    for (const auto& [axes, c] : w.terms) {
        Json t;
        t["axes"] = axes;
        t["poly"] = poly_to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline ClassicalForm<Rational> form_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("degree") || !j.contains("terms"))
        throw ParseError(where + ": form needs dim, degree, terms");
    ClassicalForm<Rational> w = form_zero<Rational>(j["dim"].get<int>(), j["degree"].get<int>());
    int idx = 0;
    for (const auto& t : j["terms"]) {
        const std::string at = where + ".terms[" + std::to_string(idx++) + "]";
        if (!t.is_object() || !t.contains("axes") || !t.contains("poly"))
            throw ParseError(at + ": term needs axes and poly");
        Axes axes;
        for (const auto& a : t["axes"]) axes.push_back(a.get<int>());
        try {
            form_add_term(w, axes, poly_from_json(t["poly"], w.dim, at + ".poly"));
        } catch (const DimensionError& e) {
            throw ParseError(at + ": " + e.what());
        }
    }
    return w;
}

// --- Weil elements: {"base": ["p/q"], "nil": [{"monomial": [[a,i],...], "coeff": "p/q"}]} ---

inline Json weil_to_json(const WeilElement& e) {
    Json j;
    j["base"] = Json::array({to_wire(e.scalar_part())});
    Json nil = Json::array();
    for (const auto& [mono, c] : e.nil_terms()) {
        Json t;
        Json m = Json::array();
        for (const auto& g : mono) m.push_back(Json::array({g.slot, g.coord}));
        t["monomial"] = std::move(m);
        t["coeff"] = to_wire(c);
        nil.push_back(std::move(t));
    }
    j["nil"] = std::move(nil);
    return j;
}

// --- pipes: {"base": [...], "dim": n, "displacements": "symbolic"|{"scaled": [...]}} ---

inline Simplex pipe_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("base") || !j.contains("dim") ||
        !j.contains("displacements"))
        throw ParseError(where + ": pipe needs base, dim, displacements");
    std::vector<Rational> base;
    for (const auto& b : j["base"]) base.push_back(rational_from_json(b, where + ".base"));
    if (base.empty()) throw ParseError(where + ".base: at least one coordinate");
    const int n = j["dim"].get<int>();
    if (n < 0) throw ParseError(where + ".dim: nonnegative");
    const auto& d = j["displacements"];
    const WeilContext ctx = make_context(n, static_cast<int>(base.size()));
    if (d.is_string() && d.get<std::string>() == "symbolic")
        return generic_simplex(ctx, 0, base, n);
    if (d.is_object() && d.contains("scaled")) {
        std::vector<Rational> scales;
        for (const auto& s : d["scaled"])
            scales.push_back(rational_from_json(s, where + ".displacements.scaled"));
        if (static_cast<int>(scales.size()) != n)
            throw ParseError(where + ".displacements.scaled: one scale per vertex");
        return scaled_simplex(ctx, 0, base, n, scales);
    }
    throw ParseError(where + ".displacements: \"symbolic\" or {\"scaled\": [...]} expected");
}

// --- graphs and cube diagrams ---

inline Graph graph_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError(where + ": graph needs vertices and edges");
    Graph g;
    for (const auto& v : j["vertices"]) g.vertices.push_back(v.get<std::string>());
    for (const auto& e : j["edges"]) {
        if (!e.contains("id") || !e.contains("src") || !e.contains("dst"))
            throw ParseError(where + ".edges: each edge needs id, src, dst");
        g.edges.push_back({e["id"].get<std::string>(), e["src"].get<std::string>(),
                           e["dst"].get<std::string>()});
    }
    return g;
}

// Words: [["edge", "+"|"-"], ...].
inline Json word_to_json(const Graph& g, const FreeArrow& a) {
    Json j = Json::array();
    for (const auto& l : a.word)
        j.push_back(Json::array({g.edges.at(l.edge).id, l.fwd ? "+" : "-"}));
    return j;
}

inline FreeArrow word_from_json(const Graph& g, const std::string& src, const Json& j,
                                const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": word must be a list of [edge, dir] pairs");
    std::vector<Letter> raw;
    for (const auto& l : j) {
        if (!l.is_array() || l.size() != 2)
            throw ParseError(where + ": each letter is [\"edge\", \"+\"|\"-\"]");
        const std::string dir = l[1].get<std::string>();
        if (dir != "+" && dir != "-") throw ParseError(where + ": direction must be + or -");
        try {
            raw.push_back(Letter{g.edge_index(l[0].get<std::string>()), dir == "+"});
        } catch (const DimensionError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    try {
        return word_reduce(g, src, raw);
    } catch (const CompositionError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

// Cube diagrams over a free groupoid: twelve entries keyed "01","02",...;
// values are generator names.  Distinct edges of the cube graph have
// distinct endpoints, so sharing a label across two keys cannot chain and
// is rejected.
inline std::pair<FreeGroupoid, CubeDiagram<FreeGroupoid>> cube_diagram_from_json(
    const Json& j, const std::string& where) {
    const Json& map = j.is_object() && j.contains("edges") ? j["edges"] : j;
    if (!map.is_object()) throw ParseError(where + ": expected an object of edge labels");
    Graph g;
    for (char v = '0'; v <= '7'; ++v) g.vertices.push_back(std::string(1, v));
    std::map<std::string, std::string> names;
    for (const auto& key : cube_edge_keys()) {
        if (!map.contains(key)) throw ParseError(where + ": missing edge \"" + key + "\"");
        const std::string name = map[key].is_string() ? map[key].get<std::string>() : key;
        for (const auto& [k2, n2] : names)
            if (n2 == name)
                throw ParseError(where + ": label \"" + name + "\" reused for edges " + k2 +
                                 " and " + key + " (cannot chain)");
        names[key] = name;
        g.edges.push_back({name, std::string(1, key[0]), std::string(1, key[1])});
    }
    FreeGroupoid gpd{std::move(g)};
    CubeDiagram<FreeGroupoid> d;
    for (const auto& key : cube_edge_keys()) d.edges.emplace(key, gpd.generator(names[key]));
    validate_cube_diagram(gpd, d);
    return {std::move(gpd), std::move(d)};
}

// --- reports ---

inline Json report_to_json(const Report& r) {
    Json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["pass"] = r.all_pass();
    Json cases = Json::array();
    std::vector<const CaseResult*> sorted;
    for (const auto& c : r.cases) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CaseResult* a, const CaseResult* b) { return a->id < b->id; });
    for (const CaseResult* c : sorted) {
        Json e;
        e["case"] = c->id;
        e["pass"] = c->pass;
        if (!c->lhs.empty()) e["lhs"] = c->lhs;
        if (!c->rhs.empty()) e["rhs"] = c->rhs;
        if (!c->witness.empty()) e["witness"] = c->witness;
        cases.push_back(std::move(e));
    }
    j["cases"] = std::move(cases);
    return j;
}

}  // namespace cubica
