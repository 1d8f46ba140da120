#include "jumploci/jsonio.hpp"

#include <algorithm>

namespace jumploci {

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw input_error("missing field '" + std::string(key) + "'");
    return j.at(key);
}

namespace {

std::string require_string(const Json& j, const char* what) {
    if (!j.is_string()) throw input_error(std::string("field '") + what + "' must be a string");
    return j.get<std::string>();
}

int require_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw input_error(std::string("field '") + what + "' must be an integer");
    return j.get<int>();
}

} // namespace

Json scalar_vector_to_json(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const Scalar& s : v) out.push_back(s.str());
    return out;
}

std::vector<Scalar> scalar_vector_from_json(const Json& j) {
    if (!j.is_array()) throw input_error("expected an array of scalar strings");
    std::vector<Scalar> out;
    for (const Json& e : j) out.push_back(Scalar::parse(require_string(e, "scalar")));
    return out;
}

Json presentation_to_json(const Presentation& p) {
    Json out;
    out["generators"] = p.generators;
    Json rel = Json::array();
    for (const GroupWord& w : p.relators) rel.push_back(w.str(p.generators));
    out["relators"] = rel;
    return out;
}

Presentation presentation_from_json(const Json& j) {
    std::vector<std::string> gens;
    for (const Json& g : require_field(j, "generators")) gens.push_back(require_string(g, "generators"));
    std::vector<std::string> rels;
    for (const Json& r : require_field(j, "relators")) rels.push_back(require_string(r, "relators"));
    return Presentation::make(std::move(gens), rels);
}

Json cup_to_json(const CupData& c) {
    Json out;
    out["n"] = c.h1_dim();
    out["m"] = c.h2_dim();
    Json mu = Json::array();
    for (int i = 0; i < c.h1_dim(); ++i)
        for (int j = i + 1; j < c.h1_dim(); ++j) {
            const auto& coeffs = c.mu_pair(i, j);
            bool nonzero = std::any_of(coeffs.begin(), coeffs.end(),
                                       [](const Scalar& s) { return !s.is_zero(); });
            if (!nonzero) continue;
            mu.push_back(Json::array({i + 1, j + 1, scalar_vector_to_json(coeffs)}));
        }
    out["mu"] = mu;
    return out;
}

CupData cup_from_json(const Json& j) {
    int n = require_int(require_field(j, "n"), "n");
    int m = require_int(require_field(j, "m"), "m");
    CupData c(n, m);
    for (const Json& entry : require_field(j, "mu")) {
        if (!entry.is_array() || entry.size() != 3) throw input_error("mu entries are [i, j, coeffs]");
        int i = require_int(entry[0], "mu[0]") - 1; // interfaces are 1-based
        int jj = require_int(entry[1], "mu[1]") - 1;
        std::vector<Scalar> coeffs = scalar_vector_from_json(entry[2]);
        if (static_cast<int>(coeffs.size()) != m)
            throw input_error("mu coefficient vector length differs from m");
        c.set_mu(i, jj, std::move(coeffs));
    }
    return c;
}

Json character_to_json(const Character& rho) { return Json{{"t", scalar_vector_to_json(rho.t)}}; }

Character character_from_json(const Json& j) {
    return Character::make(scalar_vector_from_json(require_field(j, "t")));
}

Json subspace_to_json(const Subspace& s) {
    Json out = Json::array();
    for (const auto& v : s.basis()) out.push_back(scalar_vector_to_json(v));
    return out;
}

Subspace subspace_from_json(int ambient, const Json& j) {
    if (!j.is_array()) throw input_error("a subspace is an array of basis vectors");
    std::vector<std::vector<Scalar>> vectors;
    for (const Json& v : j) vectors.push_back(scalar_vector_from_json(v));
    return Subspace::span(ambient, vectors);
}

Json arrangement_to_json(const SubspaceArrangement& a) {
    Json subs = Json::array();
    for (const Subspace& s : a.parts()) subs.push_back(subspace_to_json(s));
    return Json{{"n", a.ambient()}, {"subspaces", subs}};
}

SubspaceArrangement arrangement_from_json(const Json& j) {
    int n = require_int(require_field(j, "n"), "n");
    std::vector<Subspace> parts;
    for (const Json& s : require_field(j, "subspaces")) parts.push_back(subspace_from_json(n, s));
    return SubspaceArrangement::from_parts(n, std::move(parts));
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [a, b] : g.edges())
        edges.push_back(Json::array({g.vertices()[static_cast<std::size_t>(a)],
                                     g.vertices()[static_cast<std::size_t>(b)]}));
    return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    std::vector<std::string> names;
    for (const Json& v : require_field(j, "vertices")) names.push_back(require_string(v, "vertices"));
    Graph lookup(names, {});
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : require_field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw input_error("edges are [name, name] pairs");
        edges.emplace_back(lookup.vertex_index(require_string(e[0], "edges")),
                           lookup.vertex_index(require_string(e[1], "edges")));
    }
    return Graph(std::move(names), std::move(edges));
}

Json labeled_graph_to_json(const LabeledGraph& g) {
    Json out = graph_to_json(g.graph);
    Json labels = Json::object();
    for (const auto& [e, l] : g.labels) {
        std::string key = g.graph.vertices()[static_cast<std::size_t>(e.first)] + "," +
                          g.graph.vertices()[static_cast<std::size_t>(e.second)];
        labels[key] = l;
    }
    out["labels"] = labels;
    return out;
}

LabeledGraph labeled_graph_from_json(const Json& j) {
    Graph g = graph_from_json(j);
    std::map<std::pair<int, int>, int> labels;
    if (j.contains("labels")) {
        const Json& lab = j.at("labels");
        if (!lab.is_object()) throw input_error("'labels' must be an object keyed by \"u,v\"");
        for (auto it = lab.begin(); it != lab.end(); ++it) {
            std::string key = it.key();
            std::size_t comma = key.find(',');
            if (comma == std::string::npos) throw input_error("label key must be \"u,v\"");
            int a = g.vertex_index(key.substr(0, comma));
            int b = g.vertex_index(key.substr(comma + 1));
            if (a > b) std::swap(a, b);
            labels[{a, b}] = require_int(it.value(), "labels");
        }
    }
    return LabeledGraph::make(std::move(g), std::move(labels));
}

Json polys_to_json(const std::vector<MultiPoly>& polys, int nvars, const std::string& var_prefix) {
    Json arr = Json::array();
    for (const MultiPoly& f : polys) arr.push_back(f.str(var_prefix));
    return Json{{"n", nvars}, {"polys", arr}};
}

std::pair<int, std::vector<MultiPoly>> polys_from_json(const Json& j) {
    int n = require_int(require_field(j, "n"), "n");
    std::vector<MultiPoly> polys;
    for (const Json& f : require_field(j, "polys"))
        polys.push_back(MultiPoly::parse(require_string(f, "polys"), n));
    return {n, std::move(polys)};
}

Json poly_matrix_to_json(const Matrix<MultiPoly>& m, const std::string& var_prefix) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str(var_prefix));
        rows.push_back(row);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"vars", var_prefix}, {"entries", rows}};
}

Json obstruction_report_to_json(const ObstructionReport& r) {
    Json witnesses = Json::array();
    for (const ObstructionWitness& w : r.witnesses) {
        Json jw;
        jw["test"] = w.test;
        if (w.component_a >= 0) jw["component"] = w.component_a + 1;
        if (w.component_b >= 0) jw["component_other"] = w.component_b + 1;
        if (w.k >= 0) jw["k"] = w.k;
        if (!w.point.empty()) jw["point"] = scalar_vector_to_json(w.point);
        if (!w.note.empty()) jw["note"] = w.note;
        witnesses.push_back(jw);
    }
    return Json{{"verdicts",
                 Json{{"rational_linearity", to_string(r.rational_linearity)},
                      {"isotropicity", to_string(r.isotropicity)},
                      {"pairwise_intersection", to_string(r.pairwise_intersection)},
                      {"filtration_by_dimension", to_string(r.filtration_by_dimension)}}},
                {"free_quotient_expected", r.free_quotient_expected},
                {"all_pass", r.all_pass()},
                {"witnesses", witnesses}};
}

Json cone_compare_report_to_json(const ConeCompareReport& r) {
    Json out;
    out["verdict"] = to_string(r.verdict);
    out["k"] = r.k;
    out["tangent_cone"] = arrangement_to_json(r.tangent_cone);
    if (r.uncontained_component)
        out["uncontained_component"] = static_cast<int>(*r.uncontained_component) + 1;
    Json pts = Json::array();
    for (const auto& p : r.extra_points) pts.push_back(scalar_vector_to_json(p));
    out["extra_points"] = pts;
    return out;
}

Json multipartite_to_json(const MultipartiteResult& r, const Graph& g) {
    Json out;
    out["complete_multipartite"] = r.yes;
    if (r.yes) {
        Json parts = Json::array();
        for (const auto& part : r.parts) {
            Json p = Json::array();
            for (int v : part) p.push_back(g.vertices()[static_cast<std::size_t>(v)]);
            parts.push_back(p);
        }
        out["parts"] = parts;
    } else {
        Json w = Json::array();
        for (int v : r.witness) w.push_back(g.vertices()[static_cast<std::size_t>(v)]);
        out["witness_path"] = w;
    }
    return out;
}

} // namespace jumploci
