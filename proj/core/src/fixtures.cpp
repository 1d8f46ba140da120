#include "jumploci/fixtures.hpp"

namespace jumploci {
namespace fixtures {

Presentation irrational_quadric() {
    return Presentation::make({"x1", "x2", "x3", "x4"},
                              {"(x1,x2)", "(x1,x4)*(x2^-2,x3)", "(x1^-1,x3)*(x2,x4)"});
}

Presentation a2134() {
    return Presentation::make({"x1", "x2", "x3", "x4"},
                              {"(x1, x3^2 x4)", "(x2,x4)", "(x3,x4)"});
}

Presentation heisenberg() {
    return Presentation::make({"x1", "x2"}, {"((x1,x2),x1)", "((x1,x2),x2)"});
}

Presentation trefoil() {
    return Presentation::make({"x", "y"}, {"x*y*x*y^-1*x^-1*y^-1"});
}

Presentation free_abelian(int n) {
    std::vector<std::string> gens;
    for (int i = 1; i <= n; ++i) gens.push_back("x" + std::to_string(i));
    std::vector<std::string> rels;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            rels.push_back("(x" + std::to_string(i) + ",x" + std::to_string(j) + ")");
    return Presentation::make(std::move(gens), rels);
}

Presentation free_group(int n) {
    std::vector<std::string> gens;
    for (int i = 1; i <= n; ++i) gens.push_back("x" + std::to_string(i));
    return Presentation::make(std::move(gens), {});
}

Graph cycle_graph(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        names.push_back("v" + std::to_string(i + 1));
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(std::move(names), std::move(edges));
}

Graph path_graph(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(std::move(names), std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(std::move(names), std::move(edges));
}

LabeledGraph braid_labeled_graph(int strands) {
    if (strands < 2) throw input_error("braid groups need at least two strings");
    Graph g = complete_graph(strands - 1);
    std::map<std::pair<int, int>, int> labels;
    for (auto [a, b] : g.edges()) labels[{a, b}] = (b - a == 1) ? 3 : 2;
    return LabeledGraph::make(std::move(g), std::move(labels));
}

CupData circle_bundle_cup(int genus) { return CupData(2 * genus, 0); }

std::vector<MultiPoly> circle_bundle_minors(int genus) {
    int n = 2 * genus;
    std::vector<MultiPoly> out;
    for (int i = 0; i < n; ++i)
        out.push_back(MultiPoly::variable(n, i) - MultiPoly::constant(n, Scalar(1)));
    return out;
}

Json corpus() {
    Json out;
    auto pres = [](const Presentation& p) {
        return Json{{"kind", "presentation"}, {"presentation", presentation_to_json(p)}};
    };
    auto cup = [](const CupData& c) { return Json{{"kind", "cup"}, {"cup", cup_to_json(c)}}; };
    auto graph = [](const Graph& g) { return Json{{"kind", "graph"}, {"graph", graph_to_json(g)}}; };

    out["irrational_quadric"] = pres(irrational_quadric());
    out["a2134"] = pres(a2134());
    out["heisenberg"] = pres(heisenberg());
    out["trefoil"] = pres(trefoil());
    out["z2"] = pres(free_abelian(2));
    out["z3"] = pres(free_abelian(3));
    out["f2"] = pres(free_group(2));
    out["f3"] = pres(free_group(3));

    out["surface_g1"] = cup(cup_surface(1, 0));
    out["surface_g2"] = cup(cup_surface(2, 0));
    out["sphere_3punct"] = cup(cup_surface(0, 3));
    out["config_torus_2"] = cup(cup_config_torus(2));
    out["config_torus_3"] = cup(cup_config_torus(3));

    out["c4"] = graph(cycle_graph(4));
    out["p3"] = graph(path_graph(3));
    out["p4"] = graph(path_graph(4));
    out["k3"] = graph(complete_graph(3));
    out["k4"] = graph(complete_graph(4));
    out["k5"] = graph(complete_graph(5));
    for (int s = 3; s <= 6; ++s)
        out["braid" + std::to_string(s)] =
            Json{{"kind", "labeled_graph"},
                 {"graph", labeled_graph_to_json(braid_labeled_graph(s))}};

    // battery input for the arrangement group: cup data plus the two claimed
    // depth-one components
    {
        CupData c = cup_from_presentation(a2134());
        Json comps = Json::array();
        comps.push_back(subspace_to_json(Subspace::kernel_of(
            4, {{Scalar(0), Scalar(0), Scalar(0), Scalar(1)}})));
        comps.push_back(subspace_to_json(Subspace::kernel_of(
            4, {{Scalar(0), Scalar(0), Scalar(2), Scalar(1)}})));
        out["a2134_battery"] =
            Json{{"kind", "battery_input"}, {"cup", cup_to_json(c)}, {"components", comps}};
    }
    // comparator input with the characteristic variety known in closed form
    {
        int genus = 2;
        out["circle_bundle_g2"] =
            Json{{"kind", "tc_compare_input"},
                 {"cup", cup_to_json(circle_bundle_cup(genus))},
                 {"minors", polys_to_json(circle_bundle_minors(genus), 2 * genus, "t")}};
    }
    return out;
}

} // namespace fixtures
} // namespace jumploci
