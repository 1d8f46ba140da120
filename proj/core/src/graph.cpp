#include "jumploci/graph.hpp"

#include <algorithm>
#include <set>

namespace jumploci {

Graph::Graph(std::vector<std::string> vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)) {
    std::set<std::string> names(vertices_.begin(), vertices_.end());
    if (names.size() != vertices_.size()) throw input_error("duplicate vertex name");
    int n = vertex_count();
    adj_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= n) throw input_error("edge endpoint out of range");
        if (a == b) throw input_error("loops are not allowed");
        if (!seen.insert({a, b}).second) throw input_error("duplicate edge");
        adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        adj_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    }
    edges_.assign(seen.begin(), seen.end());
}

bool Graph::adjacent(int a, int b) const {
    return adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

int Graph::edge_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(a, b));
    if (it == edges_.end() || *it != std::make_pair(a, b)) return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> comp;
    for (int a = 0; a < vertex_count(); ++a)
        for (int b = a + 1; b < vertex_count(); ++b)
            if (!adjacent(a, b)) comp.emplace_back(a, b);
    return Graph(vertices_, std::move(comp));
}

std::vector<std::vector<int>> Graph::components(const std::vector<int>& subset) const {
    std::vector<std::vector<int>> out;
    std::set<int> todo(subset.begin(), subset.end());
    while (!todo.empty()) {
        std::vector<int> comp{*todo.begin()};
        todo.erase(todo.begin());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (auto it = todo.begin(); it != todo.end();) {
                if (adjacent(comp[i], *it)) {
                    comp.push_back(*it);
                    it = todo.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::induced_connected(const std::vector<int>& subset) const {
    return components(subset).size() <= 1;
}

bool Graph::is_complete() const {
    int n = vertex_count();
    return static_cast<int>(edges_.size()) == n * (n - 1) / 2;
}

int Graph::vertex_index(const std::string& name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) throw input_error("unknown vertex '" + name + "'");
    return static_cast<int>(it - vertices_.begin());
}

LabeledGraph LabeledGraph::make(Graph g, std::map<std::pair<int, int>, int> labels) {
    LabeledGraph lg;
    for (auto& [e, l] : labels) {
        if (g.edge_index(e.first, e.second) < 0) throw input_error("label on a non-edge");
        if (l < 2) throw input_error("edge labels must be >= 2");
    }
    // absent labels default to 2 (right-angled)
    for (auto [a, b] : g.edges())
        if (!labels.count({a, b})) labels[{a, b}] = 2;
    lg.graph = std::move(g);
    lg.labels = std::move(labels);
    return lg;
}

int LabeledGraph::label(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = labels.find({a, b});
    if (it == labels.end()) throw input_error("label queried on a non-edge");
    return it->second;
}

} // namespace jumploci
