#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/errors.hpp"

namespace jumploci {

/// Finite simple graph with named, ordered vertices. Edges are stored as
/// index pairs (a < b), sorted.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int a, int b) const;
    int edge_index(int a, int b) const; // -1 if absent
    Graph complement() const;
    /// Connected components of the induced subgraph on the given vertex set
    /// (whole graph when empty == false ... pass all vertices explicitly).
    std::vector<std::vector<int>> components(const std::vector<int>& subset) const;
    bool induced_connected(const std::vector<int>& subset) const;
    bool is_complete() const;

    int vertex_index(const std::string& name) const; // throws if unknown

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<bool>> adj_;
};

/// Simple graph with an integer label >= 2 per edge.
struct LabeledGraph {
    Graph graph;
    std::map<std::pair<int, int>, int> labels; // keyed by (a<b) edge

    static LabeledGraph make(Graph g, std::map<std::pair<int, int>, int> labels);
    int label(int a, int b) const;
};

} // namespace jumploci
