#pragma once

#include <vector>

#include "jumploci/graph.hpp"
#include "jumploci/tangentcone.hpp"
#include "jumploci/words.hpp"

namespace jumploci {

/// All vertex subsets whose induced subgraph is disconnected and which are
/// maximal with that property, sorted. Throws resource_error above the
/// vertex bound.
std::vector<std::vector<int>> maximal_disconnected_subsets(const Graph& g, int vertex_bound = 16);

/// Depth-one resonance variety of the right-angled Artin group: coordinate
/// subspaces spanned by the maximal disconnected subsets.
SubspaceArrangement raag_resonance(const Graph& g, int vertex_bound = 16);

/// The same subsets, read as coordinate subtori of the character torus.
std::vector<std::vector<int>> raag_charvar_subtori(const Graph& g, int vertex_bound = 16);

/// Generators = vertices, one commutator relator per edge.
Presentation raag_presentation(const Graph& g);

/// Collapse the connected components of the odd-labeled subgraph; components
/// are joined when any original edge connects them. Component names come from
/// the smallest contained vertex.
Graph odd_contraction(const LabeledGraph& g);

struct MultipartiteResult {
    bool yes = false;
    std::vector<std::vector<int>> parts; // when yes
    std::vector<int> witness;            // induced complement path u-w-v when no
};

/// A graph is complete multipartite iff its complement is a disjoint union of
/// cliques.
MultipartiteResult is_complete_multipartite(const Graph& g);

struct RaagSerreVerdict {
    bool quasi_kahler = false;
    bool kahler = false;
    MultipartiteResult structure;
};

RaagSerreVerdict raag_serre_verdict(const Graph& g);

struct ArtinMalcevVerdict {
    bool verdict = false;
    Graph contraction;
    MultipartiteResult structure;
};

ArtinMalcevVerdict artin_malcev_verdict(const LabeledGraph& g);

} // namespace jumploci
