#pragma once

#include <string>

#include "jumploci/jsonio.hpp"

namespace jumploci {
namespace fixtures {

/// 4-generator commutator-relator group whose depth-one resonance variety is
/// the irrational quadric x1^2 - 2 x2^2 = 0.
Presentation irrational_quadric();
/// Fundamental group of the complement of the real plane arrangement A(2134).
Presentation a2134();
Presentation heisenberg();
Presentation trefoil();
/// Z^n as the complete commutator-relator presentation on n generators.
Presentation free_abelian(int n);
Presentation free_group(int n);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
/// Complete graph on strands-1 vertices, label 3 on consecutive pairs, 2
/// elsewhere: the braid group on `strands` strings.
LabeledGraph braid_labeled_graph(int strands);

/// Zero cup product in rank 2g with the circle-bundle characteristic
/// variety {trivial character} encoded by the minors t_i - 1.
CupData circle_bundle_cup(int genus);
std::vector<MultiPoly> circle_bundle_minors(int genus);

/// The full named corpus as one JSON document.
Json corpus();

} // namespace fixtures
} // namespace jumploci
