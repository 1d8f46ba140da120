#pragma once

#include <nlohmann/json.hpp>

#include "jumploci/artin.hpp"
#include "jumploci/charvar.hpp"
#include "jumploci/obstructions.hpp"

namespace jumploci {

using Json = nlohmann::json;

// All numbers cross the interface as exact strings ("-3/7", "1+2√2");
// no floating point appears in any document.

Json scalar_vector_to_json(const std::vector<Scalar>& v);
std::vector<Scalar> scalar_vector_from_json(const Json& j);

Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json cup_to_json(const CupData& c);
CupData cup_from_json(const Json& j);

Json character_to_json(const Character& rho);
Character character_from_json(const Json& j);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(int ambient, const Json& j);

Json arrangement_to_json(const SubspaceArrangement& a);
SubspaceArrangement arrangement_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json labeled_graph_to_json(const LabeledGraph& g);
LabeledGraph labeled_graph_from_json(const Json& j);

/// {"n": ..., "polys": ["(t1-1)*(t2-1)", ...]}
Json polys_to_json(const std::vector<MultiPoly>& polys, int nvars, const std::string& var_prefix);
std::pair<int, std::vector<MultiPoly>> polys_from_json(const Json& j);

Json poly_matrix_to_json(const Matrix<MultiPoly>& m, const std::string& var_prefix);

Json obstruction_report_to_json(const ObstructionReport& r);
Json cone_compare_report_to_json(const ConeCompareReport& r);
Json multipartite_to_json(const MultipartiteResult& r, const Graph& g);

/// Field access with a diagnostic naming the missing/ill-typed key.
const Json& require_field(const Json& j, const char* key);

} // namespace jumploci
