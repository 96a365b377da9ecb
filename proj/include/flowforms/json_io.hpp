// JSON serialization of graphs, routes, node graphs, reduction trees and
// polynomials. All emitters produce deterministic, canonically ordered
// output; integers too large for 64 bits are emitted as decimal strings.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "flowforms/algebra.hpp"
#include "flowforms/ehrhart.hpp"
#include "flowforms/multigraph.hpp"
#include "flowforms/reduction.hpp"

namespace flowforms {

using Json = nlohmann::ordered_json;

// {"n": <int>, "edges": [[tail, head], ...]}; edge order fixes indices.
MultiGraph parse_graph(const std::string& text);
MultiGraph graph_from_json(const Json& j);
Json graph_to_json(const MultiGraph& g);

Json route_to_json(const Route& r);      // {"v1":..., "path":[...], "v2":...}
Json routes_to_json(const std::vector<Route>& rs);

Json node_graph_to_json(const NodeGraph& h); // array of provenance paths
Json choice_to_json(const ReductionChoice& c);
Json tree_to_json(const ReductionTree& tree);

Json int_to_json(const Int& v);
Json unipoly_to_json(const UniPoly& p);          // {"coeffs":[c0, c1, ...]}
Json multivar_poly_to_json(const MultivarPoly& p); // {"terms":[{"x":{"i,j":e,...},"beta":b,"coef":c},...]}
Json ehrhart_poly_to_json(const EhrhartPoly& p); // rational coefficients as strings

} // namespace flowforms
