#include "flowforms/json_io.hpp"

#include <stdexcept>

namespace flowforms {

MultiGraph parse_graph(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json(j);
}

MultiGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON must be an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw std::invalid_argument("\"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (!j["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("each edge must be a [tail, head] integer pair");
        pairs.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return MultiGraph::from_edges(n, pairs);
}

Json graph_to_json(const MultiGraph& g) {
    Json j;
    j["n"] = g.n;
    j["edges"] = Json::array();
    for (const OriginalEdge& e : g.edges) j["edges"].push_back(Json::array({e.tail, e.head}));
    return j;
}

Json route_to_json(const Route& r) {
    Json j;
    j["v1"] = r.v1;
    j["path"] = r.path;
    j["v2"] = r.v2;
    return j;
}

Json routes_to_json(const std::vector<Route>& rs) {
    Json arr = Json::array();
    for (const Route& r : rs) arr.push_back(route_to_json(r));
    return arr;
}

Json node_graph_to_json(const NodeGraph& h) {
    NodeGraph c = h;
    c.canonicalize();
    Json arr = Json::array();
    for (const ProvEdge& e : c.edges) arr.push_back(e.provenance);
    return arr;
}

Json choice_to_json(const ReductionChoice& c) {
    Json j;
    j["vertex"] = c.vertex;
    j["in"] = c.in_edge.provenance;
    j["out"] = c.out_edge.provenance;
    return j;
}

namespace {

Json tree_node_to_json(const ReductionTreeNode* node) {
    Json j;
    j["graph"] = node_graph_to_json(node->graph);
    if (node->is_leaf()) {
        j["choice"] = nullptr;
        j["children"] = Json::array();
    } else {
        j["choice"] = choice_to_json(*node->choice);
        j["children"] = Json::array();
        for (const auto& c : node->children) j["children"].push_back(tree_node_to_json(c.get()));
    }
    return j;
}

} // namespace

Json tree_to_json(const ReductionTree& tree) {
    Json j;
    j["n"] = tree.root_graph.n;
    j["root"] = tree_node_to_json(tree.root.get());
    return j;
}

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return to_string(v);
}

Json unipoly_to_json(const UniPoly& p) {
    Json j;
    j["coeffs"] = Json::array();
    for (const Int& c : p.c) j["coeffs"].push_back(int_to_json(c));
    return j;
}

Json multivar_poly_to_json(const MultivarPoly& p) {
    Json j;
    j["terms"] = Json::array();
    for (const auto& [m, c] : p.terms) {
        Json term;
        Json xs = Json::object();
        for (const auto& [var, e] : m.x) xs[std::to_string(var.first) + "," + std::to_string(var.second)] = e;
        term["x"] = xs;
        term["beta"] = m.beta;
        term["coef"] = int_to_json(c);
        j["terms"].push_back(term);
    }
    return j;
}

Json ehrhart_poly_to_json(const EhrhartPoly& p) {
    Json j;
    j["coeffs"] = Json::array();
    for (const Rat& c : p.c) j["coeffs"].push_back(to_string(c));
    return j;
}

} // namespace flowforms
