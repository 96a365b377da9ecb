#include "flowforms/multigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace flowforms {

MultiGraph MultiGraph::from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    MultiGraph g;
    g.n = n;
    g.edges.reserve(pairs.size());
    int idx = 0;
    for (auto [t, h] : pairs) {
        ++idx;
        if (t == h) throw std::invalid_argument("loop edge (" + std::to_string(t) + "," + std::to_string(h) + ") rejected");
        if (t > h) throw std::invalid_argument("edge (" + std::to_string(t) + "," + std::to_string(h) + ") must be oriented small to large");
        if (t < 1 || h > n) throw std::invalid_argument("edge (" + std::to_string(t) + "," + std::to_string(h) + ") leaves the vertex range [1," + std::to_string(n) + "]");
        g.edges.push_back(OriginalEdge{idx, t, h});
    }
    return g;
}

int AugmentedGraph::tail_of(int id) const {
    if (id <= base.edge_count()) return base.edge(id).tail;
    if (is_source_edge(id)) return source_vertex();
    return id - base.edge_count() - base.n;
}

int AugmentedGraph::head_of(int id) const {
    if (id <= base.edge_count()) return base.edge(id).head;
    if (is_source_edge(id)) return id - base.edge_count();
    return sink_vertex();
}

AugmentedGraph augment(const MultiGraph& g) { return AugmentedGraph{g}; }

void validate_prov_edge(const ProvEdge& e, const MultiGraph& g) {
    if (e.provenance.empty()) throw std::invalid_argument("empty provenance");
    int at = e.tail;
    for (int idx : e.provenance) {
        if (idx < 1 || idx > g.edge_count()) throw std::invalid_argument("provenance references unknown edge " + std::to_string(idx));
        const OriginalEdge& oe = g.edge(idx);
        if (oe.tail != at) throw std::invalid_argument("provenance is not a path at edge " + std::to_string(idx));
        at = oe.head;
    }
    if (at != e.head) throw std::invalid_argument("provenance path does not end at the edge head");
}

void NodeGraph::canonicalize() { std::sort(edges.begin(), edges.end()); }

NodeGraph NodeGraph::of(const MultiGraph& g) {
    NodeGraph node;
    node.n = g.n;
    node.edges.reserve(g.edges.size());
    for (const OriginalEdge& e : g.edges) node.edges.push_back(ProvEdge{e.tail, e.head, {e.index}});
    node.canonicalize();
    return node;
}

std::vector<Route> routes(const AugmentedGraph& ag) {
    const MultiGraph& g = ag.base;
    // adjacency sorted by (head, edge index) for a reproducible walk
    std::vector<std::vector<int>> out(static_cast<size_t>(g.n) + 1);
    for (const OriginalEdge& e : g.edges) out[static_cast<size_t>(e.tail)].push_back(e.index);
    for (auto& lst : out)
        std::sort(lst.begin(), lst.end(), [&](int a, int b) {
            const OriginalEdge &ea = g.edge(a), &eb = g.edge(b);
            if (ea.head != eb.head) return ea.head < eb.head;
            return a < b;
        });

    std::vector<Route> result;
    std::vector<int> path;
    auto dfs = [&](auto&& self, int v1, int at) -> void {
        result.push_back(Route{v1, at, path});
        for (int idx : out[static_cast<size_t>(at)]) {
            path.push_back(idx);
            self(self, v1, g.edge(idx).head);
            path.pop_back();
        }
    };
    for (int v = 1; v <= g.n; ++v) dfs(dfs, v, v);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Route> leaf_to_routes(const NodeGraph& h, const MultiGraph& g) {
    std::vector<Route> result;
    result.reserve(h.edges.size() + static_cast<size_t>(g.n));
    for (const ProvEdge& e : h.edges) {
        validate_prov_edge(e, g);
        result.push_back(Route{e.tail, e.head, e.provenance});
    }
    for (int v = 1; v <= g.n; ++v) result.push_back(Route{v, v, {}});
    std::sort(result.begin(), result.end());
    return result;
}

NodeGraph intersect_node_graphs(const NodeGraph& a, const NodeGraph& b) {
    if (a.n != b.n) throw std::invalid_argument("node graphs live on different vertex sets");
    NodeGraph ca = a, cb = b;
    ca.canonicalize();
    cb.canonicalize();
    NodeGraph out;
    out.n = a.n;
    std::set_intersection(ca.edges.begin(), ca.edges.end(), cb.edges.begin(), cb.edges.end(), std::back_inserter(out.edges));
    return out;
}

Bits route_support(const AugmentedGraph& ag, const Route& r) {
    Bits b(ag.edge_count());
    for (int id : route_aug_edges(ag, r)) b.set(id - 1);
    return b;
}

std::vector<int> route_vertices(const AugmentedGraph& ag, const Route& r) {
    std::vector<int> vs;
    vs.push_back(ag.source_vertex());
    vs.push_back(r.v1);
    for (int idx : r.path) vs.push_back(ag.base.edge(idx).head);
    vs.push_back(ag.sink_vertex());
    return vs;
}

std::vector<int> route_aug_edges(const AugmentedGraph& ag, const Route& r) {
    std::vector<int> ids;
    ids.push_back(ag.source_edge_id(r.v1));
    for (int idx : r.path) ids.push_back(idx);
    ids.push_back(ag.sink_edge_id(r.v2));
    return ids;
}

} // namespace flowforms
