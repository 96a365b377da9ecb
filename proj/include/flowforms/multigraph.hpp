// Directed multigraphs on [n] with edges oriented small -> large, the
// source/sink augmentation, maximal s->t routes, and reduction-node graphs
// whose edges carry their provenance (the ordered list of original edge
// indices they are composed of).

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flowforms/bits.hpp"

namespace flowforms {

struct OriginalEdge {
    int index = 0; // 1-based identity, stable under parallel edges
    int tail = 0;
    int head = 0;

    bool operator==(const OriginalEdge&) const = default;
};

struct MultiGraph {
    int n = 0;
    std::vector<OriginalEdge> edges; // edges[k-1].index == k

    // Validates: n >= 1, 1 <= tail < head <= n. Throws std::invalid_argument.
    static MultiGraph from_edges(int n, const std::vector<std::pair<int, int>>& pairs);

    const OriginalEdge& edge(int index) const { return edges[static_cast<size_t>(index) - 1]; }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Augmented graph: vertex order s < 1 < ... < n < t with s = 0 and t = n+1.
// Augmented edge ids: 1..E are the original edges, E+v is (s,v), E+n+v is (v,t).
struct AugmentedGraph {
    MultiGraph base;

    int n() const { return base.n; }
    int edge_count() const { return base.edge_count() + 2 * base.n; }
    int source_vertex() const { return 0; }
    int sink_vertex() const { return base.n + 1; }

    int source_edge_id(int v) const { return base.edge_count() + v; }
    int sink_edge_id(int v) const { return base.edge_count() + base.n + v; }
    bool is_source_edge(int id) const { return id > base.edge_count() && id <= base.edge_count() + base.n; }
    bool is_sink_edge(int id) const { return id > base.edge_count() + base.n; }

    int tail_of(int id) const;
    int head_of(int id) const;
};

AugmentedGraph augment(const MultiGraph& g);

// An edge of a reduction-tree node. Its identity is the provenance list:
// two such edges are equal iff they are the sum of exactly the same
// original edges, in the same path order.
struct ProvEdge {
    int tail = 0;
    int head = 0;
    std::vector<int> provenance; // nonempty path of original edge indices

    bool operator==(const ProvEdge&) const = default;
    auto operator<=>(const ProvEdge&) const = default;
};

// Checks that the provenance is a directed path over g matching tail/head.
void validate_prov_edge(const ProvEdge& e, const MultiGraph& g);

struct NodeGraph {
    int n = 0;
    std::vector<ProvEdge> edges; // canonical form: sorted (multiset semantics)

    void canonicalize();
    int edge_count() const { return static_cast<int>(edges.size()); }

    // The root node: every original edge as a singleton-provenance edge.
    static NodeGraph of(const MultiGraph& g);

    bool operator==(const NodeGraph&) const = default;
    auto operator<=>(const NodeGraph&) const = default;
};

// A maximal s->t path of the augmented graph, identified by its start
// vertex and the ordered list of original edges it traverses. The entry
// edge (s,v1) and exit edge (v2,t) are implicit.
struct Route {
    int v1 = 0;
    int v2 = 0;
    std::vector<int> path; // empty for the trivial route s -> v -> t

    bool is_trivial() const { return path.empty(); }

    bool operator==(const Route& o) const { return v1 == o.v1 && path == o.path; }
    bool operator<(const Route& o) const {
        if (v1 != o.v1) return v1 < o.v1;
        if (path != o.path) return path < o.path;
        return v2 < o.v2;
    }
};

// All routes of the augmented graph, sorted by identity (v1, path).
// Includes the n trivial routes.
std::vector<Route> routes(const AugmentedGraph& ag);

// The route set of a reduction-tree node H over root graph g: the image of
// each edge (v1,v2) = e_{i1}+...+e_{il} under e -> (s,v1), e_{i1..il}, (v2,t),
// together with the n trivial routes. |result| == |E(H)| + n. Sorted.
std::vector<Route> leaf_to_routes(const NodeGraph& h, const MultiGraph& g);

// Multiset intersection; edges agree iff their provenances agree.
NodeGraph intersect_node_graphs(const NodeGraph& a, const NodeGraph& b);

// Bitmask over augmented edge ids (bit id-1) of the edges the route uses.
Bits route_support(const AugmentedGraph& ag, const Route& r);

// Vertex chain s, v1, ..., v2, t of a route, in augmented numbering.
std::vector<int> route_vertices(const AugmentedGraph& ag, const Route& r);

// Augmented edge ids along the route: (s,v1), path..., (v2,t).
std::vector<int> route_aug_edges(const AugmentedGraph& ag, const Route& r);

} // namespace flowforms
