// The local reduction move on node graphs, reduction trees built under the
// canonical order (smallest nonalternating vertex, first-ranked in/out edge),
// under caller-supplied initial edge orders, or under seeded random choices,
// and leaf extraction.

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "flowforms/multigraph.hpp"

namespace flowforms {

// Initial total orders on the original edges incident to each vertex:
// in_rank[v] lists the edges with head v, out_rank[v] the edges with tail v,
// most-preferred first. The default ranks incoming edges by tail then index
// and outgoing edges by head then index. Any fixed choice is a valid order
// for the whole calculus; the triangulation framing is derived from the same
// object so the two always agree.
struct FramingSpec {
    std::vector<std::vector<int>> in_rank;  // [0..n], index 0 unused
    std::vector<std::vector<int>> out_rank;

    static FramingSpec canonical(const MultiGraph& g);
};

// A node graph together with the per-vertex in/out orders of its edges.
// Orders hold positions into graph.edges, which therefore stays in stable
// (non-canonical) order for the lifetime of the node.
struct OrderedNode {
    NodeGraph graph;
    std::vector<std::vector<int>> in_order;  // [v] -> edge positions, rank order
    std::vector<std::vector<int>> out_order;

    static OrderedNode root(const MultiGraph& g, const FramingSpec& spec);
};

// A reduction site: positions (into the node's edge list) of the in-edge
// (i,j) and out-edge (j,k) at vertex j.
struct ChoicePos {
    int vertex = 0;
    int in_pos = 0;
    int out_pos = 0;
};

struct ReductionChoice {
    int vertex = 0;
    ProvEdge in_edge;  // (i, j)
    ProvEdge out_edge; // (j, k)
};

enum class ChildKind { G1 = 0, G3 = 1, G2 = 2 }; // stored in planar order G1, G3, G2

bool is_alternating(const NodeGraph& node);

// The reduction on edges (i,j),(j,k): returns {G1, G3, G2} where
//   E(G1) = E \ {(j,k)} u {(i,k)}
//   E(G2) = E \ {(i,j)} u {(i,k)}
//   E(G3) = E \ {(i,j),(j,k)} u {(i,k)}
// and the new edge's provenance is prov(i,j) followed by prov(j,k).
// Throws std::invalid_argument if either edge is missing or i<j<k fails.
std::array<NodeGraph, 3> reduce_step(const NodeGraph& node, const ReductionChoice& choice);

// The canonical next site: smallest nonalternating vertex, first-ranked
// in-edge and out-edge. Empty if the node is alternating.
std::optional<ChoicePos> sigma_next(const OrderedNode& node);

// Child node with orders propagated: surviving edges keep their relative
// order; the new edge (i,k) takes the rank of a dropped edge, or directly
// precedes a kept one, at each of its two endpoints.
OrderedNode propagate_order(const OrderedNode& parent, const ChoicePos& c, ChildKind which);

ReductionChoice materialize_choice(const OrderedNode& node, const ChoicePos& c);

struct ReductionStrategy {
    enum class Kind { Sigma, Random };
    Kind kind = Kind::Sigma;
    std::optional<FramingSpec> framing; // Sigma: defaults to FramingSpec::canonical
    std::uint64_t seed = 0;             // Random

    static ReductionStrategy sigma() { return {}; }
    static ReductionStrategy sigma_with(FramingSpec spec) {
        ReductionStrategy s;
        s.framing = std::move(spec);
        return s;
    }
    static ReductionStrategy random(std::uint64_t seed) {
        ReductionStrategy s;
        s.kind = Kind::Random;
        s.seed = seed;
        return s;
    }
};

struct ReductionTreeNode {
    NodeGraph graph; // canonical form
    std::optional<ReductionChoice> choice;
    std::array<std::unique_ptr<ReductionTreeNode>, 3> children; // G1, G3, G2

    bool is_leaf() const { return !choice.has_value(); }
};

struct ReductionTree {
    MultiGraph root_graph;
    std::unique_ptr<ReductionTreeNode> root;
};

// Builds the complete reduction tree; every leaf is alternating. Under the
// Sigma strategy the tree is a deterministic function of (graph, framing).
ReductionTree build_reduction_tree(const MultiGraph& g, const ReductionStrategy& strategy);

// Leaves in depth-first order (children visited G1, G3, G2).
std::vector<NodeGraph> leaves(const ReductionTree& tree);

// r[k] = number of leaves with k edges, k = 0..|E(root)|. Leaves with
// |E(root)| edges are the full-dimensional ones.
std::vector<long long> leaf_counts(const ReductionTree& tree);

std::vector<NodeGraph> full_dimensional_leaves(const ReductionTree& tree);

int tree_depth(const ReductionTree& tree);

// Every reduction strictly decreases m*(m0*2^(n-1)+1) - sum_e 2^(head-tail),
// so the depth of any reduction tree is bounded by the root's measure.
long long depth_bound(const MultiGraph& g);

} // namespace flowforms
