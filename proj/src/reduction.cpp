#include "flowforms/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace flowforms {

FramingSpec FramingSpec::canonical(const MultiGraph& g) {
    FramingSpec spec;
    spec.in_rank.assign(static_cast<size_t>(g.n) + 1, {});
    spec.out_rank.assign(static_cast<size_t>(g.n) + 1, {});
    for (const OriginalEdge& e : g.edges) {
        spec.in_rank[static_cast<size_t>(e.head)].push_back(e.index);
        spec.out_rank[static_cast<size_t>(e.tail)].push_back(e.index);
    }
    for (int v = 1; v <= g.n; ++v) {
        auto& in = spec.in_rank[static_cast<size_t>(v)];
        std::sort(in.begin(), in.end(), [&](int a, int b) {
            if (g.edge(a).tail != g.edge(b).tail) return g.edge(a).tail < g.edge(b).tail;
            return a < b;
        });
        auto& out = spec.out_rank[static_cast<size_t>(v)];
        std::sort(out.begin(), out.end(), [&](int a, int b) {
            if (g.edge(a).head != g.edge(b).head) return g.edge(a).head < g.edge(b).head;
            return a < b;
        });
    }
    return spec;
}

OrderedNode OrderedNode::root(const MultiGraph& g, const FramingSpec& spec) {
    OrderedNode node;
    node.graph.n = g.n;
    node.graph.edges.reserve(g.edges.size());
    for (const OriginalEdge& e : g.edges) node.graph.edges.push_back(ProvEdge{e.tail, e.head, {e.index}});
    node.in_order.assign(static_cast<size_t>(g.n) + 1, {});
    node.out_order.assign(static_cast<size_t>(g.n) + 1, {});
    for (int v = 1; v <= g.n; ++v) {
        for (int idx : spec.in_rank[static_cast<size_t>(v)]) node.in_order[static_cast<size_t>(v)].push_back(idx - 1);
        for (int idx : spec.out_rank[static_cast<size_t>(v)]) node.out_order[static_cast<size_t>(v)].push_back(idx - 1);
    }
    return node;
}

bool is_alternating(const NodeGraph& node) {
    std::vector<char> has_in(static_cast<size_t>(node.n) + 1, 0), has_out(static_cast<size_t>(node.n) + 1, 0);
    for (const ProvEdge& e : node.edges) {
        has_out[static_cast<size_t>(e.tail)] = 1;
        has_in[static_cast<size_t>(e.head)] = 1;
    }
    for (int v = 1; v <= node.n; ++v)
        if (has_in[static_cast<size_t>(v)] && has_out[static_cast<size_t>(v)]) return false;
    return true;
}

static ProvEdge merged_edge(const ProvEdge& in_edge, const ProvEdge& out_edge) {
    ProvEdge e;
    e.tail = in_edge.tail;
    e.head = out_edge.head;
    e.provenance = in_edge.provenance;
    e.provenance.insert(e.provenance.end(), out_edge.provenance.begin(), out_edge.provenance.end());
    return e;
}

std::array<NodeGraph, 3> reduce_step(const NodeGraph& node, const ReductionChoice& choice) {
    const int j = choice.vertex;
    if (choice.in_edge.head != j || choice.out_edge.tail != j)
        throw std::invalid_argument("reduction edges are not incident at the chosen vertex");
    if (!(choice.in_edge.tail < j && j < choice.out_edge.head))
        throw std::invalid_argument("reduction edges are not nonalternating at the chosen vertex");
    auto find = [&](const ProvEdge& e) {
        auto it = std::find(node.edges.begin(), node.edges.end(), e);
        if (it == node.edges.end()) throw std::invalid_argument("reduction edge is absent from the node graph");
        return static_cast<int>(it - node.edges.begin());
    };
    const int in_pos = find(choice.in_edge);
    const int out_pos = find(choice.out_edge);
    const ProvEdge fresh = merged_edge(choice.in_edge, choice.out_edge);

    auto make = [&](bool drop_in, bool drop_out) {
        NodeGraph child;
        child.n = node.n;
        for (int p = 0; p < node.edge_count(); ++p) {
            if (drop_in && p == in_pos) continue;
            if (drop_out && p == out_pos) continue;
            child.edges.push_back(node.edges[static_cast<size_t>(p)]);
        }
        child.edges.push_back(fresh);
        child.canonicalize();
        return child;
    };
    // stored in planar order G1, G3, G2
    return {make(false, true), make(true, true), make(true, false)};
}

std::optional<ChoicePos> sigma_next(const OrderedNode& node) {
    for (int v = 1; v <= node.graph.n; ++v) {
        const auto& in = node.in_order[static_cast<size_t>(v)];
        const auto& out = node.out_order[static_cast<size_t>(v)];
        if (!in.empty() && !out.empty()) return ChoicePos{v, in.front(), out.front()};
    }
    return std::nullopt;
}

ReductionChoice materialize_choice(const OrderedNode& node, const ChoicePos& c) {
    ReductionChoice rc;
    rc.vertex = c.vertex;
    rc.in_edge = node.graph.edges[static_cast<size_t>(c.in_pos)];
    rc.out_edge = node.graph.edges[static_cast<size_t>(c.out_pos)];
    return rc;
}

OrderedNode propagate_order(const OrderedNode& parent, const ChoicePos& c, ChildKind which) {
    const ProvEdge& in_edge = parent.graph.edges[static_cast<size_t>(c.in_pos)];   // (i, j)
    const ProvEdge& out_edge = parent.graph.edges[static_cast<size_t>(c.out_pos)]; // (j, k)
    const int i = in_edge.tail;
    const int k = out_edge.head;
    const bool drop_in = (which != ChildKind::G1);
    const bool drop_out = (which != ChildKind::G2);

    OrderedNode child;
    child.graph.n = parent.graph.n;
    std::vector<int> remap(parent.graph.edges.size(), -1);
    for (int p = 0; p < parent.graph.edge_count(); ++p) {
        if (drop_in && p == c.in_pos) continue;
        if (drop_out && p == c.out_pos) continue;
        remap[static_cast<size_t>(p)] = child.graph.edge_count();
        child.graph.edges.push_back(parent.graph.edges[static_cast<size_t>(p)]);
    }
    const int new_pos = child.graph.edge_count();
    child.graph.edges.push_back(merged_edge(in_edge, out_edge));

    child.in_order.assign(parent.in_order.size(), {});
    child.out_order.assign(parent.out_order.size(), {});
    for (int v = 1; v <= parent.graph.n; ++v) {
        for (int p : parent.in_order[static_cast<size_t>(v)]) {
            if (v == k && p == c.out_pos) {
                // slot of (j,k) in in(k): the new edge replaces it when it is
                // dropped and directly precedes it when it is kept
                child.in_order[static_cast<size_t>(v)].push_back(new_pos);
                if (!drop_out) child.in_order[static_cast<size_t>(v)].push_back(remap[static_cast<size_t>(p)]);
            } else if (remap[static_cast<size_t>(p)] >= 0) {
                child.in_order[static_cast<size_t>(v)].push_back(remap[static_cast<size_t>(p)]);
            }
        }
        for (int p : parent.out_order[static_cast<size_t>(v)]) {
            if (v == i && p == c.in_pos) {
                // slot of (i,j) in out(i), same rule
                child.out_order[static_cast<size_t>(v)].push_back(new_pos);
                if (!drop_in) child.out_order[static_cast<size_t>(v)].push_back(remap[static_cast<size_t>(p)]);
            } else if (remap[static_cast<size_t>(p)] >= 0) {
                child.out_order[static_cast<size_t>(v)].push_back(remap[static_cast<size_t>(p)]);
            }
        }
    }
#ifndef NDEBUG
    // every edge ranked exactly once at each of its endpoints
    for (int p = 0; p < child.graph.edge_count(); ++p) {
        const ProvEdge& e = child.graph.edges[static_cast<size_t>(p)];
        const auto& in = child.in_order[static_cast<size_t>(e.head)];
        const auto& out = child.out_order[static_cast<size_t>(e.tail)];
        assert(std::count(in.begin(), in.end(), p) == 1);
        assert(std::count(out.begin(), out.end(), p) == 1);
    }
#endif
    return child;
}

namespace {

std::optional<ChoicePos> random_next(const OrderedNode& node, std::mt19937_64& rng) {
    std::vector<int> candidates;
    for (int v = 1; v <= node.graph.n; ++v)
        if (!node.in_order[static_cast<size_t>(v)].empty() && !node.out_order[static_cast<size_t>(v)].empty())
            candidates.push_back(v);
    if (candidates.empty()) return std::nullopt;
    const int v = candidates[rng() % candidates.size()];
    const auto& in = node.in_order[static_cast<size_t>(v)];
    const auto& out = node.out_order[static_cast<size_t>(v)];
    return ChoicePos{v, in[rng() % in.size()], out[rng() % out.size()]};
}

std::unique_ptr<ReductionTreeNode> build_rec(const OrderedNode& node, const ReductionStrategy& strategy,
                                             std::mt19937_64& rng, long long depth, long long bound) {
    if (depth > bound) throw std::logic_error("reduction tree exceeded its termination bound");
    auto tn = std::make_unique<ReductionTreeNode>();
    tn->graph = node.graph;
    tn->graph.canonicalize();

    std::optional<ChoicePos> pos = (strategy.kind == ReductionStrategy::Kind::Sigma)
                                       ? sigma_next(node)
                                       : random_next(node, rng);
    if (!pos) return tn;

    tn->choice = materialize_choice(node, *pos);
    const ChildKind order[3] = {ChildKind::G1, ChildKind::G3, ChildKind::G2};
    for (int slot = 0; slot < 3; ++slot) {
        OrderedNode child = propagate_order(node, *pos, order[slot]);
        tn->children[static_cast<size_t>(slot)] = build_rec(child, strategy, rng, depth + 1, bound);
    }
    return tn;
}

} // namespace

long long depth_bound(const MultiGraph& g) {
    const long long m = g.edge_count();
    long long span_max = 1;
    for (int s = 1; s < g.n; ++s) span_max = std::min<long long>(span_max * 2, (1ll << 40));
    return m * (m * span_max + 1) + 1;
}

ReductionTree build_reduction_tree(const MultiGraph& g, const ReductionStrategy& strategy) {
    FramingSpec spec = strategy.framing ? *strategy.framing : FramingSpec::canonical(g);
    OrderedNode root = OrderedNode::root(g, spec);
    std::mt19937_64 rng(strategy.seed);
    ReductionTree tree;
    tree.root_graph = g;
    tree.root = build_rec(root, strategy, rng, 0, depth_bound(g));
    return tree;
}

namespace {

void collect_leaves(const ReductionTreeNode* node, std::vector<NodeGraph>& out) {
    if (node->is_leaf()) {
        out.push_back(node->graph);
        return;
    }
    for (const auto& c : node->children) collect_leaves(c.get(), out);
}

int depth_of(const ReductionTreeNode* node) {
    if (node->is_leaf()) return 0;
    int d = 0;
    for (const auto& c : node->children) d = std::max(d, depth_of(c.get()));
    return d + 1;
}

} // namespace

std::vector<NodeGraph> leaves(const ReductionTree& tree) {
    std::vector<NodeGraph> out;
    collect_leaves(tree.root.get(), out);
    return out;
}

std::vector<long long> leaf_counts(const ReductionTree& tree) {
    std::vector<long long> r(static_cast<size_t>(tree.root_graph.edge_count()) + 1, 0);
    for (const NodeGraph& leaf : leaves(tree)) ++r[static_cast<size_t>(leaf.edge_count())];
    return r;
}

std::vector<NodeGraph> full_dimensional_leaves(const ReductionTree& tree) {
    std::vector<NodeGraph> out;
    for (NodeGraph& leaf : leaves(tree))
        if (leaf.edge_count() == tree.root_graph.edge_count()) out.push_back(std::move(leaf));
    return out;
}

int tree_depth(const ReductionTree& tree) { return depth_of(tree.root.get()); }

} // namespace flowforms
