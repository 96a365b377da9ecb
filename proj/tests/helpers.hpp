// Shared builders for the test suites.

#pragma once

#include <utility>
#include <vector>

#include "flowforms/corpus.hpp"
#include "flowforms/multigraph.hpp"

namespace tfx {

inline flowforms::MultiGraph graph(int n, std::vector<std::pair<int, int>> pairs) {
    return flowforms::MultiGraph::from_edges(n, pairs);
}

inline flowforms::Route route(int v1, std::vector<int> path, int v2) {
    return flowforms::Route{v1, v2, std::move(path)};
}

inline flowforms::ProvEdge pedge(int tail, int head, std::vector<int> prov) {
    return flowforms::ProvEdge{tail, head, std::move(prov)};
}

inline flowforms::NodeGraph node(int n, std::vector<flowforms::ProvEdge> edges) {
    flowforms::NodeGraph g;
    g.n = n;
    g.edges = std::move(edges);
    g.canonicalize();
    return g;
}

// A small slice of the corpus for property tests that run per graph.
inline std::vector<flowforms::CorpusEntry> sample_corpus() {
    using namespace flowforms;
    return {
        {"P2", path_graph(2)},          {"P3", path_graph(3)},
        {"P4", path_graph(4)},          {"K3", complete_graph(3)},
        {"K4", complete_graph(4)},      {"M4", doubled_edge_multigraph()},
        {"G4a", MultiGraph::from_edges(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}})},
        {"G4b", MultiGraph::from_edges(4, {{1, 3}, {2, 3}, {3, 4}})},
    };
}

} // namespace tfx
