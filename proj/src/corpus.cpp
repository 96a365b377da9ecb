#include "flowforms/corpus.hpp"

#include <algorithm>
#include <set>

namespace flowforms {

MultiGraph path_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v) pairs.push_back({v, v + 1});
    return MultiGraph::from_edges(n, pairs);
}

MultiGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) pairs.push_back({a, b});
    return MultiGraph::from_edges(n, pairs);
}

MultiGraph doubled_edge_multigraph() {
    return MultiGraph::from_edges(4, {{1, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

bool spanning_connected(int n, const EdgeList& pairs) {
    std::vector<int> parent(static_cast<size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) parent[static_cast<size_t>(v)] = v;
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        return v;
    };
    for (auto [a, b] : pairs) parent[static_cast<size_t>(find(a))] = find(b);
    for (int v = 2; v <= n; ++v)
        if (find(v) != find(1)) return false;
    return true;
}

std::string edge_list_name(int n, const EdgeList& pairs) {
    std::string s = "G" + std::to_string(n) + "_";
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (k) s += ".";
        s += std::to_string(pairs[k].first) + std::to_string(pairs[k].second);
    }
    return s;
}

EdgeList key_of(const MultiGraph& g) {
    EdgeList key;
    for (const OriginalEdge& e : g.edges) key.push_back({e.tail, e.head});
    std::sort(key.begin(), key.end());
    return key;
}

} // namespace

std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> corpus;
    std::set<std::pair<int, EdgeList>> seen;
    auto add = [&](std::string name, MultiGraph g) {
        if (seen.insert({g.n, key_of(g)}).second) corpus.push_back({std::move(name), std::move(g)});
    };

    for (int n = 2; n <= 7; ++n) add("P" + std::to_string(n), path_graph(n));
    add("K3", complete_graph(3));
    add("K4", complete_graph(4));
    add("M4", doubled_edge_multigraph());

    for (int n : {3, 4}) {
        EdgeList universe;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) universe.push_back({a, b});
        for (unsigned mask = 1; mask < (1u << universe.size()); ++mask) {
            EdgeList pairs;
            for (size_t t = 0; t < universe.size(); ++t)
                if ((mask >> t) & 1) pairs.push_back(universe[t]);
            if (!spanning_connected(n, pairs)) continue;
            add(edge_list_name(n, pairs), MultiGraph::from_edges(n, pairs));
        }
    }
    return corpus;
}

} // namespace flowforms
