// The built-in graph corpus the verification battery runs on: paths P2..P7,
// the complete graphs K3 and K4, the doubled-edge multigraph on [4], and
// every connected simple graph on [3] and on [4].

#pragma once

#include <string>
#include <vector>

#include "flowforms/multigraph.hpp"

namespace flowforms {

struct CorpusEntry {
    std::string name;
    MultiGraph graph;
};

MultiGraph path_graph(int n);
MultiGraph complete_graph(int n);
MultiGraph doubled_edge_multigraph(); // ([4], {(1,2),(1,2),(1,3),(2,3),(2,4),(3,4)})

std::vector<CorpusEntry> builtin_corpus();

} // namespace flowforms
