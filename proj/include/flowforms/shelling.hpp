// Shelling verification and search on simplicial complexes, h-vectors read
// off shellings, and the formal-sum expansion that recovers the full leaf
// multiset of a reduction tree from a shelling of its facet complex.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowforms/multigraph.hpp"
#include "flowforms/numbers.hpp"
#include "flowforms/triangulation.hpp"

namespace flowforms {

// order is a permutation of facet indices. For every i >= 2 (1-based), the
// intersection of facet F_i with the union of its predecessors must be a
// nonempty union of (|F_i|-1)-element subfaces of F_i.
bool is_shelling(const SimplicialComplex& c, const std::vector<int>& order);

struct ShellingSearchResult {
    bool found = false;
    std::vector<int> order;        // facet indices
    bool candidate_was_shelling = false;
    long long expansions = 0;      // backtracking nodes visited
};

// Tries the supplied candidate order first (if any), then falls back to a
// seeded backtracking search capped at the given node budget.
ShellingSearchResult find_shelling(const SimplicialComplex& c, const std::vector<int>* candidate,
                                   std::uint64_t seed = 0, long long budget = 1000000);

// h[i] = number of facets that attach along exactly i codimension-one faces
// when placed in shelling order; padded to length d+1.
std::vector<Int> h_from_shelling(const SimplicialComplex& c, const std::vector<int>& order);

// The multiset P_i of codimension-one attachments of facet i (by edge count)
// against its predecessors in the given order, as node graphs.
std::vector<NodeGraph> attach_profile(const std::vector<NodeGraph>& facets_in_order, size_t i);

struct FormalSumReport {
    bool pass = false;
    std::string detail;
};

// Expands sum_i prod_j (F_i + Q_j^i) distributively, with graph intersection
// as the product and the empty product equal to F_i, and compares the
// resulting multiset of node graphs with the full leaf multiset.
FormalSumReport verify_formal_sum(const std::vector<NodeGraph>& facets_in_shelling_order,
                                  const std::vector<NodeGraph>& all_leaves);

} // namespace flowforms
