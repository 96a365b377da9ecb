// Per-graph verification of all the identities the library implements:
// reduced form = shifted h-polynomial, leaves = coherent cliques, flagness,
// order-invariant leaf counts, the shelling formal sum, the Ehrhart series
// identity, and nonnegativity of the shifted reduced form.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowforms/algebra.hpp"
#include "flowforms/corpus.hpp"
#include "flowforms/ehrhart.hpp"
#include "flowforms/reduction.hpp"
#include "flowforms/shelling.hpp"
#include "flowforms/triangulation.hpp"

namespace flowforms {

// Everything the checks need for one graph, built once.
struct GraphArtifacts {
    MultiGraph g;
    FramingSpec spec;
    ReductionTree tree; // the canonical-order tree
    std::vector<NodeGraph> all_leaves;  // depth-first order
    std::vector<NodeGraph> full_leaves; // depth-first order
    std::vector<long long> rk;          // leaf counts by edge number
    DkkTriangulation tri;
    MultivarPoly reduced_form;
    UniPoly q; // reduced form at x = 1

    static GraphArtifacts build(const MultiGraph& g);
    static GraphArtifacts build(const MultiGraph& g, const FramingSpec& spec);

    std::vector<int> route_ids(const std::vector<Route>& rs) const; // sorted ids
};

struct CheckResult {
    bool pass = false;
    nlohmann::ordered_json info; // witness payload on failure, extras on success
};

CheckResult check_thm_h(const GraphArtifacts& a);
CheckResult check_prop_coh(const GraphArtifacts& a);
CheckResult check_flag(const GraphArtifacts& a);
CheckResult check_lemma_leaves(const GraphArtifacts& a, std::uint64_t seed, int trials = 20);
CheckResult check_formal_sum(const GraphArtifacts& a, std::uint64_t seed);
CheckResult check_corollary_cor(const GraphArtifacts& a);
CheckResult check_nonnegativity(const GraphArtifacts& a);

// Deterministic report over a corpus; byte-identical for fixed corpus+seed.
nlohmann::ordered_json run_verify(const std::vector<CorpusEntry>& corpus, std::uint64_t seed, bool& all_pass);

// One-page summary of a single graph.
nlohmann::ordered_json report_graph(const std::string& name, const MultiGraph& g);
std::string report_graph_text(const std::string& name, const MultiGraph& g);

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

} // namespace flowforms
