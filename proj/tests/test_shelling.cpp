#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "flowforms/shelling.hpp"
#include "flowforms/verify.hpp"
#include "helpers.hpp"

using namespace flowforms;

namespace {

std::vector<Int> ints(std::vector<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.push_back(Int(c));
    return v;
}

} // namespace

TEST_CASE("is_shelling on simplices sharing a facet") {
    // two 2-simplices glued along an edge
    const SimplicialComplex c = complex_from_cliques(4, {{0, 1, 2}, {1, 2, 3}});
    CHECK(is_shelling(c, {0, 1}));
    CHECK(is_shelling(c, {1, 0}));
    // single facet: any order
    CHECK(is_shelling(complex_from_cliques(3, {{0, 1, 2}}), {0}));
}

TEST_CASE("is_shelling rejects a vertex-only attachment") {
    // two triangles sharing one vertex attach along a point, not a facet
    const SimplicialComplex c = complex_from_cliques(5, {{0, 1, 2}, {2, 3, 4}});
    CHECK_FALSE(is_shelling(c, {0, 1}));
    CHECK_FALSE(is_shelling(c, {1, 0}));
}

TEST_CASE("is_shelling rejects malformed orders") {
    const SimplicialComplex c = complex_from_cliques(4, {{0, 1, 2}, {1, 2, 3}});
    CHECK_FALSE(is_shelling(c, {0}));
    CHECK_FALSE(is_shelling(c, {0, 0}));
    CHECK_FALSE(is_shelling(c, {0, 5}));
}

TEST_CASE("the two facets of the three-vertex path complex shell in tree order") {
    const MultiGraph p3 = tfx::graph(3, {{1, 2}, {2, 3}});
    const GraphArtifacts a = GraphArtifacts::build(p3);
    const CheckResult r = check_formal_sum(a, 1);
    CHECK(r.pass);
    CHECK(r.info["dfs_was_shelling"].get<bool>());
}

TEST_CASE("find_shelling falls back to search when the candidate fails") {
    const SimplicialComplex c = complex_from_cliques(4, {{0, 1, 2}, {1, 2, 3}});
    const ShellingSearchResult r = find_shelling(c, nullptr, 5);
    CHECK(r.found);
    CHECK(is_shelling(c, r.order));
    CHECK_FALSE(r.candidate_was_shelling);
}

TEST_CASE("find_shelling reports failure on an unshellable order problem") {
    // two disjoint triangles: step two can never attach
    const SimplicialComplex c = complex_from_cliques(6, {{0, 1, 2}, {3, 4, 5}});
    const ShellingSearchResult r = find_shelling(c, nullptr, 0);
    CHECK_FALSE(r.found);
}

TEST_CASE("h from a shelling matches the f-h transform") {
    for (const auto& [name, g] : tfx::sample_corpus()) {
        CAPTURE(name);
        const GraphArtifacts a = GraphArtifacts::build(g);
        const FHVectors fh = fh_vectors(a.tri.complex);
        std::set<std::vector<int>> orders;
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const ShellingSearchResult r = find_shelling(a.tri.complex, nullptr, seed);
            REQUIRE(r.found);
            REQUIRE(is_shelling(a.tri.complex, r.order));
            CHECK(h_from_shelling(a.tri.complex, r.order) == fh.h);
            orders.insert(r.order);
        }
        // every placement after the first attaches along at least one facet
        const ShellingSearchResult r0 = find_shelling(a.tri.complex, nullptr, 0);
        const std::vector<Int> h = h_from_shelling(a.tri.complex, r0.order);
        Int nonfirst = -1; // the first facet contributes one zero-attachment count
        for (const Int& v : h) nonfirst += v;
        CHECK(h[0] == 1);
        CHECK(nonfirst == Int(static_cast<long>(a.tri.complex.facets.size() - 1)));
    }
}

TEST_CASE("h from shelling of a single simplex") {
    const SimplicialComplex c = complex_from_cliques(4, {{0, 1, 2, 3}});
    CHECK(h_from_shelling(c, {0}) == ints({1, 0, 0, 0, 0}));
}

TEST_CASE("the formal sum over a shelling reproduces the leaf multiset") {
    const MultiGraph p3 = tfx::graph(3, {{1, 2}, {2, 3}});
    const NodeGraph g1 = tfx::node(3, {tfx::pedge(1, 3, {1, 2}), tfx::pedge(1, 2, {1})});
    const NodeGraph g2 = tfx::node(3, {tfx::pedge(1, 3, {1, 2}), tfx::pedge(2, 3, {2})});
    const NodeGraph g3 = tfx::node(3, {tfx::pedge(1, 3, {1, 2})});

    // P_1 is empty, P_2 = {G3}; the expansion is G1 + (G2 + G3)
    CHECK(attach_profile({g1, g2}, 0).empty());
    CHECK(attach_profile({g1, g2}, 1) == std::vector<NodeGraph>{g3});
    CHECK(verify_formal_sum({g1, g2}, {g1, g2, g3}).pass);

    // single leaf: the expansion is the leaf itself
    const NodeGraph lone = tfx::node(2, {tfx::pedge(1, 2, {1})});
    CHECK(verify_formal_sum({lone}, {lone}).pass);

    // corrupted leaf lists are caught and reported
    const FormalSumReport missing = verify_formal_sum({g1, g2}, {g1, g2});
    CHECK_FALSE(missing.pass);
    CHECK(missing.detail.find("missing") != std::string::npos);
    const FormalSumReport wrong = verify_formal_sum({g1, g2}, {g1, g2, g3, g3});
    CHECK_FALSE(wrong.pass);
}

TEST_CASE("formal sum across the sample corpus, with term counts") {
    for (const auto& [name, g] : tfx::sample_corpus()) {
        CAPTURE(name);
        const GraphArtifacts a = GraphArtifacts::build(g);
        const CheckResult r = check_formal_sum(a, 7);
        CHECK(r.pass);

        // sum of 2^f(i) over the shelling equals the number of leaves
        std::map<std::vector<int>, const NodeGraph*> leaf_by_set;
        std::vector<NodeGraph> facets_in_order;
        for (const NodeGraph& leaf : a.full_leaves) leaf_by_set[a.route_ids(leaf_to_routes(leaf, a.g))] = &leaf;
        for (int idx : r.info["order"].get<std::vector<int>>())
            facets_in_order.push_back(*leaf_by_set.at(a.tri.complex.facets[static_cast<size_t>(idx)]));
        long long terms = 0;
        for (size_t i = 0; i < facets_in_order.size(); ++i)
            terms += 1ll << attach_profile(facets_in_order, i).size();
        CHECK(terms == static_cast<long long>(a.all_leaves.size()));
    }
}
