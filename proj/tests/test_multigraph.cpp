#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "flowforms/json_io.hpp"
#include "flowforms/multigraph.hpp"
#include "flowforms/reduction.hpp"
#include "helpers.hpp"

using namespace flowforms;

TEST_CASE("parse_graph accepts the documented format") {
    const MultiGraph p3 = parse_graph(R"({"n":3,"edges":[[1,2],[2,3]]})");
    CHECK(p3.n == 3);
    REQUIRE(p3.edge_count() == 2);
    CHECK(p3.edge(1).tail == 1);
    CHECK(p3.edge(1).head == 2);
    CHECK(p3.edge(2).tail == 2);
    CHECK(p3.edge(2).head == 3);

    const MultiGraph frame = parse_graph(R"({"n":4,"edges":[[1,2],[1,2],[1,3],[2,3],[2,4],[3,4]]})");
    CHECK(frame.edge_count() == 6);
    CHECK(frame.edge(1).head == 2);
    CHECK(frame.edge(2).head == 2); // parallel edges keep distinct indices
}

TEST_CASE("parse_graph rejects bad input") {
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[2,2]]})"), std::invalid_argument); // loop
    CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[3,2]]})"), std::invalid_argument); // tail >= head
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[1,3]]})"), std::invalid_argument); // vertex out of range
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph(R"({"edges":[[1,2]]})"), std::invalid_argument);
}

TEST_CASE("graph json round trip") {
    const MultiGraph g = tfx::graph(4, {{1, 2}, {1, 2}, {3, 4}});
    const MultiGraph back = graph_from_json(graph_to_json(g));
    CHECK(back.n == g.n);
    REQUIRE(back.edge_count() == g.edge_count());
    for (int k = 1; k <= g.edge_count(); ++k) {
        CHECK(back.edge(k).tail == g.edge(k).tail);
        CHECK(back.edge(k).head == g.edge(k).head);
    }
}

TEST_CASE("augment adds one source and one sink edge per vertex") {
    const AugmentedGraph p2 = augment(tfx::graph(2, {{1, 2}}));
    CHECK(p2.edge_count() == 5); // (1,2),(s,1),(s,2),(1,t),(2,t)
    CHECK(p2.tail_of(p2.source_edge_id(2)) == 0);
    CHECK(p2.head_of(p2.source_edge_id(2)) == 2);
    CHECK(p2.tail_of(p2.sink_edge_id(1)) == 1);
    CHECK(p2.head_of(p2.sink_edge_id(1)) == 3);

    CHECK(augment(tfx::graph(3, {{1, 2}, {2, 3}})).edge_count() == 8);
    CHECK(augment(complete_graph(3)).edge_count() == 9);
}

TEST_CASE("routes of the augmented path on three vertices") {
    const AugmentedGraph ag = augment(tfx::graph(3, {{1, 2}, {2, 3}}));
    const std::vector<Route> rs = routes(ag);
    const std::vector<Route> expected = {
        tfx::route(1, {}, 1),     tfx::route(1, {1}, 2),    tfx::route(1, {1, 2}, 3),
        tfx::route(2, {}, 2),     tfx::route(2, {2}, 3),    tfx::route(3, {}, 3),
    };
    REQUIRE(rs.size() == 6);
    for (size_t k = 0; k < rs.size(); ++k) CHECK(rs[k] == expected[k]);
}

TEST_CASE("route counts for small graphs") {
    CHECK(routes(augment(tfx::graph(2, {{1, 2}}))).size() == 3);
    // doubled edge: the two parallel copies give distinct routes
    CHECK(routes(augment(tfx::graph(2, {{1, 2}, {1, 2}}))).size() == 4);
}

TEST_CASE("every route is a unit flow and every edge lies on a route") {
    for (const auto& [name, g] : tfx::sample_corpus()) {
        CAPTURE(name);
        const AugmentedGraph ag = augment(g);
        const std::vector<Route> rs = routes(ag);
        Bits covered(ag.edge_count());
        for (const Route& r : rs) {
            const Bits support = route_support(ag, r);
            covered |= support;
            // flow conservation at every inner vertex; netflow 1 at s, -1 at t
            std::vector<int> balance(static_cast<size_t>(ag.n()) + 2, 0);
            support.for_each([&](int bit) {
                const int id = bit + 1;
                balance[static_cast<size_t>(ag.tail_of(id))] += 1;
                balance[static_cast<size_t>(ag.head_of(id))] -= 1;
            });
            CHECK(balance.front() == 1);
            CHECK(balance.back() == -1);
            for (int v = 1; v <= ag.n(); ++v) CHECK(balance[static_cast<size_t>(v)] == 0);
        }
        CHECK(covered.count() == ag.edge_count());
        // identities are distinct
        std::set<std::pair<int, std::vector<int>>> ids;
        for (const Route& r : rs) ids.insert({r.v1, r.path});
        CHECK(ids.size() == rs.size());
    }
}

TEST_CASE("leaf_to_routes maps provenance paths and adds the trivial routes") {
    const MultiGraph p3 = tfx::graph(3, {{1, 2}, {2, 3}});

    // the middle leaf of the worked reduction of the path graph
    const NodeGraph g3 = tfx::node(3, {tfx::pedge(1, 3, {1, 2})});
    const std::vector<Route> rs = leaf_to_routes(g3, p3);
    const std::vector<Route> expected = {
        tfx::route(1, {}, 1), tfx::route(1, {1, 2}, 3), tfx::route(2, {}, 2), tfx::route(3, {}, 3)};
    REQUIRE(rs.size() == 4);
    for (size_t k = 0; k < rs.size(); ++k) CHECK(rs[k] == expected[k]);

    // the left leaf: 5 = |E| + n routes
    const NodeGraph g1 = tfx::node(3, {tfx::pedge(1, 3, {1, 2}), tfx::pedge(1, 2, {1})});
    CHECK(leaf_to_routes(g1, p3).size() == 5);

    // the root itself maps to all single-edge routes plus the trivial ones
    const NodeGraph root = NodeGraph::of(p3);
    const std::vector<Route> all = leaf_to_routes(root, p3);
    REQUIRE(all.size() == 5);
    CHECK(std::count_if(all.begin(), all.end(), [](const Route& r) { return r.is_trivial(); }) == 3);
}

TEST_CASE("leaf_to_routes validates provenance") {
    const MultiGraph p3 = tfx::graph(3, {{1, 2}, {2, 3}});
    CHECK_THROWS_AS(leaf_to_routes(tfx::node(3, {tfx::pedge(1, 3, {2, 1})}), p3), std::invalid_argument);
    CHECK_THROWS_AS(leaf_to_routes(tfx::node(3, {tfx::pedge(1, 3, {1})}), p3), std::invalid_argument);
    CHECK_THROWS_AS(leaf_to_routes(tfx::node(3, {tfx::pedge(1, 3, {})}), p3), std::invalid_argument);
}

TEST_CASE("node graph intersection is provenance-aware") {
    const NodeGraph g1 = tfx::node(3, {tfx::pedge(1, 3, {1, 2}), tfx::pedge(1, 2, {1})});
    const NodeGraph g2 = tfx::node(3, {tfx::pedge(1, 3, {1, 2}), tfx::pedge(2, 3, {2})});
    const NodeGraph g3 = tfx::node(3, {tfx::pedge(1, 3, {1, 2})});
    CHECK(intersect_node_graphs(g1, g2) == g3);
    CHECK(intersect_node_graphs(g1, g1) == g1);

    // same endpoints, different provenance: empty intersection
    const NodeGraph a = tfx::node(3, {tfx::pedge(1, 3, {1, 2})});
    const NodeGraph b = tfx::node(3, {tfx::pedge(1, 3, {3})});
    CHECK(intersect_node_graphs(a, b).edge_count() == 0);
}

TEST_CASE("intersection is commutative, associative, idempotent on reduction leaves") {
    for (const auto& [name, g] : tfx::sample_corpus()) {
        CAPTURE(name);
        const ReductionTree tree = build_reduction_tree(g, ReductionStrategy::sigma());
        const std::vector<NodeGraph> ls = leaves(tree);
        for (size_t a = 0; a < ls.size(); ++a)
            for (size_t b = a; b < std::min(ls.size(), a + 4); ++b) {
                const NodeGraph ab = intersect_node_graphs(ls[a], ls[b]);
                CHECK(ab == intersect_node_graphs(ls[b], ls[a]));
                CHECK(intersect_node_graphs(ab, ls[a]) == ab);
                if (a + 2 < ls.size()) {
                    const NodeGraph c = ls[a + 2];
                    CHECK(intersect_node_graphs(ab, c) == intersect_node_graphs(ls[a], intersect_node_graphs(ls[b], c)));
                }
            }
    }
}

TEST_CASE("route sets of leaves intersect like the leaves themselves") {
    for (const auto& [name, g] : tfx::sample_corpus()) {
        CAPTURE(name);
        const ReductionTree tree = build_reduction_tree(g, ReductionStrategy::sigma());
        const std::vector<NodeGraph> ls = leaves(tree);
        for (size_t a = 0; a < ls.size(); ++a)
            for (size_t b = a + 1; b < ls.size(); ++b) {
                const std::vector<Route> ra = leaf_to_routes(ls[a], g);
                const std::vector<Route> rb = leaf_to_routes(ls[b], g);
                std::vector<Route> meet;
                std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(meet),
                                      [](const Route& x, const Route& y) { return x < y; });
                CHECK(meet == leaf_to_routes(intersect_node_graphs(ls[a], ls[b]), g));
            }
    }
}

TEST_CASE("leaf route sets always have |E(H)| + n elements") {
    for (const auto& [name, g] : tfx::sample_corpus()) {
        CAPTURE(name);
        const ReductionTree tree = build_reduction_tree(g, ReductionStrategy::random(99));
        for (const NodeGraph& leaf : leaves(tree))
            CHECK(leaf_to_routes(leaf, g).size() == static_cast<size_t>(leaf.edge_count() + g.n));
    }
}
