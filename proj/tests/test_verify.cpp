#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "flowforms/json_io.hpp"
#include "flowforms/verify.hpp"
#include "helpers.hpp"

using namespace flowforms;

TEST_CASE("the built-in corpus has the advertised members") {
    const std::vector<CorpusEntry> corpus = builtin_corpus();
    std::set<std::string> names;
    for (const auto& e : corpus) names.insert(e.name);
    for (const char* required : {"P2", "P3", "P4", "P5", "P6", "P7", "K3", "K4", "M4"})
        CHECK(names.count(required) == 1);

    // connected graphs on three and on four labeled vertices: 4 and 38, with
    // the path and complete graphs listed under their own names
    long on3 = 0, on4 = 0;
    for (const auto& e : corpus) {
        if (e.graph.n == 3 && e.name != "M4") ++on3;
        if (e.graph.n == 4) ++on4;
    }
    CHECK(on3 == 4);      // P3, K3 and the two remaining connected graphs on [3]
    CHECK(on4 == 38 + 1); // all connected graphs on [4] plus the doubled-edge multigraph
    CHECK(corpus.size() == 47);

    // every entry parses back through the documented interchange format
    for (const auto& e : corpus) {
        const MultiGraph back = parse_graph(graph_to_json(e.graph).dump());
        CHECK(back.n == e.graph.n);
        CHECK(back.edge_count() == e.graph.edge_count());
    }

    // no duplicates
    std::set<std::string> dumps;
    for (const auto& e : corpus) dumps.insert(graph_to_json(e.graph).dump());
    CHECK(dumps.size() == corpus.size());
}

TEST_CASE("all checks pass on a small corpus slice") {
    const std::vector<CorpusEntry> slice = {{"P2", path_graph(2)}, {"P3", path_graph(3)}, {"K3", complete_graph(3)}};
    bool all_pass = false;
    const auto report = run_verify(slice, 1, all_pass);
    CHECK(all_pass);
    CHECK(report["all_pass"].get<bool>());
    CHECK(report["graphs"].size() == 3);
    for (const auto& g : report["graphs"])
        for (const auto& [name, check] : g["checks"].items()) {
            CAPTURE(name);
            CHECK(check["pass"].get<bool>());
        }
}

TEST_CASE("verify is byte-deterministic for a fixed corpus and seed") {
    const std::vector<CorpusEntry> slice = {{"P3", path_graph(3)}, {"M4", doubled_edge_multigraph()}};
    bool a_pass = false, b_pass = false;
    const std::string a = run_verify(slice, 7, a_pass).dump();
    const std::string b = run_verify(slice, 7, b_pass).dump();
    CHECK(a == b);
    // a different seed still passes but reseeds the randomized checks
    bool c_pass = false;
    run_verify(slice, 8, c_pass);
    CHECK(c_pass);
}

TEST_CASE("an empty corpus yields an empty passing report") {
    bool all_pass = false;
    const auto report = run_verify({}, 1, all_pass);
    CHECK(all_pass);
    CHECK(report["graphs"].empty());
}

TEST_CASE("individual checks expose failure witnesses on corrupted data") {
    const GraphArtifacts a = GraphArtifacts::build(path_graph(3));

    // drop a leaf before expanding the formal sum
    std::vector<NodeGraph> truncated(a.all_leaves.begin(), a.all_leaves.end() - 1);
    std::vector<NodeGraph> facets = a.full_leaves;
    for (auto& f : facets) f.canonicalize();
    const FormalSumReport broken = verify_formal_sum(facets, truncated);
    CHECK_FALSE(broken.pass);
    CHECK_FALSE(broken.detail.empty());
}

TEST_CASE("graph report carries the worked example") {
    const auto j = report_graph("P3", path_graph(3));
    CHECK(j["q"].dump() == "[2,1]");
    CHECK(j["q_shifted"].dump() == "[1,1]");
    CHECK(j["hstar"].dump() == "[1,1]");
    CHECK(j["volume"].get<std::string>() == "2");
    CHECK(j["flag"].get<bool>());
    CHECK(j["hstar_equals_q_shifted"].get<bool>());
    const std::string text = report_graph_text("P3", path_graph(3));
    CHECK(text.find("volume") != std::string::npos);

    const auto k3 = report_graph("K3", complete_graph(3));
    CHECK(k3["q"].dump() == "[2,1]");
    CHECK(k3["volume"].get<std::string>() == "2");

    const auto p2 = report_graph("P2", path_graph(2));
    CHECK(p2["q"].dump() == "[1]");
    CHECK(p2["volume"].get<std::string>() == "1");
}

TEST_CASE("mix_seed separates streams") {
    CHECK(mix_seed(1, 0) != mix_seed(1, 1));
    CHECK(mix_seed(1, 0) != mix_seed(2, 0));
    CHECK(mix_seed(5, 3) == mix_seed(5, 3));
}
