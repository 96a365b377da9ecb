// flowforms: reduction trees, reduced forms, framed triangulations,
// shellings and Ehrhart data of flow polytopes, plus a verification
// battery over a built-in corpus of small graphs.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "flowforms/corpus.hpp"
#include "flowforms/json_io.hpp"
#include "flowforms/shelling.hpp"
#include "flowforms/verify.hpp"

namespace ff = flowforms;
using ff::Json;

namespace {

ff::MultiGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return ff::parse_graph(buf.str());
}

ff::ReductionStrategy parse_strategy(const std::string& text) {
    if (text == "sigma") return ff::ReductionStrategy::sigma();
    if (text.rfind("random:", 0) == 0) return ff::ReductionStrategy::random(std::stoull(text.substr(7)));
    throw std::invalid_argument("unknown strategy \"" + text + "\" (expected sigma or random:<seed>)");
}

std::vector<ff::CorpusEntry> load_corpus(const std::string& dir) {
    if (dir.empty()) return ff::builtin_corpus();
    std::vector<ff::CorpusEntry> corpus;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) corpus.push_back({f.stem().string(), load_graph(f.string())});
    return corpus;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subdivision-algebra calculus on flow polytopes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    bool as_json = false;
    std::string corpus_dir;
    app.add_option("--seed", seed, "seed for all randomized strategies");
    app.add_flag("--json", as_json, "emit JSON where a text form is the default");
    app.add_option("--corpus", corpus_dir, "directory of graph .json files replacing the built-in corpus");

    std::string graph_path, strategy_text = "sigma";
    int shift = 0;
    bool at_one = false;
    int m_max = -1;
    std::string out_dir;

    CLI::App* cmd_tree = app.add_subcommand("tree", "dump a reduction tree");
    cmd_tree->add_option("graph", graph_path, "graph JSON file")->required();
    cmd_tree->add_option("--strategy", strategy_text, "sigma (default) or random:<seed>");

    CLI::App* cmd_reduce = app.add_subcommand("reduce", "reduced form of the graph's edge monomial");
    cmd_reduce->add_option("graph", graph_path, "graph JSON file")->required();
    cmd_reduce->add_flag("--at-one", at_one, "specialize x = (1,...,1)");
    cmd_reduce->add_option("--shift", shift, "evaluate at beta+delta (implies --at-one)");

    CLI::App* cmd_tri = app.add_subcommand("triangulate", "routes, cliques, f/h-vectors, interior faces");
    cmd_tri->add_option("graph", graph_path, "graph JSON file")->required();

    CLI::App* cmd_shell = app.add_subcommand("shell", "shelling order and formal-sum check");
    cmd_shell->add_option("graph", graph_path, "graph JSON file")->required();

    CLI::App* cmd_ehr = app.add_subcommand("ehrhart", "Ehrhart values, polynomial and h-star");
    cmd_ehr->add_option("graph", graph_path, "graph JSON file")->required();
    cmd_ehr->add_option("--mmax", m_max, "largest dilate to evaluate (default dim+2)");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run every identity check over the corpus");

    CLI::App* cmd_report = app.add_subcommand("report", "one-page summary of a graph");
    cmd_report->add_option("graph", graph_path, "graph JSON file")->required();

    CLI::App* cmd_corpus = app.add_subcommand("corpus", "write the built-in corpus as graph files");
    cmd_corpus->add_option("--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_tree->parsed()) {
            const ff::MultiGraph g = load_graph(graph_path);
            const ff::ReductionTree tree = ff::build_reduction_tree(g, parse_strategy(strategy_text));
            std::cout << ff::tree_to_json(tree).dump(2) << "\n";
        } else if (cmd_reduce->parsed()) {
            const ff::MultiGraph g = load_graph(graph_path);
            const ff::ReductionTree tree = ff::build_reduction_tree(g, ff::ReductionStrategy::sigma());
            const ff::MultivarPoly form = ff::reduced_form_from_tree(tree);
            if (at_one || cmd_reduce->count("--shift") > 0) {
                ff::UniPoly q = ff::specialize_x_to_one(form);
                if (shift != 0) q = ff::shift_beta(q, shift);
                std::cout << ff::unipoly_to_json(q).dump(2) << "\n";
            } else {
                std::cout << ff::multivar_poly_to_json(form).dump(2) << "\n";
            }
        } else if (cmd_tri->parsed()) {
            const ff::MultiGraph g = load_graph(graph_path);
            const ff::DkkTriangulation tri = ff::DkkTriangulation::build(g, ff::FramingSpec::canonical(g));
            const ff::FHVectors fh = ff::fh_vectors(tri.complex);
            const std::vector<ff::Int> interior = ff::interior_face_counts(tri.complex, tri.ag, tri.route_list);
            Json j;
            j["routes"] = ff::routes_to_json(tri.route_list);
            j["maximal_cliques"] = tri.max_cliques;
            Json f = Json::array(), h = Json::array(), ic = Json::array();
            for (const auto& v : fh.f) f.push_back(ff::int_to_json(v));
            for (const auto& v : fh.h) h.push_back(ff::int_to_json(v));
            for (const auto& v : interior) ic.push_back(ff::int_to_json(v));
            j["f"] = f;
            j["h"] = h;
            j["flag"] = ff::is_flag(tri.complex);
            j["interior_counts"] = ic;
            std::cout << j.dump(2) << "\n";
        } else if (cmd_shell->parsed()) {
            const ff::MultiGraph g = load_graph(graph_path);
            const ff::GraphArtifacts a = ff::GraphArtifacts::build(g);
            const ff::CheckResult r = ff::check_formal_sum(a, seed);
            Json j;
            j["order"] = r.info.contains("order") ? r.info["order"] : Json::array();
            if (r.info.contains("order")) {
                std::vector<int> order = r.info["order"].get<std::vector<int>>();
                Json h = Json::array();
                for (const auto& v : ff::h_from_shelling(a.tri.complex, order)) h.push_back(ff::int_to_json(v));
                j["h_from_shelling"] = h;
            }
            j["formal_sum_ok"] = r.pass;
            j["dfs_was_shelling"] = r.info["dfs_was_shelling"];
            std::cout << j.dump(2) << "\n";
            if (!r.pass) return 1;
        } else if (cmd_ehr->parsed()) {
            const ff::MultiGraph g = load_graph(graph_path);
            const ff::AugmentedGraph ag = ff::augment(g);
            const int dim = ff::flow_polytope_dim(ag);
            const int top = (m_max >= 0) ? m_max : dim + 2;
            if (top < dim) throw std::invalid_argument("--mmax must be at least the polytope dimension " + std::to_string(dim));
            const std::vector<ff::Int> vals = ff::ehrhart_values(ag, top);
            Json j;
            Json values = Json::array();
            for (const auto& v : vals) values.push_back(ff::int_to_json(v));
            j["values"] = values;
            j["polynomial"] = ff::ehrhart_poly_to_json(ff::ehrhart_polynomial(vals, dim))["coeffs"];
            j["hstar"] = ff::unipoly_to_json(ff::hstar_polynomial(ag))["coeffs"];
            std::cout << j.dump(2) << "\n";
        } else if (cmd_verify->parsed()) {
            bool all_pass = false;
            const Json report = ff::run_verify(load_corpus(corpus_dir), seed, all_pass);
            std::cout << report.dump(2) << "\n";
            return all_pass ? 0 : 1;
        } else if (cmd_report->parsed()) {
            const ff::MultiGraph g = load_graph(graph_path);
            const std::string name = std::filesystem::path(graph_path).stem().string();
            if (as_json)
                std::cout << ff::report_graph(name, g).dump(2) << "\n";
            else
                std::cout << ff::report_graph_text(name, g);
        } else if (cmd_corpus->parsed()) {
            std::filesystem::create_directories(out_dir);
            for (const ff::CorpusEntry& entry : ff::builtin_corpus()) {
                std::ofstream out(std::filesystem::path(out_dir) / (entry.name + ".json"));
                out << ff::graph_to_json(entry.graph).dump(2) << "\n";
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
