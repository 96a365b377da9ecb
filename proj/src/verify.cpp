#include "flowforms/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "flowforms/json_io.hpp"

namespace flowforms {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

GraphArtifacts GraphArtifacts::build(const MultiGraph& g) { return build(g, FramingSpec::canonical(g)); }

GraphArtifacts GraphArtifacts::build(const MultiGraph& g, const FramingSpec& spec) {
    GraphArtifacts a;
    a.g = g;
    a.spec = spec;
    a.tree = build_reduction_tree(g, ReductionStrategy::sigma_with(spec));
    a.all_leaves = leaves(a.tree);
    a.full_leaves = full_dimensional_leaves(a.tree);
    a.rk = leaf_counts(a.tree);
    a.tri = DkkTriangulation::build(g, spec);
    a.reduced_form = reduced_form_from_tree(a.tree);
    a.q = specialize_x_to_one(a.reduced_form);
    return a;
}

std::vector<int> GraphArtifacts::route_ids(const std::vector<Route>& rs) const {
    std::vector<int> ids;
    ids.reserve(rs.size());
    for (const Route& r : rs) {
        const int id = tri.route_id(r);
        if (id < 0) throw std::logic_error("route missing from the route universe");
        ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

namespace {

Json unipoly_json(const UniPoly& p) { return unipoly_to_json(p)["coeffs"]; }

Json face_json(const std::vector<int>& ids) { return Json(ids); }

} // namespace

CheckResult check_thm_h(const GraphArtifacts& a) {
    CheckResult res;
    const FHVectors fh = fh_vectors(a.tri.complex);
    const UniPoly h_poly = h_polynomial(fh);
    const UniPoly h_shifted = shift_beta(h_poly, 1); // h(C, beta+1)

    const UniPoly h_by_faces = h_polynomial_by_faces(a.tri.complex);

    const std::vector<Int> interior = interior_face_counts(a.tri.complex, a.tri.ag, a.tri.route_list);
    const int d = a.tri.complex.d();
    std::vector<Int> uni_coeffs(static_cast<size_t>(d), Int(0));
    for (int i = 0; i < d; ++i) {
        const int deg = d - 1 - i;
        uni_coeffs[static_cast<size_t>(deg)] += interior[static_cast<size_t>(i)];
    }
    const UniPoly q_from_interior = UniPoly::from_coeffs(uni_coeffs);

    Int h_sum = 0;
    for (const Int& v : fh.h) h_sum += v;

    const bool eq_main = (a.q == h_shifted);
    const bool eq_interior = (h_shifted == q_from_interior);
    const bool eq_two_h_routes = (h_poly == h_by_faces);
    const bool eq_volume = (h_sum == Int(static_cast<long>(a.tri.complex.facets.size()))) && (h_sum == a.q.eval(0));

    res.pass = eq_main && eq_interior && eq_two_h_routes && eq_volume;
    res.info["q"] = unipoly_json(a.q);
    res.info["h_shifted"] = unipoly_json(h_shifted);
    if (!res.pass) {
        res.info["q_from_interior"] = unipoly_json(q_from_interior);
        res.info["h_by_faces"] = unipoly_json(h_by_faces);
        res.info["facets"] = a.tri.complex.facets.size();
    }
    return res;
}

CheckResult check_prop_coh(const GraphArtifacts& a) {
    CheckResult res;
    std::set<std::vector<int>> leaf_sets;
    bool full_leaf_dup = false;
    for (const NodeGraph& leaf : a.full_leaves)
        if (!leaf_sets.insert(a.route_ids(leaf_to_routes(leaf, a.g))).second) full_leaf_dup = true;
    std::set<std::vector<int>> clique_sets(a.tri.complex.facets.begin(), a.tri.complex.facets.end());
    const bool facets_match = !full_leaf_dup && (leaf_sets == clique_sets);

    // lower-dimensional leaves <-> interior non-facet faces
    std::vector<std::vector<int>> lower_sets_list;
    bool lower_all_cliques = true;
    for (const NodeGraph& leaf : a.all_leaves) {
        if (leaf.edge_count() == a.g.edge_count()) continue;
        std::vector<int> ids = a.route_ids(leaf_to_routes(leaf, a.g));
        for (size_t x = 0; x < ids.size() && lower_all_cliques; ++x)
            for (size_t y = x + 1; y < ids.size(); ++y)
                if (!coherent(a.tri.route_list[static_cast<size_t>(ids[x])], a.tri.route_list[static_cast<size_t>(ids[y])],
                              a.tri.ag, a.tri.framing)) {
                    lower_all_cliques = false;
                    break;
                }
        lower_sets_list.push_back(std::move(ids));
    }
    std::set<std::vector<int>> lower_sets(lower_sets_list.begin(), lower_sets_list.end());
    const bool lower_distinct = lower_sets.size() == lower_sets_list.size();

    std::set<std::vector<int>> interior_nonfacet;
    {
        std::vector<Bits> supports;
        for (const Route& r : a.tri.route_list) supports.push_back(route_support(a.tri.ag, r));
        Bits full(a.tri.ag.edge_count());
        for (int id = 1; id <= a.tri.ag.edge_count(); ++id) full.set(id - 1);
        for (const Bits& face : a.tri.complex.all_faces()) {
            if (face.count() == 0) continue;
            Bits covered(a.tri.ag.edge_count());
            std::vector<int> ids;
            face.for_each([&](int v) {
                covered |= supports[static_cast<size_t>(v)];
                ids.push_back(v);
            });
            if (covered == full && clique_sets.find(ids) == clique_sets.end()) interior_nonfacet.insert(ids);
        }
    }
    const bool lower_match = lower_distinct && (lower_sets == interior_nonfacet);

    res.pass = facets_match && lower_all_cliques && lower_match;
    res.info["full_leaves"] = a.full_leaves.size();
    res.info["maximal_cliques"] = a.tri.complex.facets.size();
    if (!res.pass) {
        for (const auto& s : leaf_sets)
            if (clique_sets.find(s) == clique_sets.end()) {
                res.info["leaf_set_without_clique"] = face_json(s);
                break;
            }
        for (const auto& s : clique_sets)
            if (leaf_sets.find(s) == leaf_sets.end()) {
                res.info["clique_without_leaf_set"] = face_json(s);
                break;
            }
        for (const auto& s : lower_sets)
            if (interior_nonfacet.find(s) == interior_nonfacet.end()) {
                res.info["lower_leaf_not_interior"] = face_json(s);
                break;
            }
        for (const auto& s : interior_nonfacet)
            if (lower_sets.find(s) == lower_sets.end()) {
                res.info["interior_face_without_leaf"] = face_json(s);
                break;
            }
        res.info["lower_sets_pairwise_coherent"] = lower_all_cliques;
    }
    return res;
}

CheckResult check_flag(const GraphArtifacts& a) {
    CheckResult res;
    res.pass = is_flag(a.tri.complex);
    res.info["facets"] = a.tri.complex.facets.size();
    return res;
}

CheckResult check_lemma_leaves(const GraphArtifacts& a, std::uint64_t seed, int trials) {
    CheckResult res;
    res.pass = true;
    res.info["sigma_counts"] = a.rk;
    for (int t = 0; t < trials; ++t) {
        const ReductionTree random_tree = build_reduction_tree(a.g, ReductionStrategy::random(mix_seed(seed, static_cast<std::uint64_t>(t))));
        const std::vector<long long> counts = leaf_counts(random_tree);
        if (counts != a.rk) {
            res.pass = false;
            res.info["mismatch_trial"] = t;
            res.info["mismatch_counts"] = counts;
            break;
        }
    }
    res.info["trials"] = trials;
    return res;
}

CheckResult check_formal_sum(const GraphArtifacts& a, std::uint64_t seed) {
    CheckResult res;
    // depth-first leaf order as candidate shelling order of the facet complex
    std::map<std::vector<int>, int> facet_index;
    for (size_t k = 0; k < a.tri.complex.facets.size(); ++k) facet_index[a.tri.complex.facets[k]] = static_cast<int>(k);
    std::vector<int> candidate;
    bool candidate_ok = true;
    for (const NodeGraph& leaf : a.full_leaves) {
        auto it = facet_index.find(a.route_ids(leaf_to_routes(leaf, a.g)));
        if (it == facet_index.end()) {
            candidate_ok = false;
            break;
        }
        candidate.push_back(it->second);
    }
    const ShellingSearchResult found =
        find_shelling(a.tri.complex, candidate_ok ? &candidate : nullptr, mix_seed(seed, 0x5e11));
    res.info["dfs_was_shelling"] = found.candidate_was_shelling;
    if (!found.found) {
        res.pass = false;
        res.info["error"] = "no shelling order found within budget";
        return res;
    }

    // translate the facet order back to leaves
    std::map<std::vector<int>, const NodeGraph*> leaf_of_set;
    for (const NodeGraph& leaf : a.full_leaves) leaf_of_set[a.route_ids(leaf_to_routes(leaf, a.g))] = &leaf;
    std::vector<NodeGraph> facets_in_order;
    for (int idx : found.order) {
        auto it = leaf_of_set.find(a.tri.complex.facets[static_cast<size_t>(idx)]);
        if (it == leaf_of_set.end()) {
            res.pass = false;
            res.info["error"] = "facet without a corresponding full-dimensional leaf";
            return res;
        }
        NodeGraph leaf = *it->second;
        leaf.canonicalize();
        facets_in_order.push_back(std::move(leaf));
    }
    const FormalSumReport rep = verify_formal_sum(facets_in_order, a.all_leaves);
    res.pass = rep.pass;
    if (!rep.pass) res.info["error"] = rep.detail;
    res.info["order"] = found.order;
    return res;
}

CheckResult check_corollary_cor(const GraphArtifacts& a) {
    CheckResult res;
    const UniPoly expected = shift_beta(a.q, -1);
    UniPoly hstar;
    try {
        hstar = hstar_polynomial(a.tri.ag);
    } catch (const std::exception& e) {
        res.pass = false;
        res.info["error"] = e.what();
        return res;
    }
    const bool series_eq = (hstar == expected);

    bool kostant_ok = true;
    for (long long m = 0; m <= 3 && kostant_ok; ++m) {
        const std::vector<long long> v = dilate_netflow(a.tri.ag, m);
        if (kostant_dp(a.tri.ag, v) != kostant_bruteforce(a.tri.ag, v)) kostant_ok = false;
    }

    res.pass = series_eq && kostant_ok;
    res.info["hstar"] = unipoly_json(hstar);
    res.info["q_shifted"] = unipoly_json(expected);
    res.info["kostant_bruteforce_agrees"] = kostant_ok;
    return res;
}

CheckResult check_nonnegativity(const GraphArtifacts& a) {
    CheckResult res;
    const UniPoly shifted = shift_beta(a.q, -1);
    res.pass = check_nonnegative(shifted);
    res.info["q_shifted"] = unipoly_json(shifted);
    return res;
}

nlohmann::ordered_json run_verify(const std::vector<CorpusEntry>& corpus, std::uint64_t seed, bool& all_pass) {
    Json report;
    report["seed"] = seed;
    report["graphs"] = Json::array();
    all_pass = true;
    for (size_t idx = 0; idx < corpus.size(); ++idx) {
        const CorpusEntry& entry = corpus[idx];
        const GraphArtifacts a = GraphArtifacts::build(entry.graph);
        const std::uint64_t graph_seed = mix_seed(seed, idx);

        Json checks;
        auto put = [&](const char* name, CheckResult r) {
            Json jc;
            jc["pass"] = r.pass;
            jc["info"] = std::move(r.info);
            checks[name] = std::move(jc);
            all_pass = all_pass && checks[name]["pass"].get<bool>();
        };
        put("thm_h", check_thm_h(a));
        put("prop_coh", check_prop_coh(a));
        put("flag", check_flag(a));
        put("lemma_leaves", check_lemma_leaves(a, graph_seed));
        put("formal_sum", check_formal_sum(a, graph_seed));
        put("corollary_cor", check_corollary_cor(a));
        put("nonnegativity", check_nonnegativity(a));

        Json jg;
        jg["name"] = entry.name;
        jg["graph"] = graph_to_json(entry.graph);
        jg["checks"] = std::move(checks);
        report["graphs"].push_back(std::move(jg));
    }
    report["all_pass"] = all_pass;
    return report;
}

nlohmann::ordered_json report_graph(const std::string& name, const MultiGraph& g) {
    const GraphArtifacts a = GraphArtifacts::build(g);
    const FHVectors fh = fh_vectors(a.tri.complex);
    const UniPoly q_shifted = shift_beta(a.q, -1);
    const UniPoly hstar = hstar_polynomial(a.tri.ag);
    const int dim = flow_polytope_dim(a.tri.ag);
    const EhrhartPoly ep = ehrhart_polynomial(ehrhart_values(a.tri.ag, dim + 2), dim);
    Rat vol = ep.leading() * Rat(factorial(dim));
    vol.canonicalize();

    Json j;
    j["name"] = name;
    j["graph"] = graph_to_json(g);
    j["dim"] = dim;
    j["routes"] = a.tri.route_list.size();
    j["q"] = unipoly_to_json(a.q)["coeffs"];
    j["q_shifted"] = unipoly_to_json(q_shifted)["coeffs"];
    j["q_shifted_nonnegative"] = check_nonnegative(q_shifted);
    Json f = Json::array(), h = Json::array();
    for (const Int& v : fh.f) f.push_back(int_to_json(v));
    for (const Int& v : fh.h) h.push_back(int_to_json(v));
    j["f"] = f;
    j["h"] = h;
    j["hstar"] = unipoly_to_json(hstar)["coeffs"];
    j["facets"] = a.tri.complex.facets.size();
    j["leaf_counts"] = a.rk;
    j["volume"] = to_string(vol);
    j["flag"] = is_flag(a.tri.complex);
    j["hstar_equals_q_shifted"] = (hstar == q_shifted);
    return j;
}

std::string report_graph_text(const std::string& name, const MultiGraph& g) {
    const Json j = report_graph(name, g);
    std::ostringstream os;
    os << "graph " << j["name"].get<std::string>() << ": n=" << g.n << ", edges=" << g.edge_count() << "\n";
    os << "  dim F = " << j["dim"] << ", routes = " << j["routes"] << ", facets = " << j["facets"] << "\n";
    os << "  Q(b)      = " << j["q"].dump() << "  (coefficients by ascending degree)\n";
    os << "  Q(b-1)    = " << j["q_shifted"].dump() << "  nonnegative: " << (j["q_shifted_nonnegative"].get<bool>() ? "yes" : "no") << "\n";
    os << "  h         = " << j["h"].dump() << "\n";
    os << "  h*        = " << j["hstar"].dump() << "  equals Q(b-1): " << (j["hstar_equals_q_shifted"].get<bool>() ? "yes" : "no") << "\n";
    os << "  f         = " << j["f"].dump() << "\n";
    os << "  leaves    = " << j["leaf_counts"].dump() << "\n";
    os << "  volume    = " << j["volume"].get<std::string>() << ", flag: " << (j["flag"].get<bool>() ? "yes" : "no") << "\n";
    return os.str();
}

} // namespace flowforms
