// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria with a stated runtime budget fail when the budget is
// exceeded.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "flowforms/json_io.hpp"
#include "flowforms/shelling.hpp"
#include "flowforms/verify.hpp"

using namespace flowforms;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    double elapsed = 0;
    std::string note;
};

int failures = 0;

void emit(const Criterion& c) {
    std::printf("%s  criterion %2d  %-58s (%.2fs)%s%s\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), c.elapsed,
                c.note.empty() ? "" : "  -- ", c.note.c_str());
    if (!c.pass) ++failures;
}

UniPoly up(std::vector<long> cs) {
    std::vector<Int> v;
    for (long x : cs) v.push_back(Int(x));
    return UniPoly::from_coeffs(std::move(v));
}

} // namespace

int main() {
    const std::vector<CorpusEntry> corpus = builtin_corpus();
    const std::uint64_t seed = 1;

    // ---- criterion 1: the worked example, byte-exact, under one second ----
    {
        Criterion c{1, "sigma reduced form and Q of the three-vertex path"};
        const auto t0 = Clock::now();
        const MultiGraph p3 = path_graph(3);
        const ReductionTree tree = build_reduction_tree(p3, ReductionStrategy::sigma());
        const MultivarPoly form = reduced_form_from_tree(tree);
        const std::string canonical = multivar_poly_to_json(form).dump();
        const std::string expected =
            R"({"terms":[{"x":{"1,2":1,"1,3":1},"beta":0,"coef":1},{"x":{"1,3":1},"beta":1,"coef":1},{"x":{"1,3":1,"2,3":1},"beta":0,"coef":1}]})";
        const UniPoly q = specialize_x_to_one(form);
        const FHVectors fh = fh_vectors(DkkTriangulation::build(p3, FramingSpec::canonical(p3)).complex);
        c.pass = (canonical == expected) && (q == up({2, 1})) &&
                 (shift_beta(h_polynomial(fh), 1) == q);
        c.elapsed = seconds_since(t0);
        if (c.elapsed >= 1.0) {
            c.pass = false;
            c.note = "runtime budget of 1s exceeded";
        }
        emit(c);
    }

    // shared artifacts for the per-graph criteria
    std::vector<GraphArtifacts> artifacts;
    artifacts.reserve(corpus.size());

    // ---- criterion 2: Q(b) = h(C, b+1) on the whole corpus, under two minutes ----
    {
        Criterion c{2, "reduced form equals the shifted h-polynomial on the corpus"};
        const auto t0 = Clock::now();
        for (const auto& entry : corpus) {
            artifacts.push_back(GraphArtifacts::build(entry.graph));
            const CheckResult r = check_thm_h(artifacts.back());
            if (!r.pass) {
                c.pass = false;
                c.note = "first failure at " + entry.name;
                break;
            }
        }
        c.elapsed = seconds_since(t0);
        if (c.elapsed >= 120.0) {
            c.pass = false;
            c.note = "runtime budget of 120s exceeded";
        }
        emit(c);
        if (artifacts.size() != corpus.size()) return 1; // later criteria need all artifacts
    }

    auto per_graph = [&](int id, const std::string& title, auto&& check) {
        Criterion c{id, title};
        const auto t0 = Clock::now();
        for (size_t k = 0; k < corpus.size(); ++k) {
            if (!check(artifacts[k], mix_seed(seed, k))) {
                c.pass = false;
                c.note = "first failure at " + corpus[k].name;
                break;
            }
        }
        c.elapsed = seconds_since(t0);
        emit(c);
    };

    per_graph(3, "leaf counts invariant over 20 random reduction orders",
              [](const GraphArtifacts& a, std::uint64_t s) { return check_lemma_leaves(a, s, 20).pass; });

    per_graph(4, "full leaves are the maximal cliques, lower leaves the interior faces",
              [](const GraphArtifacts& a, std::uint64_t) { return check_prop_coh(a).pass; });

    per_graph(5, "every corpus complex is flag",
              [](const GraphArtifacts& a, std::uint64_t) { return check_flag(a).pass; });

    per_graph(6, "a shelling exists and its formal sum is the leaf multiset",
              [](const GraphArtifacts& a, std::uint64_t s) { return check_formal_sum(a, s).pass; });

    // ---- criterion 7: nonnegativity, with the path family spelled out ----
    {
        Criterion c{7, "Q(b-1) has nonnegative coefficients (corpus and paths to P7)"};
        const auto t0 = Clock::now();
        for (size_t k = 0; k < corpus.size() && c.pass; ++k)
            if (!check_nonnegativity(artifacts[k]).pass) {
                c.pass = false;
                c.note = "first failure at " + corpus[k].name;
            }
        for (int n = 2; n <= 7 && c.pass; ++n) {
            const UniPoly q = specialize_x_to_one(
                reduced_form_from_tree(build_reduction_tree(path_graph(n), ReductionStrategy::sigma())));
            if (!check_nonnegative(shift_beta(q, -1))) {
                c.pass = false;
                c.note = "path on " + std::to_string(n) + " vertices";
            }
        }
        c.elapsed = seconds_since(t0);
        emit(c);
    }

    per_graph(8, "Q(b-1) equals the truncated Ehrhart series, DP cross-validated",
              [](const GraphArtifacts& a, std::uint64_t) { return check_corollary_cor(a).pass; });

    // ---- criterion 9: complete-graph volumes three ways, under five minutes ----
    {
        Criterion c{9, "complete-graph volume: leaves = cliques = dim! * leading"};
        const auto t0 = Clock::now();
        for (int n : {3, 4}) {
            const CryReport r = cry_check(n);
            std::printf("      criterion  9  n=%d: %s\n", n, r.detail.c_str());
            if (!r.pass) {
                c.pass = false;
                c.note = "three-way disagreement at n=" + std::to_string(n);
            }
        }
        std::printf("      criterion  9  note: the Catalan product is reported under the shifted index\n");
        c.elapsed = seconds_since(t0);
        if (c.elapsed >= 300.0) {
            c.pass = false;
            c.note = "runtime budget of 300s exceeded";
        }
        emit(c);
    }

    // ---- criterion 10: the rewriting engine agrees with the tree reading ----
    {
        Criterion c{10, "rewriting engine matches tree reading at x = 1, 5 random orders"};
        const auto t0 = Clock::now();
        for (size_t k = 0; k < corpus.size() && c.pass; ++k) {
            const GraphArtifacts& a = artifacts[k];
            const Monomial m = monomial_of_graph(NodeGraph::of(a.g));
            if (specialize_x_to_one(rewrite_reduced_form(m)) != a.q) c.pass = false;
            for (std::uint64_t s = 0; s < 5 && c.pass; ++s)
                if (specialize_x_to_one(rewrite_reduced_form(m, RewriteStrategy::random(mix_seed(seed, 1000 + 10 * k + s)))) != a.q)
                    c.pass = false;
            if (!c.pass) c.note = "first failure at " + corpus[k].name;
        }
        c.elapsed = seconds_since(t0);
        emit(c);
    }

    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
