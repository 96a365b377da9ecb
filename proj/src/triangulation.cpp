#include "flowforms/triangulation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace flowforms {

int Framing::in_pos(int v, int aug_id) const {
    const auto& lst = in_rank[static_cast<size_t>(v)];
    for (size_t k = 0; k < lst.size(); ++k)
        if (lst[k] == aug_id) return static_cast<int>(k);
    throw std::logic_error("edge not ranked at vertex");
}

int Framing::out_pos(int v, int aug_id) const {
    const auto& lst = out_rank[static_cast<size_t>(v)];
    for (size_t k = 0; k < lst.size(); ++k)
        if (lst[k] == aug_id) return static_cast<int>(k);
    throw std::logic_error("edge not ranked at vertex");
}

Framing sigma_tilde_framing(const AugmentedGraph& ag, const FramingSpec& spec) {
    Framing f;
    const int n = ag.n();
    f.in_rank.assign(static_cast<size_t>(n) + 1, {});
    f.out_rank.assign(static_cast<size_t>(n) + 1, {});
    for (int v = 1; v <= n; ++v) {
        f.in_rank[static_cast<size_t>(v)] = spec.in_rank[static_cast<size_t>(v)];
        f.in_rank[static_cast<size_t>(v)].push_back(ag.source_edge_id(v)); // (s,v) last
        f.out_rank[static_cast<size_t>(v)] = spec.out_rank[static_cast<size_t>(v)];
        f.out_rank[static_cast<size_t>(v)].push_back(ag.sink_edge_id(v)); // (v,t) last
    }
    return f;
}

namespace {

// -1 if the prefix of p entering v precedes q's, +1 for the opposite,
// 0 when the prefixes coincide.
int in_relation(const std::vector<int>& pe, const std::vector<int>& qe, int prefix_p, int prefix_q,
                const AugmentedGraph& ag, const Framing& fr) {
    int a = prefix_p, b = prefix_q; // index of the edge entering v in each route
    while (a >= 0 && b >= 0 && pe[static_cast<size_t>(a)] == qe[static_cast<size_t>(b)]) {
        --a;
        --b;
    }
    if (a < 0 || b < 0) return 0; // identical prefixes (both start at s)
    const int w = ag.head_of(pe[static_cast<size_t>(a)]); // largest vertex after which they coincide
    const int pa = fr.in_pos(w, pe[static_cast<size_t>(a)]);
    const int pb = fr.in_pos(w, qe[static_cast<size_t>(b)]);
    return pa < pb ? -1 : 1;
}

int out_relation(const std::vector<int>& pe, const std::vector<int>& qe, int suffix_p, int suffix_q,
                 const AugmentedGraph& ag, const Framing& fr) {
    int a = suffix_p, b = suffix_q; // index of the edge leaving v in each route
    const int na = static_cast<int>(pe.size()), nb = static_cast<int>(qe.size());
    while (a < na && b < nb && pe[static_cast<size_t>(a)] == qe[static_cast<size_t>(b)]) {
        ++a;
        ++b;
    }
    if (a >= na || b >= nb) return 0;
    const int w = ag.tail_of(pe[static_cast<size_t>(a)]);
    const int pa = fr.out_pos(w, pe[static_cast<size_t>(a)]);
    const int pb = fr.out_pos(w, qe[static_cast<size_t>(b)]);
    return pa < pb ? -1 : 1;
}

} // namespace

bool coherent(const Route& p, const Route& q, const AugmentedGraph& ag, const Framing& framing) {
    const std::vector<int> pe = route_aug_edges(ag, p);
    const std::vector<int> qe = route_aug_edges(ag, q);
    const std::vector<int> pv = route_vertices(ag, p);
    const std::vector<int> qv = route_vertices(ag, q);

    // position of each inner vertex of q along its chain
    std::vector<int> pos_q(static_cast<size_t>(ag.n()) + 2, -1);
    for (size_t k = 1; k + 1 < qv.size(); ++k) pos_q[static_cast<size_t>(qv[k])] = static_cast<int>(k);

    for (size_t k = 1; k + 1 < pv.size(); ++k) {
        const int v = pv[k];
        const int kq = pos_q[static_cast<size_t>(v)];
        if (kq < 0) continue; // not a common inner vertex
        // edge entering v is edge (k-1) of the chain, edge leaving v is edge k
        const int rin = in_relation(pe, qe, static_cast<int>(k) - 1, kq - 1, ag, framing);
        const int rout = out_relation(pe, qe, static_cast<int>(k), kq, ag, framing);
        if (rin * rout == -1) return false;
    }
    return true;
}

namespace {

struct CliqueEnumerator {
    const std::vector<Bits>& adj;
    int n;
    std::vector<std::vector<int>> out;
    std::vector<int> current;

    void run() {
        Bits p(n), x(n);
        for (int v = 0; v < n; ++v) p.set(v);
        expand(p, x);
    }

    // Bron-Kerbosch with pivoting
    void expand(Bits p, Bits x) {
        if (p.none() && x.none()) {
            out.push_back(current);
            return;
        }
        int pivot = -1, best = -1;
        auto consider = [&](int u) {
            int deg = 0;
            p.for_each([&](int w) {
                if (adj[static_cast<size_t>(u)].test(w)) ++deg;
            });
            if (deg > best) {
                best = deg;
                pivot = u;
            }
        };
        p.for_each(consider);
        x.for_each(consider);

        std::vector<int> candidates;
        p.for_each([&](int v) {
            if (!adj[static_cast<size_t>(pivot)].test(v)) candidates.push_back(v);
        });
        for (int v : candidates) {
            Bits np(n), nx(n);
            p.for_each([&](int w) {
                if (adj[static_cast<size_t>(v)].test(w)) np.set(w);
            });
            x.for_each([&](int w) {
                if (adj[static_cast<size_t>(v)].test(w)) nx.set(w);
            });
            current.push_back(v);
            expand(np, nx);
            current.pop_back();
            p.reset(v);
            x.set(v);
        }
    }
};

} // namespace

std::vector<std::vector<int>> maximal_cliques(const AugmentedGraph& ag, const Framing& framing,
                                              const std::vector<Route>& route_list) {
    const int n = static_cast<int>(route_list.size());
    std::vector<Bits> adj(static_cast<size_t>(n), Bits(n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coherent(route_list[static_cast<size_t>(a)], route_list[static_cast<size_t>(b)], ag, framing)) {
                adj[static_cast<size_t>(a)].set(b);
                adj[static_cast<size_t>(b)].set(a);
            }
    CliqueEnumerator enumerator{adj, n, {}, {}};
    enumerator.run();
    for (auto& c : enumerator.out) std::sort(c.begin(), c.end());
    std::sort(enumerator.out.begin(), enumerator.out.end());
    return enumerator.out;
}

int SimplicialComplex::d() const {
    size_t best = 0;
    for (const auto& f : facets) best = std::max(best, f.size());
    return static_cast<int>(best);
}

const std::vector<Bits>& SimplicialComplex::all_faces() const {
    if (faces_done_) return faces_cache_;
    std::unordered_set<Bits, BitsHash> seen;
    for (const auto& facet : facets) {
        const size_t sz = facet.size();
        if (sz >= 63) throw std::runtime_error("face enumeration supports facets with at most 62 vertices");
        // all subsets of this facet
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << sz); ++sub) {
            Bits b(num_vertices);
            for (size_t t = 0; t < sz; ++t)
                if ((sub >> t) & 1) b.set(facet[t]);
            seen.insert(std::move(b));
        }
    }
    faces_cache_.assign(seen.begin(), seen.end());
    std::sort(faces_cache_.begin(), faces_cache_.end(), [](const Bits& a, const Bits& b) {
        const int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a < b;
    });
    faces_done_ = true;
    return faces_cache_;
}

bool SimplicialComplex::is_face(const std::vector<int>& vertices) const {
    for (const auto& facet : facets)
        if (std::includes(facet.begin(), facet.end(), vertices.begin(), vertices.end())) return true;
    return vertices.empty() && !facets.empty();
}

SimplicialComplex complex_from_cliques(int num_vertices, const std::vector<std::vector<int>>& cliques) {
    SimplicialComplex c;
    c.num_vertices = num_vertices;
    std::vector<std::vector<int>> sorted = cliques;
    for (auto& f : sorted) std::sort(f.begin(), f.end());
    // drop duplicates and non-maximal members
    std::vector<std::vector<int>> keep;
    for (size_t a = 0; a < sorted.size(); ++a) {
        bool dominated = false;
        for (size_t b = 0; b < sorted.size() && !dominated; ++b) {
            if (a == b) continue;
            if (sorted[b].size() < sorted[a].size()) continue;
            if (sorted[b] == sorted[a] && b < a) dominated = true;
            else if (sorted[b].size() > sorted[a].size() &&
                     std::includes(sorted[b].begin(), sorted[b].end(), sorted[a].begin(), sorted[a].end()))
                dominated = true;
        }
        if (!dominated) keep.push_back(sorted[a]);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    c.facets = std::move(keep);
    return c;
}

FHVectors fh_vectors(const SimplicialComplex& c) {
    FHVectors fh;
    fh.d = c.d();
    fh.f.assign(static_cast<size_t>(fh.d) + 1, Int(0));
    for (const Bits& face : c.all_faces()) ++fh.f[static_cast<size_t>(face.count())];
    fh.h = h_vector_from_f(fh.f);
    return fh;
}

std::vector<Int> h_vector_from_f(const std::vector<Int>& f) {
    const int d = static_cast<int>(f.size()) - 1;
    const UniPoly x_minus_1 = UniPoly::from_coeffs({Int(-1), Int(1)});
    UniPoly acc;
    for (int k = 0; k <= d; ++k) acc = acc + unipoly_pow(x_minus_1, d - k).scaled(f[static_cast<size_t>(k)]);
    std::vector<Int> h(static_cast<size_t>(d) + 1, Int(0));
    for (int i = 0; i <= d; ++i) h[static_cast<size_t>(i)] = acc.coeff(d - i);
    return h;
}

UniPoly h_polynomial(const FHVectors& fh) { return UniPoly::from_coeffs(fh.h); }

UniPoly h_polynomial_by_faces(const SimplicialComplex& c) {
    const int d = c.d();
    std::vector<Int> count_by_size(static_cast<size_t>(d) + 1, Int(0));
    for (const Bits& face : c.all_faces()) ++count_by_size[static_cast<size_t>(face.count())];
    const UniPoly one_minus_x = UniPoly::from_coeffs({Int(1), Int(-1)});
    UniPoly acc;
    for (int s = 0; s <= d; ++s) {
        UniPoly term = unipoly_pow(one_minus_x, d - s).scaled(count_by_size[static_cast<size_t>(s)]);
        // multiply by x^s
        if (!term.c.empty()) term.c.insert(term.c.begin(), static_cast<size_t>(s), Int(0));
        acc = acc + term;
    }
    return acc;
}

bool is_flag(const SimplicialComplex& c) {
    const int n = c.num_vertices;
    std::vector<Bits> adj(static_cast<size_t>(n), Bits(n));
    for (const auto& facet : c.facets)
        for (size_t a = 0; a < facet.size(); ++a)
            for (size_t b = a + 1; b < facet.size(); ++b) {
                adj[static_cast<size_t>(facet[a])].set(facet[b]);
                adj[static_cast<size_t>(facet[b])].set(facet[a]);
            }
    CliqueEnumerator enumerator{adj, n, {}, {}};
    enumerator.run();
    for (auto& clique : enumerator.out) {
        std::sort(clique.begin(), clique.end());
        if (!c.is_face(clique)) return false;
    }
    return true;
}

std::vector<Int> interior_face_counts(const SimplicialComplex& c, const AugmentedGraph& ag,
                                      const std::vector<Route>& route_list) {
    std::vector<Bits> supports;
    supports.reserve(route_list.size());
    for (const Route& r : route_list) supports.push_back(route_support(ag, r));
    Bits full(ag.edge_count());
    for (int id = 1; id <= ag.edge_count(); ++id) full.set(id - 1);

    std::vector<Int> counts(static_cast<size_t>(c.d()), Int(0));
    for (const Bits& face : c.all_faces()) {
        if (face.count() == 0) continue;
        Bits covered(ag.edge_count());
        face.for_each([&](int v) { covered |= supports[static_cast<size_t>(v)]; });
        if (covered == full) ++counts[static_cast<size_t>(face.count() - 1)];
    }
    return counts;
}

DkkTriangulation DkkTriangulation::build(const MultiGraph& g, const FramingSpec& spec) {
    DkkTriangulation t;
    t.ag = augment(g);
    t.framing = sigma_tilde_framing(t.ag, spec);
    t.route_list = routes(t.ag);
    t.max_cliques = maximal_cliques(t.ag, t.framing, t.route_list);
    t.complex = complex_from_cliques(static_cast<int>(t.route_list.size()), t.max_cliques);
    return t;
}

int DkkTriangulation::route_id(const Route& r) const {
    auto it = std::lower_bound(route_list.begin(), route_list.end(), r);
    if (it == route_list.end() || !(*it == r)) return -1;
    return static_cast<int>(it - route_list.begin());
}

} // namespace flowforms
