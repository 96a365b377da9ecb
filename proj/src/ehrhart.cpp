#include "flowforms/ehrhart.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "flowforms/reduction.hpp"
#include "flowforms/triangulation.hpp"

namespace flowforms {

namespace {

void check_netflow_size(const AugmentedGraph& ag, const std::vector<long long>& netflow) {
    if (static_cast<int>(netflow.size()) != ag.n() + 2)
        throw std::invalid_argument("netflow vector must have one entry per augmented vertex");
}

// Outgoing targets per augmented vertex, ascending; the sink absorbs the rest.
std::vector<std::vector<int>> out_targets(const AugmentedGraph& ag) {
    const int n = ag.n();
    std::vector<std::vector<int>> out(static_cast<size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) out[0].push_back(v); // (s, v)
    for (const OriginalEdge& e : ag.base.edges) out[static_cast<size_t>(e.tail)].push_back(e.head);
    for (int v = 1; v <= n; ++v) out[static_cast<size_t>(v)].push_back(ag.sink_vertex()); // (v, t)
    for (auto& lst : out) std::sort(lst.begin(), lst.end());
    return out;
}

} // namespace

Int kostant_dp(const AugmentedGraph& ag, const std::vector<long long>& netflow) {
    check_netflow_size(ag, netflow);
    if (std::accumulate(netflow.begin(), netflow.end(), 0ll) != 0) return 0;
    const int n = ag.n();
    const std::vector<std::vector<int>> out = out_targets(ag);
    std::vector<std::map<std::vector<long long>, Int>> memo(static_cast<size_t>(n) + 1);

    // acc[v] = inflow already routed to inner vertex v; the sink needs no
    // tracking, its balance follows from total conservation.
    std::vector<long long> acc(static_cast<size_t>(n) + 1, 0);

    auto vertex_count = [&](auto&& self, int u) -> Int {
        if (u > n) return Int(1);
        std::vector<long long> key(acc.begin() + u, acc.end()); // acc[u..n]
        auto& table = memo[static_cast<size_t>(u)];
        if (auto it = table.find(key); it != table.end()) return it->second;

        const long long supply = netflow[static_cast<size_t>(u)] + acc[static_cast<size_t>(u)];
        Int total = 0;
        if (supply >= 0) {
            const auto& targets = out[static_cast<size_t>(u)];
            // distribute `supply` over the outgoing edges of u
            auto distribute = [&](auto&& dself, size_t pos, long long remaining) -> Int {
                if (pos + 1 == targets.size()) {
                    const int w = targets[pos];
                    if (w <= n) acc[static_cast<size_t>(w)] += remaining;
                    Int sub = self(self, u + 1);
                    if (w <= n) acc[static_cast<size_t>(w)] -= remaining;
                    return sub;
                }
                Int sum = 0;
                const int w = targets[pos];
                for (long long f = 0; f <= remaining; ++f) {
                    if (w <= n) acc[static_cast<size_t>(w)] += f;
                    sum += dself(dself, pos + 1, remaining - f);
                    if (w <= n) acc[static_cast<size_t>(w)] -= f;
                }
                return sum;
            };
            if (targets.empty())
                total = (supply == 0) ? self(self, u + 1) : Int(0);
            else
                total = distribute(distribute, 0, supply);
        }
        table.emplace(std::move(key), total);
        return total;
    };
    return vertex_count(vertex_count, 0);
}

Int kostant_bruteforce(const AugmentedGraph& ag, const std::vector<long long>& netflow) {
    check_netflow_size(ag, netflow);
    // all augmented edges as (tail, head), grouped by ascending tail;
    // residual indices run s = 0, inner v = v, t = n+1
    std::vector<std::pair<int, int>> edges;
    for (int id = 1; id <= ag.edge_count(); ++id) edges.push_back({ag.tail_of(id), ag.head_of(id)});
    std::sort(edges.begin(), edges.end());

    std::vector<long long> residual = netflow; // must end at zero everywhere
    Int count = 0;
    auto rec = [&](auto&& self, size_t e) -> void {
        if (e == edges.size()) {
            for (long long r : residual)
                if (r != 0) return;
            ++count;
            return;
        }
        const auto [tail, head] = edges[e];
        // once the last edge out of a vertex is assigned its residual is fixed
        const bool last_of_tail = (e + 1 == edges.size()) || (edges[e + 1].first != tail);
        const size_t ti = static_cast<size_t>(tail);
        const size_t hi = static_cast<size_t>(head);
        for (long long f = 0; f <= residual[ti]; ++f) {
            residual[ti] -= f;
            residual[hi] += f;
            if (!last_of_tail || residual[ti] == 0) self(self, e + 1);
            residual[ti] += f;
            residual[hi] -= f;
        }
    };
    rec(rec, 0);
    return count;
}

std::vector<long long> dilate_netflow(const AugmentedGraph& ag, long long m) {
    std::vector<long long> v(static_cast<size_t>(ag.n()) + 2, 0);
    v.front() = m;
    v.back() = -m;
    return v;
}

std::vector<Int> ehrhart_values(const AugmentedGraph& ag, int m_max) {
    std::vector<Int> vals;
    vals.reserve(static_cast<size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) vals.push_back(kostant_dp(ag, dilate_netflow(ag, m)));
    return vals;
}

int flow_polytope_dim(const AugmentedGraph& ag) { return ag.base.edge_count() + ag.n() - 1; }

Rat EhrhartPoly::eval(long long t) const {
    Rat r = 0;
    const Rat tq(static_cast<long>(t));
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        r *= tq;
        r += *it;
    }
    r.canonicalize();
    return r;
}

EhrhartPoly ehrhart_polynomial(const std::vector<Int>& values, int dim) {
    if (static_cast<int>(values.size()) < dim + 1)
        throw std::invalid_argument("need at least dim+1 Ehrhart values to interpolate");
    // forward differences at 0
    std::vector<Int> diff(values.begin(), values.begin() + dim + 1);
    std::vector<Int> deltas;
    deltas.reserve(static_cast<size_t>(dim) + 1);
    for (int k = 0; k <= dim; ++k) {
        deltas.push_back(diff.front());
        for (size_t a = 0; a + 1 < diff.size(); ++a) diff[a] = diff[a + 1] - diff[a];
        diff.pop_back();
    }
    if (dim > 0 && deltas.back() == 0)
        throw std::runtime_error("Ehrhart degree mismatch: leading finite difference vanishes");

    // p(t) = sum_k deltas[k] * t(t-1)...(t-k+1) / k!
    std::vector<Rat> coeffs(static_cast<size_t>(dim) + 1, Rat(0));
    std::vector<Rat> basis{Rat(1)}; // falling factorial, ascending coefficients
    Int kfact = 1;
    for (int k = 0; k <= dim; ++k) {
        if (k > 0) {
            kfact *= k;
            // basis *= (t - (k-1))
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (size_t a = 0; a < basis.size(); ++a) {
                next[a + 1] += basis[a];
                next[a] -= basis[a] * Rat(k - 1);
            }
            basis = std::move(next);
        }
        const Rat scale = Rat(deltas[static_cast<size_t>(k)]) / Rat(kfact);
        for (size_t a = 0; a < basis.size(); ++a) coeffs[a] += basis[a] * scale;
    }
    EhrhartPoly p;
    p.c = std::move(coeffs);
    for (auto& q : p.c) q.canonicalize();
    while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
    if (p.degree() != dim) throw std::runtime_error("Ehrhart degree mismatch: interpolant has wrong degree");

    // every value beyond the interpolation window must be reproduced
    for (size_t m = static_cast<size_t>(dim) + 1; m < values.size(); ++m)
        if (p.eval(static_cast<long long>(m)) != Rat(values[m]))
            throw std::runtime_error("Ehrhart interpolation failed to reproduce a later value");
    return p;
}

UniPoly hstar_polynomial(const AugmentedGraph& ag) {
    const int dim = flow_polytope_dim(ag);
    const int m_max = dim + 3;
    const std::vector<Int> vals = ehrhart_values(ag, m_max);

    UniPoly series = UniPoly::from_coeffs(std::vector<Int>(vals.begin(), vals.end()));
    const UniPoly one_minus_beta = UniPoly::from_coeffs({Int(1), Int(-1)});
    const UniPoly prod = series * unipoly_pow(one_minus_beta, dim + 1);
    for (int k = dim + 1; k <= m_max; ++k)
        if (prod.coeff(k) != 0)
            throw std::runtime_error("h-star series has a nonvanishing coefficient beyond the dimension");
    std::vector<Int> coeffs;
    for (int k = 0; k <= dim; ++k) coeffs.push_back(prod.coeff(k));
    return UniPoly::from_coeffs(std::move(coeffs));
}

CryReport cry_check(int n) {
    CryReport rep;
    rep.n = n;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) pairs.push_back({a, b});
    const MultiGraph kn = MultiGraph::from_edges(n, pairs);
    const AugmentedGraph ag = augment(kn);

    const ReductionTree tree = build_reduction_tree(kn, ReductionStrategy::sigma());
    rep.leaf_count = Int(static_cast<long>(leaf_counts(tree)[static_cast<size_t>(kn.edge_count())]));

    const DkkTriangulation tri = DkkTriangulation::build(kn, FramingSpec::canonical(kn));
    rep.clique_count = Int(static_cast<long>(tri.max_cliques.size()));

    const int dim = flow_polytope_dim(ag);
    const EhrhartPoly ep = ehrhart_polynomial(ehrhart_values(ag, dim + 2), dim);
    Rat lead = ep.leading() * Rat(factorial(dim));
    lead.canonicalize();
    if (lead.get_den() != 1) {
        rep.pass = false;
        rep.detail = "normalized volume from the Ehrhart leading coefficient is not an integer";
        return rep;
    }
    rep.volume_from_ehrhart = lead.get_num();

    rep.catalan_product = 1;
    for (int k = 0; k <= n - 1; ++k) rep.catalan_product *= binomial(2 * k, k) / (k + 1);

    rep.pass = (rep.leaf_count == rep.clique_count) && (rep.clique_count == rep.volume_from_ehrhart);
    rep.matches_catalan = rep.pass && (rep.leaf_count == rep.catalan_product);
    std::ostringstream os;
    os << "volume three ways: leaves=" << to_string(rep.leaf_count) << ", cliques=" << to_string(rep.clique_count)
       << ", dim!*lead=" << to_string(rep.volume_from_ehrhart) << "; catalan product (k=0.." << (n - 1)
       << ")=" << to_string(rep.catalan_product) << (rep.matches_catalan ? " (matches)" : " (reported only)");
    rep.detail = os.str();
    return rep;
}

} // namespace flowforms
