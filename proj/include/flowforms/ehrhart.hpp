// Kostant partition function counts on the augmented graph (memoized
// dynamic program over the vertex order plus an independent brute-force
// enumeration), Ehrhart values and exact rational interpolation, the
// h-star polynomial of the flow polytope, and the complete-graph
// cross-checks.

#pragma once

#include <string>
#include <vector>

#include "flowforms/algebra.hpp"
#include "flowforms/multigraph.hpp"
#include "flowforms/numbers.hpp"

namespace flowforms {

// netflow is indexed over the augmented vertex order (s, 1, ..., n, t) and
// must have n+2 entries. Infeasible vectors count 0.
Int kostant_dp(const AugmentedGraph& ag, const std::vector<long long>& netflow);

// Same count by direct enumeration of edge flows with residual pruning;
// kept deliberately separate from the dynamic program.
Int kostant_bruteforce(const AugmentedGraph& ag, const std::vector<long long>& netflow);

std::vector<long long> dilate_netflow(const AugmentedGraph& ag, long long m);

// i(F, m) for m = 0..m_max, each the Kostant count of (m, 0, ..., 0, -m).
std::vector<Int> ehrhart_values(const AugmentedGraph& ag, int m_max);

// dim F = |E(G)| + |V(G)| - 1.
int flow_polytope_dim(const AugmentedGraph& ag);

struct EhrhartPoly {
    std::vector<Rat> c; // ascending degree

    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rat eval(long long t) const;
    Rat leading() const { return c.empty() ? Rat(0) : c.back(); }
};

// Exact Newton interpolation through values[0..dim]. Throws if the degree
// is not exactly dim or if later supplied values are not reproduced.
EhrhartPoly ehrhart_polynomial(const std::vector<Int>& values, int dim);

// Numerator of the Ehrhart series: the degree-<=dim truncation of
// (sum_m i(m) beta^m) (1-beta)^(dim+1), with the next few coefficients
// checked to vanish. Throws on a nonvanishing high-order term.
UniPoly hstar_polynomial(const AugmentedGraph& ag);

struct CryReport {
    int n = 0;
    bool pass = false;
    Int leaf_count;      // full-dimensional sigma leaves
    Int clique_count;    // maximal coherent cliques
    Int volume_from_ehrhart; // dim! * leading coefficient
    Int catalan_product;     // prod_{k=0}^{n-1} Cat(k), reported for comparison
    bool matches_catalan = false;
    std::string detail;
};

// Three independent computations of the normalized volume of the flow
// polytope of the augmented complete graph on [n] must agree; the Catalan
// product is reported alongside.
CryReport cry_check(int n);

} // namespace flowforms
