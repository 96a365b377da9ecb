// Framings of the augmented graph, route coherence, maximal cliques of
// mutually coherent routes (the facets of the framed triangulation of the
// flow polytope), simplicial complexes with f/h-vector machinery, flagness,
// and interior face counts.

#pragma once

#include <vector>

#include "flowforms/algebra.hpp"
#include "flowforms/bits.hpp"
#include "flowforms/multigraph.hpp"
#include "flowforms/numbers.hpp"
#include "flowforms/reduction.hpp"

namespace flowforms {

// Total orders on the augmented in/out edges at each inner vertex. Built
// from the same FramingSpec that drives the reduction order; the edges
// (s,v) and (v,t) always rank last.
struct Framing {
    std::vector<std::vector<int>> in_rank;  // [v] -> augmented edge ids, rank order
    std::vector<std::vector<int>> out_rank;

    int in_pos(int v, int aug_id) const;
    int out_pos(int v, int aug_id) const;
};

Framing sigma_tilde_framing(const AugmentedGraph& ag, const FramingSpec& spec);

// Routes are coherent if at every common inner vertex the induced orders of
// their in-paths and out-paths do not oppose each other. Identical
// subpaths induce no order and cannot oppose.
bool coherent(const Route& p, const Route& q, const AugmentedGraph& ag, const Framing& framing);

// All maximal sets of mutually coherent routes, as sorted index vectors
// into route_list, in deterministic (lexicographic) order.
std::vector<std::vector<int>> maximal_cliques(const AugmentedGraph& ag, const Framing& framing,
                                              const std::vector<Route>& route_list);

struct SimplicialComplex {
    int num_vertices = 0;
    std::vector<std::vector<int>> facets; // sorted vertex lists, maximal, deduplicated

    // d = (dimension of the complex) + 1 = largest facet size.
    int d() const;

    // Every face (every subset of a facet) as a vertex bitmask, including
    // the empty face; computed once, deterministic order.
    const std::vector<Bits>& all_faces() const;

    bool is_face(const std::vector<int>& vertices) const;

  private:
    mutable std::vector<Bits> faces_cache_;
    mutable bool faces_done_ = false;
};

SimplicialComplex complex_from_cliques(int num_vertices, const std::vector<std::vector<int>>& cliques);

struct FHVectors {
    std::vector<Int> f; // f[k] = number of faces with k vertices, k = 0..d (f[0] = 1)
    std::vector<Int> h; // h[0..d], the (x-1)-shift transform of f
    int d = 0;
};

FHVectors fh_vectors(const SimplicialComplex& c);

// h-vector from the f-vector: sum_k f[k] (x-1)^(d-k) = sum_i h[i] x^(d-i).
std::vector<Int> h_vector_from_f(const std::vector<Int>& f);

// h(C, x) = sum_i h[i] x^i.
UniPoly h_polynomial(const FHVectors& fh);

// Independent route: h(C, x) = sum over faces F of x^|F| (1-x)^(d-|F|).
UniPoly h_polynomial_by_faces(const SimplicialComplex& c);

// Flag: every set of pairwise-joined vertices is a face, i.e. all minimal
// non-faces have exactly two vertices.
bool is_flag(const SimplicialComplex& c);

// counts[i] = number of interior faces of dimension i, i = 0..d-1. A face is
// interior exactly when its routes jointly use every augmented edge.
std::vector<Int> interior_face_counts(const SimplicialComplex& c, const AugmentedGraph& ag,
                                      const std::vector<Route>& route_list);

// The framed triangulation of the flow polytope of g~, all pieces together.
struct DkkTriangulation {
    AugmentedGraph ag;
    Framing framing;
    std::vector<Route> route_list;            // sorted; index = route id
    std::vector<std::vector<int>> max_cliques; // canonical order
    SimplicialComplex complex;                 // facets = max_cliques

    static DkkTriangulation build(const MultiGraph& g, const FramingSpec& spec);

    int route_id(const Route& r) const; // -1 if absent
};

} // namespace flowforms
