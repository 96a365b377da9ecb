// Exact polynomials in the edge variables x_ij and the marker beta, reduced
// forms read off reduction trees, and a self-contained rewriting engine that
// applies x_ij*x_jk -> x_ik*x_ij + x_jk*x_ik + beta*x_ik until no monomial
// is divisible by such a factor. The two computations are independent code
// paths; at x = (1,...,1) they must agree for every choice of rewrite order.

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "flowforms/multigraph.hpp"
#include "flowforms/numbers.hpp"
#include "flowforms/reduction.hpp"

namespace flowforms {

using VarPair = std::pair<int, int>; // (i, j) with i < j

struct Monomial {
    std::vector<std::pair<VarPair, int>> x; // sorted by variable, exponents > 0
    int beta = 0;

    int exponent(VarPair v) const;
    Monomial times_var(VarPair v, int e = 1) const;
    Monomial div_var(VarPair v, int e = 1) const; // requires exponent >= e
    Monomial times_beta(int e = 1) const;

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;
};

struct MultivarPoly {
    std::map<Monomial, Int> terms; // no zero coefficients stored

    void add(const Monomial& m, const Int& c);
    bool is_zero() const { return terms.empty(); }

    bool operator==(const MultivarPoly&) const = default;
};

// Univariate integer polynomial in beta, coefficients by ascending degree,
// trailing zeros trimmed; empty vector is the zero polynomial.
struct UniPoly {
    std::vector<Int> c;

    static UniPoly constant(Int v);
    static UniPoly from_coeffs(std::vector<Int> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    Int coeff(int k) const { return (k >= 0 && k < static_cast<int>(c.size())) ? c[static_cast<size_t>(k)] : Int(0); }
    Int eval(const Int& x) const;
    void trim();

    UniPoly operator+(const UniPoly&) const;
    UniPoly operator*(const UniPoly&) const;
    UniPoly scaled(const Int&) const;

    bool operator==(const UniPoly&) const = default;
};

UniPoly unipoly_pow(const UniPoly& base, int e);

// prod over edges of H of x_(tail,head); provenance is discarded.
Monomial monomial_of_graph(const NodeGraph& h);

// sum over leaves of beta^(|E(root)| - |E(leaf)|) * monomial_of_graph(leaf).
MultivarPoly reduced_form_from_tree(const ReductionTree& tree);

struct RewriteStrategy {
    enum class Kind { Lex, Random };
    Kind kind = Kind::Lex;
    std::uint64_t seed = 0;

    static RewriteStrategy lex() { return {}; }
    static RewriteStrategy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

// Reduced form of a monomial by direct rewriting; the Lex strategy always
// rewrites the smallest divisible factor of the smallest divisible monomial.
MultivarPoly rewrite_reduced_form(const Monomial& m, const RewriteStrategy& strategy = RewriteStrategy::lex());
MultivarPoly rewrite_reduced_form(const MultivarPoly& p, const RewriteStrategy& strategy = RewriteStrategy::lex());

// Collapse all x variables to 1, keeping beta degrees.
UniPoly specialize_x_to_one(const MultivarPoly& p);

// Exact composition p(beta + delta).
UniPoly shift_beta(const UniPoly& p, long delta);

bool check_nonnegative(const UniPoly& p);

} // namespace flowforms
