#include "flowforms/algebra.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace flowforms {

int Monomial::exponent(VarPair v) const {
    for (const auto& [var, e] : x)
        if (var == v) return e;
    return 0;
}

Monomial Monomial::times_var(VarPair v, int e) const {
    Monomial out = *this;
    auto it = std::lower_bound(out.x.begin(), out.x.end(), v,
                               [](const auto& entry, const VarPair& key) { return entry.first < key; });
    if (it != out.x.end() && it->first == v)
        it->second += e;
    else
        out.x.insert(it, {v, e});
    return out;
}

Monomial Monomial::div_var(VarPair v, int e) const {
    Monomial out = *this;
    for (auto it = out.x.begin(); it != out.x.end(); ++it) {
        if (it->first == v) {
            if (it->second < e) throw std::invalid_argument("monomial not divisible");
            it->second -= e;
            if (it->second == 0) out.x.erase(it);
            return out;
        }
    }
    throw std::invalid_argument("monomial not divisible");
}

Monomial Monomial::times_beta(int e) const {
    Monomial out = *this;
    out.beta += e;
    return out;
}

void MultivarPoly::add(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

UniPoly UniPoly::constant(Int v) {
    UniPoly p;
    if (v != 0) p.c.push_back(std::move(v));
    return p;
}

UniPoly UniPoly::from_coeffs(std::vector<Int> coeffs) {
    UniPoly p;
    p.c = std::move(coeffs);
    p.trim();
    return p;
}

void UniPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Int UniPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly out;
    out.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (size_t k = 0; k < out.c.size(); ++k) out.c[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
    out.trim();
    return out;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c.empty() || o.c.empty()) return {};
    UniPoly out;
    out.c.assign(c.size() + o.c.size() - 1, Int(0));
    for (size_t a = 0; a < c.size(); ++a)
        for (size_t b = 0; b < o.c.size(); ++b) out.c[a + b] += c[a] * o.c[b];
    out.trim();
    return out;
}

UniPoly UniPoly::scaled(const Int& s) const {
    UniPoly out;
    if (s == 0) return out;
    out.c.reserve(c.size());
    for (const Int& v : c) out.c.push_back(v * s);
    return out;
}

UniPoly unipoly_pow(const UniPoly& base, int e) {
    UniPoly r = UniPoly::constant(1);
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
}

Monomial monomial_of_graph(const NodeGraph& h) {
    Monomial m;
    for (const ProvEdge& e : h.edges) m = m.times_var({e.tail, e.head});
    return m;
}

MultivarPoly reduced_form_from_tree(const ReductionTree& tree) {
    MultivarPoly p;
    const int root_edges = tree.root_graph.edge_count();
    for (const NodeGraph& leaf : leaves(tree))
        p.add(monomial_of_graph(leaf).times_beta(root_edges - leaf.edge_count()), 1);
    return p;
}

namespace {

// Divisible factor x_ij * x_jk inside one monomial, smallest (i,j,k) first.
std::vector<std::array<int, 3>> divisible_factors(const Monomial& m) {
    std::vector<std::array<int, 3>> out;
    for (const auto& [a, ea] : m.x) {
        (void)ea;
        for (const auto& [b, eb] : m.x) {
            (void)eb;
            if (a.second == b.first) out.push_back({a.first, a.second, b.second});
        }
    }
    return out; // already in lex order: m.x is sorted and the scan is nested ascending
}

void apply_rewrite(MultivarPoly& p, const Monomial m, const std::array<int, 3>& f) { // by value: m may alias a map key
    const Int c = p.terms.at(m);
    p.terms.erase(m);
    const VarPair ij{f[0], f[1]}, jk{f[1], f[2]}, ik{f[0], f[2]};
    const Monomial rest = m.div_var(ij).div_var(jk);
    p.add(rest.times_var(ik).times_var(ij), c);
    p.add(rest.times_var(jk).times_var(ik), c);
    p.add(rest.times_var(ik).times_beta(), c);
}

} // namespace

MultivarPoly rewrite_reduced_form(const MultivarPoly& poly, const RewriteStrategy& strategy) {
    MultivarPoly p = poly;
    std::mt19937_64 rng(strategy.seed);
    for (;;) {
        if (strategy.kind == RewriteStrategy::Kind::Lex) {
            bool fired = false;
            for (const auto& [m, c] : p.terms) {
                (void)c;
                auto fs = divisible_factors(m);
                if (!fs.empty()) {
                    apply_rewrite(p, m, fs.front());
                    fired = true;
                    break;
                }
            }
            if (!fired) return p;
        } else {
            std::vector<std::pair<Monomial, std::array<int, 3>>> options;
            for (const auto& [m, c] : p.terms) {
                (void)c;
                for (const auto& f : divisible_factors(m)) options.push_back({m, f});
            }
            if (options.empty()) return p;
            const auto& pick = options[rng() % options.size()];
            apply_rewrite(p, pick.first, pick.second);
        }
    }
}

MultivarPoly rewrite_reduced_form(const Monomial& m, const RewriteStrategy& strategy) {
    MultivarPoly p;
    p.add(m, 1);
    return rewrite_reduced_form(p, strategy);
}

UniPoly specialize_x_to_one(const MultivarPoly& p) {
    std::vector<Int> coeffs;
    for (const auto& [m, c] : p.terms) {
        if (m.beta >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(m.beta) + 1, Int(0));
        coeffs[static_cast<size_t>(m.beta)] += c;
    }
    return UniPoly::from_coeffs(std::move(coeffs));
}

UniPoly shift_beta(const UniPoly& p, long delta) {
    UniPoly x_plus_delta = UniPoly::from_coeffs({Int(delta), Int(1)});
    UniPoly out;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) out = out * x_plus_delta + UniPoly::constant(*it);
    return out;
}

bool check_nonnegative(const UniPoly& p) {
    for (const Int& v : p.c)
        if (v < 0) return false;
    return true;
}

} // namespace flowforms
