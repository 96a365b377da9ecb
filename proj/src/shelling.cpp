#include "flowforms/shelling.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace flowforms {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Valid attachment of `facet` against the already-placed facets: nonempty,
// and every intersection with a placed facet lies inside some
// codimension-one intersection.
bool attaches_validly(const std::vector<int>& facet, const std::vector<const std::vector<int>*>& placed) {
    std::vector<std::vector<int>> inters;
    inters.reserve(placed.size());
    std::vector<const std::vector<int>*> codim1;
    for (const auto* p : placed) {
        inters.push_back(intersect_sorted(facet, *p));
        if (inters.back().size() + 1 == facet.size()) codim1.push_back(&inters.back());
    }
    if (codim1.empty()) return false;
    for (const auto& is : inters) {
        bool covered = false;
        for (const auto* big : codim1)
            if (std::includes(big->begin(), big->end(), is.begin(), is.end())) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

} // namespace

bool is_shelling(const SimplicialComplex& c, const std::vector<int>& order) {
    if (order.size() != c.facets.size()) return false;
    std::vector<char> used(c.facets.size(), 0);
    for (int idx : order) {
        if (idx < 0 || idx >= static_cast<int>(c.facets.size()) || used[static_cast<size_t>(idx)]) return false;
        used[static_cast<size_t>(idx)] = 1;
    }
    std::vector<const std::vector<int>*> placed;
    for (size_t step = 0; step < order.size(); ++step) {
        const auto& facet = c.facets[static_cast<size_t>(order[step])];
        if (step > 0 && !attaches_validly(facet, placed)) return false;
        placed.push_back(&facet);
    }
    return true;
}

namespace {

bool search(const SimplicialComplex& c, std::vector<int>& chosen, std::vector<char>& used,
            const std::vector<int>& try_order, long long& budget) {
    if (chosen.size() == c.facets.size()) return true;
    if (--budget <= 0) return false;
    std::vector<const std::vector<int>*> placed;
    placed.reserve(chosen.size());
    for (int idx : chosen) placed.push_back(&c.facets[static_cast<size_t>(idx)]);
    for (int idx : try_order) {
        if (used[static_cast<size_t>(idx)]) continue;
        const auto& facet = c.facets[static_cast<size_t>(idx)];
        if (!chosen.empty() && !attaches_validly(facet, placed)) continue;
        chosen.push_back(idx);
        used[static_cast<size_t>(idx)] = 1;
        if (search(c, chosen, used, try_order, budget)) return true;
        used[static_cast<size_t>(idx)] = 0;
        chosen.pop_back();
        if (budget <= 0) return false;
    }
    return false;
}

} // namespace

ShellingSearchResult find_shelling(const SimplicialComplex& c, const std::vector<int>* candidate,
                                   std::uint64_t seed, long long budget) {
    ShellingSearchResult res;
    if (c.facets.empty()) {
        res.found = true;
        return res;
    }
    if (candidate && is_shelling(c, *candidate)) {
        res.found = true;
        res.order = *candidate;
        res.candidate_was_shelling = true;
        return res;
    }
    std::vector<int> try_order(c.facets.size());
    for (size_t k = 0; k < try_order.size(); ++k) try_order[k] = static_cast<int>(k);
    std::mt19937_64 rng(seed);
    for (size_t k = try_order.size(); k > 1; --k) std::swap(try_order[k - 1], try_order[rng() % k]);

    std::vector<int> chosen;
    std::vector<char> used(c.facets.size(), 0);
    long long left = budget;
    if (search(c, chosen, used, try_order, left)) {
        res.found = true;
        res.order = chosen;
    }
    res.expansions = budget - left;
    return res;
}

std::vector<Int> h_from_shelling(const SimplicialComplex& c, const std::vector<int>& order) {
    std::vector<Int> h(static_cast<size_t>(c.d()) + 1, Int(0));
    std::vector<const std::vector<int>*> placed;
    for (size_t step = 0; step < order.size(); ++step) {
        const auto& facet = c.facets[static_cast<size_t>(order[step])];
        int attachments = 0;
        std::vector<std::vector<int>> seen; // distinct codim-1 faces attached along
        for (const auto* p : placed) {
            auto is = intersect_sorted(facet, *p);
            if (is.size() + 1 == facet.size() && std::find(seen.begin(), seen.end(), is) == seen.end()) {
                seen.push_back(is);
                ++attachments;
            }
        }
        ++h[static_cast<size_t>(attachments)];
        placed.push_back(&facet);
    }
    return h;
}

std::vector<NodeGraph> attach_profile(const std::vector<NodeGraph>& facets_in_order, size_t i) {
    std::vector<NodeGraph> profile;
    const NodeGraph& fi = facets_in_order[i];
    for (size_t j = 0; j < i; ++j) {
        NodeGraph q = intersect_node_graphs(fi, facets_in_order[j]);
        if (q.edge_count() == fi.edge_count() - 1) profile.push_back(std::move(q));
    }
    std::sort(profile.begin(), profile.end());
    profile.erase(std::unique(profile.begin(), profile.end()), profile.end());
    return profile;
}

FormalSumReport verify_formal_sum(const std::vector<NodeGraph>& facets_in_shelling_order,
                                  const std::vector<NodeGraph>& all_leaves) {
    std::map<NodeGraph, long long> expansion;
    for (size_t i = 0; i < facets_in_shelling_order.size(); ++i) {
        const NodeGraph& fi = facets_in_shelling_order[i];
        const std::vector<NodeGraph> profile = attach_profile(facets_in_shelling_order, i);
        const size_t f = profile.size();
        if (f >= 63) throw std::runtime_error("formal-sum expansion supports at most 62 attachments per facet");
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << f); ++sub) {
            NodeGraph term = fi;
            for (size_t t = 0; t < f; ++t)
                if ((sub >> t) & 1) term = intersect_node_graphs(term, profile[t]);
            ++expansion[term];
        }
    }
    std::map<NodeGraph, long long> target;
    for (const NodeGraph& leaf : all_leaves) {
        NodeGraph l = leaf;
        l.canonicalize();
        ++target[l];
    }
    FormalSumReport rep;
    if (expansion == target) {
        rep.pass = true;
        return rep;
    }
    std::ostringstream os;
    long long extra = 0, missing = 0;
    for (const auto& [g, cnt] : expansion) {
        auto it = target.find(g);
        const long long want = (it == target.end()) ? 0 : it->second;
        if (cnt > want) extra += cnt - want;
    }
    for (const auto& [g, cnt] : target) {
        auto it = expansion.find(g);
        const long long got = (it == expansion.end()) ? 0 : it->second;
        if (cnt > got) missing += cnt - got;
    }
    os << "formal sum mismatch: " << extra << " surplus and " << missing << " missing node graphs";
    rep.detail = os.str();
    return rep;
}

} // namespace flowforms
