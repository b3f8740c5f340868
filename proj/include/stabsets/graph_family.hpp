#pragma once

// Kneser-type graph families on k-subsets of [n]: the Kneser graph K(n,k),
// the Schrijver graph S(n,k), and the graphs U(n,k) / U~(n,k) induced on
// cyclically / linearly unstable k-subsets. Includes explicit
// materialization, exact chromatic and independence number search, and
// closed-form extremal values used to cross-check the searches.

#include <stabsets/bitset.hpp>
#include <stabsets/element_set.hpp>
#include <stabsets/error.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stabsets {

enum class Family {
    kneser,
    schrijver,
    unstable_cyclic,
    unstable_linear,
};

inline std::string_view family_name(Family f)
{
    switch (f) {
    case Family::kneser: return "kneser";
    case Family::schrijver: return "schrijver";
    case Family::unstable_cyclic: return "u";
    case Family::unstable_linear: return "utilde";
    }
    return "?";
}

inline Family parse_family(std::string_view name)
{
    for (auto f : {Family::kneser, Family::schrijver, Family::unstable_cyclic, Family::unstable_linear})
        if (family_name(f) == name)
            return f;
    fail(ErrorKind::invalid_input, "unknown graph family '" + std::string(name) + "'");
}

struct GraphFamilySpec {
    Family family;
    int n;
    int k;

    GraphFamilySpec(Family f, int n_, int k_) :
        family(f),
        n(n_),
        k(k_)
    {
        require_stable_parameters(n, k);
    }

    friend bool operator==(const GraphFamilySpec &, const GraphFamilySpec &) = default;

    std::string to_string() const
    {
        return std::string(family_name(family)) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    }
};

namespace detail {
    inline bool family_contains(const GraphFamilySpec & spec, const ElementSet & s)
    {
        switch (spec.family) {
        case Family::kneser: return true;
        case Family::schrijver: return is_stable(s, true);
        case Family::unstable_cyclic: return ! is_stable(s, true);
        case Family::unstable_linear: return ! is_stable(s, false);
        }
        return false;
    }
}

/// Membership in the family's vertex set. Throws on a size or ground-set
/// mismatch.
inline bool is_vertex(const GraphFamilySpec & spec, const ElementSet & s)
{
    require(s.ground_size() == spec.n && s.size() == spec.k, ErrorKind::invalid_input,
        "set {" + s.to_string() + "} is not a " + std::to_string(spec.k) + "-subset of [" + std::to_string(spec.n) + "]");
    return detail::family_contains(spec, s);
}

inline bool adjacent(const GraphFamilySpec & spec, const ElementSet & a, const ElementSet & b)
{
    require(is_vertex(spec, a) && is_vertex(spec, b), ErrorKind::invalid_input,
        "adjacency query on a non-vertex of " + spec.to_string());
    return a.is_disjoint(b);
}

/// Visits the vertices of the family in lexicographic order.
template <typename F>
void for_each_vertex(const GraphFamilySpec & spec, F && f)
{
    if (spec.family == Family::schrijver) {
        StableSubsets gen(spec.n, spec.k, true);
        while (auto s = gen.next())
            f(*s);
        return;
    }
    for_each_k_subset(spec.n, spec.k, [&](const ElementSet & s) {
        if (detail::family_contains(spec, s))
            f(s);
    });
}

inline std::size_t count_vertices(const GraphFamilySpec & spec)
{
    std::size_t count = 0;
    for_each_vertex(spec, [&](const ElementSet &) { ++count; });
    return count;
}

struct ExplicitGraph {
    std::optional<GraphFamilySpec> origin;
    std::vector<ElementSet> vertices;
    std::vector<Bitset> adjacency;

    std::size_t order() const { return adjacency.size(); }

    std::size_t edge_count() const
    {
        std::size_t twice = 0;
        for (auto & row : adjacency)
            twice += row.count();
        return twice / 2;
    }

    bool has_edge(std::size_t u, std::size_t v) const { return adjacency[u].test(v); }

    std::size_t degree(std::size_t v) const { return adjacency[v].count(); }
};

/// Builds an explicit graph from an undirected edge list on vertices 0..order-1.
inline ExplicitGraph make_graph(std::size_t order, const std::vector<std::pair<std::size_t, std::size_t>> & edges)
{
    ExplicitGraph g;
    g.adjacency.assign(order, Bitset(order));
    for (auto [u, v] : edges) {
        require(u < order && v < order && u != v, ErrorKind::invalid_input, "bad edge");
        g.adjacency[u].set(v);
        g.adjacency[v].set(u);
    }
    return g;
}

inline constexpr std::size_t default_materialize_cap = 5000;
inline constexpr std::size_t default_chi_cap = 120;

inline ExplicitGraph materialize(const GraphFamilySpec & spec, std::size_t vertex_cap = default_materialize_cap)
{
    ExplicitGraph g;
    g.origin = spec;
    for_each_vertex(spec, [&](const ElementSet & s) {
        require(g.vertices.size() < vertex_cap, ErrorKind::cap_exceeded,
            spec.to_string() + " has more than " + std::to_string(vertex_cap) + " vertices");
        g.vertices.push_back(s);
    });
    auto order = g.vertices.size();
    g.adjacency.assign(order, Bitset(order));
    for (std::size_t u = 0; u < order; ++u)
        for (std::size_t v = u + 1; v < order; ++v)
            if (g.vertices[u].is_disjoint(g.vertices[v])) {
                g.adjacency[u].set(v);
                g.adjacency[v].set(u);
            }
    return g;
}

namespace detail {
    // Greedy clique: repeatedly take the candidate with most candidate
    // neighbors. Only used as a lower bound.
    inline std::size_t greedy_clique_size(const ExplicitGraph & g)
    {
        std::size_t best = g.order() > 0 ? 1 : 0;
        for (std::size_t start = 0; start < g.order(); ++start) {
            Bitset candidates = g.adjacency[start];
            std::size_t size = 1;
            while (candidates.any()) {
                std::size_t pick = Bitset::npos, pick_score = 0;
                for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
                    auto score = candidates.intersection_count(g.adjacency[v]);
                    if (pick == Bitset::npos || score > pick_score) {
                        pick = v;
                        pick_score = score;
                    }
                }
                candidates &= g.adjacency[pick];
                ++size;
            }
            best = std::max(best, size);
        }
        return best;
    }

    // DSATUR greedy coloring; returns the number of colors used.
    inline int dsatur_greedy(const ExplicitGraph & g)
    {
        auto order = g.order();
        std::vector<int> color(order, -1);
        std::vector<Bitset> seen(order, Bitset(order + 1));
        std::vector<int> saturation(order, 0);
        int used = 0;
        for (std::size_t step = 0; step < order; ++step) {
            std::size_t pick = order;
            for (std::size_t v = 0; v < order; ++v) {
                if (color[v] >= 0)
                    continue;
                if (pick == order || saturation[v] > saturation[pick]
                    || (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick)))
                    pick = v;
            }
            int c = 0;
            while (seen[pick].test(c))
                ++c;
            color[pick] = c;
            used = std::max(used, c + 1);
            for (auto u = g.adjacency[pick].find_first(); u != Bitset::npos; u = g.adjacency[pick].find_next(u))
                if (! seen[u].test(c)) {
                    seen[u].set(c);
                    ++saturation[u];
                }
        }
        return used;
    }

    // Decides c-colorability by DSATUR-ordered backtracking with forward
    // checking. Colors are introduced in order (a vertex may only open color
    // used+1), which removes palette permutation symmetry; the first vertex is
    // therefore always color 0.
    class ColorabilitySearch {
    public:
        ColorabilitySearch(const ExplicitGraph & g, int colors) :
            g_(g),
            colors_(colors),
            color_(g.order(), -1),
            counts_(g.order() * colors, 0),
            forbidden_(g.order(), 0)
        {
            require(colors >= 1 && colors <= 64, ErrorKind::invalid_input, "palette must be in [1, 64]");
            for (std::size_t v = 0; v < g.order(); ++v)
                neighbors_.push_back(g.adjacency[v].to_vector());
        }

        bool run() { return g_.order() == 0 || search(0, 0); }

        const std::vector<int> & coloring() const { return color_; }

    private:
        std::uint64_t full_mask() const { return colors_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << colors_) - 1; }

        bool assign(std::size_t v, int c)
        {
            color_[v] = c;
            bool ok = true;
            for (auto u : neighbors_[v]) {
                if (counts_[u * colors_ + c]++ == 0)
                    forbidden_[u] |= std::uint64_t{1} << c;
                if (color_[u] < 0 && forbidden_[u] == full_mask())
                    ok = false;
            }
            return ok;
        }

        void unassign(std::size_t v, int c)
        {
            for (auto u : neighbors_[v])
                if (--counts_[u * colors_ + c] == 0)
                    forbidden_[u] &= ~(std::uint64_t{1} << c);
            color_[v] = -1;
        }

        std::size_t select() const
        {
            std::size_t pick = g_.order();
            int best_sat = -1;
            std::size_t best_deg = 0;
            for (std::size_t v = 0; v < g_.order(); ++v) {
                if (color_[v] >= 0)
                    continue;
                int sat = std::popcount(forbidden_[v]);
                auto deg = neighbors_[v].size();
                if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                    pick = v;
                    best_sat = sat;
                    best_deg = deg;
                }
            }
            return pick;
        }

        bool search(std::size_t colored, int used)
        {
            if (colored == g_.order())
                return true;
            auto v = select();
            int limit = std::min(used + 1, colors_);
            for (int c = 0; c < limit; ++c) {
                if (forbidden_[v] >> c & 1U)
                    continue;
                bool ok = assign(v, c);
                if (ok && search(colored + 1, std::max(used, c + 1)))
                    return true;
                unassign(v, c);
            }
            return false;
        }

        const ExplicitGraph & g_;
        int colors_;
        std::vector<int> color_;
        std::vector<int> counts_;
        std::vector<std::uint64_t> forbidden_;
        std::vector<std::vector<std::size_t>> neighbors_;
    };
}

/// True iff g admits a proper coloring with at most `colors` colors.
inline bool is_colorable(const ExplicitGraph & g, int colors)
{
    if (g.order() == 0)
        return true;
    if (colors <= 0)
        return false;
    detail::ColorabilitySearch search(g, colors);
    return search.run();
}

/// Exact chromatic number by ascending colorability tests. The starting
/// bound is floor(n/k) (the clique number) for Schrijver graphs and a greedy
/// clique otherwise; the DSATUR greedy coloring caps the ascent.
inline int chromatic_number_exact(const ExplicitGraph & g, std::size_t vertex_cap = default_chi_cap)
{
    require(g.order() <= vertex_cap, ErrorKind::cap_exceeded,
        "exact chromatic number capped at " + std::to_string(vertex_cap) + " vertices, graph has "
            + std::to_string(g.order()));
    if (g.order() == 0)
        return 0;
    int lower = static_cast<int>(detail::greedy_clique_size(g));
    if (g.origin && g.origin->family == Family::schrijver)
        lower = std::max(lower, g.origin->n / g.origin->k);
    int upper = detail::dsatur_greedy(g);
    for (int c = lower; c < upper; ++c)
        if (is_colorable(g, c))
            return c;
    return upper;
}

namespace detail {
    // Maximum independent set by bitset branch and bound with a greedy
    // clique-cover bound: candidates are partitioned into cliques of g, and an
    // independent set takes at most one vertex from each.
    class IndependentSetSearch {
    public:
        explicit IndependentSetSearch(const ExplicitGraph & g) :
            g_(g)
        {
            // vertices in decreasing degree order
            auto order = g.order();
            perm_.resize(order);
            for (std::size_t i = 0; i < order; ++i)
                perm_[i] = i;
            std::stable_sort(perm_.begin(), perm_.end(),
                [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
            std::vector<std::size_t> position(order);
            for (std::size_t i = 0; i < order; ++i)
                position[perm_[i]] = i;
            adj_.assign(order, Bitset(order));
            non_adj_.assign(order, Bitset(order));
            for (std::size_t i = 0; i < order; ++i) {
                for (std::size_t j = 0; j < order; ++j)
                    if (i != j) {
                        if (g.has_edge(perm_[i], perm_[j]))
                            adj_[i].set(j);
                        else
                            non_adj_[i].set(j);
                    }
            }
        }

        std::vector<std::size_t> run()
        {
            Bitset candidates(g_.order());
            candidates.set_all();
            std::vector<std::size_t> current;
            expand(current, candidates);
            std::vector<std::size_t> out;
            for (auto v : best_)
                out.push_back(perm_[v]);
            std::sort(out.begin(), out.end());
            return out;
        }

    private:
        void expand(std::vector<std::size_t> & current, Bitset candidates)
        {
            std::vector<std::size_t> order;
            std::vector<std::size_t> bound;
            cover(candidates, order, bound);
            for (std::size_t i = order.size(); i-- > 0;) {
                if (current.size() + bound[i] <= best_.size())
                    return;
                auto v = order[i];
                current.push_back(v);
                Bitset next = candidates;
                next &= non_adj_[v];
                if (next.none()) {
                    if (current.size() > best_.size())
                        best_ = current;
                }
                else
                    expand(current, next);
                current.pop_back();
                candidates.reset(v);
            }
        }

        // Greedy partition of candidates into cliques of g. Emits vertices in
        // class order with the running class count as the bound.
        void cover(const Bitset & candidates, std::vector<std::size_t> & order, std::vector<std::size_t> & bound) const
        {
            Bitset remaining = candidates;
            std::size_t classes = 0;
            while (remaining.any()) {
                ++classes;
                Bitset open = remaining;
                while (open.any()) {
                    auto v = open.find_first();
                    open.reset(v);
                    open &= adj_[v];
                    remaining.reset(v);
                    order.push_back(v);
                    bound.push_back(classes);
                }
            }
        }

        const ExplicitGraph & g_;
        std::vector<std::size_t> perm_;
        std::vector<Bitset> adj_, non_adj_;
        std::vector<std::size_t> best_;
    };
}

/// A maximum independent set of g (vertex indices, ascending).
inline std::vector<std::size_t> maximum_independent_set(const ExplicitGraph & g)
{
    if (g.order() == 0)
        return {};
    detail::IndependentSetSearch search(g);
    return search.run();
}

inline std::size_t independence_number_exact(const ExplicitGraph & g)
{
    return maximum_independent_set(g).size();
}

/// alpha(U(n,k)) = C(n-1, k-1) - C(n-k-1, k-1) for k >= 2.
inline BigInt alpha_u_formula(int n, int k)
{
    require(k >= 2, ErrorKind::invalid_input, "independence formula needs k >= 2");
    require_stable_parameters(n, k);
    return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1);
}

struct ChiBounds {
    int lower;
    int upper;

    bool exact() const { return lower == upper; }
    friend bool operator==(const ChiBounds &, const ChiBounds &) = default;
};

/// Known bounds on the chromatic number of each family. For U(n,k) with
/// n = 3 (mod 4) and n >= 4k-1 the bounds differ by one and neither is
/// known to be tight in general.
inline ChiBounds chi_bounds(const GraphFamilySpec & spec)
{
    int n = spec.n, k = spec.k;
    int kneser = n - 2 * k + 2;
    // every singleton is stable, so U(n,1) and its linear variant have no vertices
    if (k == 1 && (spec.family == Family::unstable_cyclic || spec.family == Family::unstable_linear))
        return {0, 0};
    switch (spec.family) {
    case Family::kneser:
    case Family::schrijver: return {kneser, kneser};
    case Family::unstable_linear: {
        int v = std::min(kneser, n / 2);
        return {v, v};
    }
    case Family::unstable_cyclic: {
        int lower = std::min(kneser, n / 2);
        int upper = std::min(kneser, (n + 1) / 2);
        if (n % 4 == 1)
            lower = upper;
        return {lower, upper};
    }
    }
    return {0, 0};
}

/// Largest non-trivial intersecting family of k-subsets of [n] (k >= 3).
inline BigInt hilton_milner_bound(int n, int k)
{
    require(k >= 3, ErrorKind::invalid_input, "Hilton-Milner bound needs k >= 3");
    require_stable_parameters(n, k);
    return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1;
}

/// The extremal family {F : i in F, F meets a} together with a itself.
inline std::vector<ElementSet> hilton_milner_family(int n, int k, int i, const ElementSet & a)
{
    require(k >= 3, ErrorKind::invalid_input, "Hilton-Milner family needs k >= 3");
    require_stable_parameters(n, k);
    require(i >= 1 && i <= n, ErrorKind::invalid_input, "element outside [1, n]");
    require(a.ground_size() == n && a.size() == k, ErrorKind::invalid_input, "a must be a k-subset of [n]");
    require(! a.contains(i), ErrorKind::invalid_input, "element " + std::to_string(i) + " lies in a");
    std::vector<ElementSet> family;
    for_each_k_subset(n, k, [&](const ElementSet & f) {
        if (f.contains(i) && ! f.is_disjoint(a))
            family.push_back(f);
    });
    family.push_back(a);
    std::sort(family.begin(), family.end());
    return family;
}

inline bool is_intersecting(std::span<const ElementSet> family)
{
    for (std::size_t x = 0; x < family.size(); ++x)
        for (std::size_t y = x + 1; y < family.size(); ++y)
            if (family[x].is_disjoint(family[y]))
                return false;
    return true;
}

/// True iff some element lies in every member (vacuously true when empty).
inline bool is_trivial(std::span<const ElementSet> family)
{
    if (family.empty())
        return true;
    for (int e : family.front().elements())
        if (std::all_of(family.begin(), family.end(), [&](const ElementSet & f) { return f.contains(e); }))
            return true;
    return false;
}

} // namespace stabsets
