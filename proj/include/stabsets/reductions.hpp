#pragma once

// Instance transformations between the cycle problems, each paired with a
// map from target solutions back to source solutions.

#include <stabsets/coloring_oracle.hpp>
#include <stabsets/element_set.hpp>
#include <stabsets/error.hpp>
#include <stabsets/schrijver_solvers.hpp>
#include <stabsets/uncovered.hpp>

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace stabsets {

/// Uncovered instance -> coloring of S(n,k) with l colors: A gets the smallest
/// i with |A cap V_i| > |V_i|/2, or l if there is none. Two disjoint sets
/// cannot both majority-hit the same V_i, so a monochromatic edge has color
/// l and one of its endpoints respects every cap.
class UncoveredToSchrijver {
public:
    explicit UncoveredToSchrijver(UncoveredInstance inst) :
        inst_(std::make_shared<const UncoveredInstance>(std::move(inst)))
    {
        require(inst_->set_count() >= 1, ErrorKind::invalid_input, "coloring needs at least one set");
    }

    const UncoveredInstance & instance() const noexcept { return *inst_; }

    Color color(const ElementSet & a) const
    {
        for (int i = 0; i < inst_->set_count(); ++i)
            if (2 * a.intersection_size(inst_->set(i)) > inst_->set(i).size())
                return i + 1;
        return inst_->set_count();
    }

    ColoringOracle oracle() const
    {
        auto self = *this;
        return ColoringOracle(GraphFamilySpec{Family::schrijver, inst_->n(), inst_->k()}, inst_->set_count(),
            [self](const ElementSet & a) { return self.color(a); }, ColoringSource::composed,
            "first majority-hit set");
    }

    /// The first endpoint in lexicographic order that solves the instance.
    ElementSet back_map(const MonochromaticEdge & e) const
    {
        auto [first, second] = std::minmax(e.a, e.b);
        for (auto * s : {&first, &second})
            if (verify_uncovered_solution(*inst_, *s))
                return *s;
        fail(ErrorKind::contract_violation,
            "neither {" + e.a.to_string() + "} nor {" + e.b.to_string() + "} solves the instance");
    }

private:
    std::shared_ptr<const UncoveredInstance> inst_;
};

inline UncoveredToSchrijver uncovered_to_schrijver(const UncoveredInstance & inst)
{
    return UncoveredToSchrijver(inst);
}

/// Partition of [n] into m parts of odd size >= 3.
class FiscInstance {
public:
    FiscInstance(int n, std::vector<ElementSet> parts) :
        n_(n),
        parts_(std::move(parts))
    {
        require(n_ >= 3, ErrorKind::invalid_input, "FISC needs n >= 3");
        require(! parts_.empty(), ErrorKind::invalid_input, "FISC needs at least one part");
        std::vector<char> seen(n_ + 1, 0);
        for (auto & v : parts_) {
            require(v.ground_size() == n_, ErrorKind::invalid_input, "part ground size differs from n");
            require(v.size() >= 3 && v.size() % 2 == 1, ErrorKind::invalid_input,
                "part {" + v.to_string() + "} does not have odd size >= 3");
            for (int e : v.elements()) {
                require(! seen[e], ErrorKind::invalid_input, "element " + std::to_string(e) + " is in two parts");
                seen[e] = 1;
            }
        }
        for (int e = 1; e <= n_; ++e)
            require(seen[e], ErrorKind::invalid_input, "element " + std::to_string(e) + " is in no part");
    }

    int n() const noexcept { return n_; }
    int m() const noexcept { return static_cast<int>(parts_.size()); }
    const std::vector<ElementSet> & parts() const noexcept { return parts_; }

private:
    int n_;
    std::vector<ElementSet> parts_;
};

/// s is cyclically stable and |s cap V_i| >= |V_i|/2 - 1 for every part.
inline bool verify_fisc_solution(const FiscInstance & f, const ElementSet & s)
{
    if (s.ground_size() != f.n() || ! is_stable(s, true))
        return false;
    for (auto & v : f.parts())
        if (2 * s.intersection_size(v) < v.size() - 2)
            return false;
    return true;
}

struct FiscReduction {
    FiscInstance source;
    UncoveredInstance target;

    /// Identity, after checking |S cap V_i| = (|V_i|-1)/2 on every part.
    ElementSet back_map(const ElementSet & s) const
    {
        require(verify_uncovered_solution(target, s), ErrorKind::contract_violation,
            "{" + s.to_string() + "} does not solve the reduced instance");
        for (auto & v : source.parts())
            require(2 * s.intersection_size(v) == v.size() - 1, ErrorKind::contract_violation,
                "solution misses the forced count on part {" + v.to_string() + "}");
        return s;
    }
};

/// Same ground set and parts, k = (n - m)/2.
inline FiscReduction fisc_to_uncovered(const FiscInstance & f)
{
    return {f, UncoveredInstance(f.n(), (f.n() - f.m()) / 2, f.parts())};
}

/// A Hamilton cycle on [3k], listed in cycle order, plus k vertex-disjoint
/// triangles covering [3k] whose edges avoid the cycle.
class CtInstance {
public:
    CtInstance(int k, std::vector<int> cycle, std::vector<ElementSet> triangles) :
        k_(k),
        cycle_(std::move(cycle)),
        triangles_(std::move(triangles))
    {
        require(k_ >= 1, ErrorKind::invalid_input, "CT needs k >= 1");
        int n = 3 * k_;
        require(static_cast<int>(cycle_.size()) == n, ErrorKind::invalid_input, "cycle must list all 3k vertices");
        position_.assign(n + 1, 0);
        for (int i = 0; i < n; ++i) {
            int v = cycle_[i];
            require(v >= 1 && v <= n && position_[v] == 0, ErrorKind::invalid_input, "cycle is not a permutation of [3k]");
            position_[v] = i + 1;
        }
        require(static_cast<int>(triangles_.size()) == k_, ErrorKind::invalid_input, "CT needs exactly k triangles");
        std::vector<char> seen(n + 1, 0);
        for (auto & t : triangles_) {
            require(t.ground_size() == n && t.size() == 3, ErrorKind::invalid_input,
                "triangle {" + t.to_string() + "} is not a 3-subset of [3k]");
            for (int e : t.elements()) {
                require(! seen[e], ErrorKind::invalid_input, "vertex " + std::to_string(e) + " is in two triangles");
                seen[e] = 1;
            }
            // for k = 1 the 3-cycle and the triangle are the same graph
            if (k_ > 1)
                for (int a : t.elements())
                    for (int b : t.elements())
                        require(a >= b || ! cycle_adjacent(a, b), ErrorKind::invalid_input,
                            "triangle edge " + std::to_string(a) + "-" + std::to_string(b) + " is a cycle edge");
        }
    }

    int k() const noexcept { return k_; }
    int n() const noexcept { return 3 * k_; }
    const std::vector<int> & cycle() const noexcept { return cycle_; }
    const std::vector<ElementSet> & triangles() const noexcept { return triangles_; }

    /// 1-based place of vertex v along the cycle.
    int position(int v) const { return position_[v]; }

    bool cycle_adjacent(int a, int b) const
    {
        int d = std::abs(position_[a] - position_[b]);
        return d == 1 || d == n() - 1;
    }

private:
    int k_;
    std::vector<int> cycle_;
    std::vector<ElementSet> triangles_;
    std::vector<int> position_;
};

/// |s| = k and no cycle or triangle edge lies inside s.
inline bool verify_ct_solution(const CtInstance & c, const ElementSet & s)
{
    if (s.ground_size() != c.n() || s.size() != c.k())
        return false;
    for (int a : s.elements())
        for (int b : s.elements())
            if (a < b && c.cycle_adjacent(a, b))
                return false;
    for (auto & t : c.triangles())
        if (s.intersection_size(t) > 1)
            return false;
    return true;
}

struct CtReduction {
    CtInstance source;
    UncoveredInstance target;

    /// Undoes the relabeling by cycle position.
    ElementSet back_map(const ElementSet & s) const
    {
        require(verify_uncovered_solution(target, s), ErrorKind::contract_violation,
            "{" + s.to_string() + "} does not solve the reduced instance");
        std::vector<int> original;
        for (int j : s.elements())
            original.push_back(source.cycle()[j - 1]);
        ElementSet mapped(source.n(), std::move(original));
        require(verify_ct_solution(source, mapped), ErrorKind::contract_violation,
            "mapped set {" + mapped.to_string() + "} is not independent");
        return mapped;
    }
};

/// Relabels every vertex by its position on the cycle, so the cycle becomes
/// 1, 2, ..., 3k, and keeps the triangles as the k sets.
inline CtReduction ct_to_uncovered(const CtInstance & c)
{
    std::vector<ElementSet> sets;
    for (auto & t : c.triangles()) {
        std::vector<int> relabeled;
        for (int v : t.elements())
            relabeled.push_back(c.position(v));
        sets.emplace_back(c.n(), std::move(relabeled));
    }
    return {c, UncoveredInstance(c.n(), c.k(), std::move(sets))};
}

} // namespace stabsets
