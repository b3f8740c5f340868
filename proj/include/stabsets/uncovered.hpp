#pragma once

// Unfair independent sets in the n-cycle: given V_1..V_l subsets of [n]
// (l <= n-2k+1, |V_i| >= 2), find a stable k-subset S of [n] with
// |S cap V_i| <= |V_i|/2 for every i.
//
// The polynomial-time route for n large relative to k draws a random set
// with inclusion probability p = 2k/n and repairs it (alteration); the
// derandomized solver fixes the draw one coordinate at a time, keeping the
// exact conditional expectation phi of the repair count f at least k.

#include <stabsets/element_set.hpp>
#include <stabsets/error.hpp>
#include <stabsets/hashing.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace stabsets {

using Rational = boost::multiprecision::cpp_rational;

/// Instance as read from input, before the singleton-set reduction.
struct RawUncoveredInstance {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> sets;
};

class UncoveredInstance {
public:
    UncoveredInstance(int n, int k, std::vector<ElementSet> sets) :
        n_(n),
        k_(k),
        sets_(std::move(sets))
    {
        require_stable_parameters(n_, k_);
        require(set_count() <= n_ - 2 * k_ + 1, ErrorKind::invalid_input,
            "too many sets: l=" + std::to_string(set_count()) + " > n-2k+1=" + std::to_string(n_ - 2 * k_ + 1));
        containing_.resize(n_ + 1);
        for (int i = 0; i < set_count(); ++i) {
            require(sets_[i].ground_size() == n_, ErrorKind::invalid_input, "set ground size differs from n");
            require(sets_[i].size() >= 2, ErrorKind::invalid_input,
                "set " + std::to_string(i + 1) + " has fewer than 2 elements");
            for (int e : sets_[i].elements())
                containing_[e].push_back(i);
        }
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int set_count() const noexcept { return static_cast<int>(sets_.size()); }
    const std::vector<ElementSet> & sets() const noexcept { return sets_; }
    const ElementSet & set(int i) const { return sets_[i]; }

    /// floor(r_i / 2), the most elements of V_i a solution may contain.
    int cap(int i) const { return sets_[i].size() / 2; }

    /// Indices of the sets containing element e.
    const std::vector<int> & containing(int e) const { return containing_[e]; }

    /// p = 2k/n, in lowest terms.
    Rational inclusion_probability() const { return Rational(2 * k_, n_); }

private:
    int n_;
    int k_;
    std::vector<ElementSet> sets_;
    std::vector<std::vector<int>> containing_;
};

namespace detail {
    inline bool meets_caps(const ElementSet & s, std::span<const ElementSet> sets)
    {
        for (auto & v : sets)
            if (2 * s.intersection_size(v) > v.size())
                return false;
        return true;
    }
}

/// |s| = k, s cyclically stable, and 2|s cap V_i| <= |V_i| for all i.
inline bool verify_uncovered_solution(const UncoveredInstance & inst, const ElementSet & s)
{
    return s.ground_size() == inst.n() && s.size() == inst.k() && is_stable(s, true)
        && detail::meets_caps(s, inst.sets());
}

/// Same check against an instance that may still contain singleton sets.
inline bool verify_uncovered_solution(const RawUncoveredInstance & raw, const ElementSet & s)
{
    if (s.ground_size() != raw.n || s.size() != raw.k || ! is_stable(s, true))
        return false;
    for (auto & v : raw.sets) {
        int hits = 0;
        for (int e : v)
            hits += s.contains(e) ? 1 : 0;
        if (2 * hits > static_cast<int>(v.size()))
            return false;
    }
    return true;
}

/// A core instance plus the map from its labels back to the original ones.
struct NormalizedInstance {
    UncoveredInstance instance;
    int original_n;
    std::vector<int> original_label; // original_label[j - 1] for new label j

    bool is_identity() const { return original_n == instance.n(); }

    ElementSet to_original(const ElementSet & s) const
    {
        std::vector<int> elements;
        for (int e : s.elements())
            elements.push_back(original_label[e - 1]);
        return ElementSet(original_n, std::move(elements));
    }
};

/// Removes singleton sets: the element of a singleton V_i can never be in a
/// solution, so it is deleted from the ground set and every V_j (later
/// elements shift down, keeping the cyclic order), and the emptied set is
/// dropped. Repeats until every set has at least two elements.
inline NormalizedInstance validate_and_normalize(const RawUncoveredInstance & raw)
{
    require_stable_parameters(raw.n, raw.k);
    int l = static_cast<int>(raw.sets.size());
    require(l <= raw.n - 2 * raw.k + 1, ErrorKind::invalid_input,
        "too many sets: l=" + std::to_string(l) + " > n-2k+1=" + std::to_string(raw.n - 2 * raw.k + 1));

    std::vector<std::vector<int>> sets;
    for (std::size_t i = 0; i < raw.sets.size(); ++i) {
        require(! raw.sets[i].empty(), ErrorKind::invalid_input, "set " + std::to_string(i + 1) + " is empty");
        ElementSet checked(raw.n, raw.sets[i]);
        sets.emplace_back(checked.elements().begin(), checked.elements().end());
    }

    std::vector<int> labels(raw.n);
    for (int j = 0; j < raw.n; ++j)
        labels[j] = j + 1;

    while (true) {
        auto singleton = std::find_if(sets.begin(), sets.end(), [](auto & v) { return v.size() == 1; });
        if (singleton == sets.end())
            break;
        int removed = singleton->front();
        for (auto & v : sets) {
            std::erase(v, removed);
            for (auto & e : v)
                if (e > removed)
                    --e;
        }
        std::erase_if(sets, [](auto & v) { return v.empty(); });
        labels.erase(labels.begin() + (removed - 1));
    }

    int n = static_cast<int>(labels.size());
    require(n >= 2 * raw.k, ErrorKind::invalid_input,
        "ground set shrinks to n=" + std::to_string(n) + " < 2k after removing singleton sets");
    std::vector<ElementSet> core;
    for (auto & v : sets)
        core.emplace_back(n, v);
    return {UncoveredInstance(n, raw.k, std::move(core)), raw.n, std::move(labels)};
}

/// f(S) = |S| - #{j : j, j+1 (mod n) both in S} - sum_i C(|S cap V_i|, floor(r_i/2)+1).
/// Items 2 and 3 of the alteration remove at most f's subtracted count, so
/// the repaired set has at least f(S) elements.
inline BigInt f_value(const ElementSet & s, const UncoveredInstance & inst)
{
    require(s.ground_size() == inst.n(), ErrorKind::invalid_input, "set is not a subset of [n]");
    BigInt value = s.size();
    for (int j : s.elements())
        if (s.contains(cyclic_successor(j, inst.n())))
            value -= 1;
    for (int i = 0; i < inst.set_count(); ++i)
        value -= binomial(s.intersection_size(inst.set(i)), inst.cap(i) + 1);
    return value;
}

enum class Choice : std::uint8_t {
    zero,
    one,
    star,
};

/// A vector over {0, 1, *}; starred coordinates are included independently
/// with probability p.
struct PartialChoice {
    std::vector<Choice> entries;
    Rational p;

    static PartialChoice all_star(const UncoveredInstance & inst)
    {
        return {std::vector<Choice>(inst.n(), Choice::star), inst.inclusion_probability()};
    }

    Choice at(int element) const { return entries[element - 1]; }
    void fix(int element, Choice c) { entries[element - 1] = c; }
};

namespace detail {
    // Per-term expectations of f under a partial choice. Shared by the full
    // evaluation and the incremental one in the derandomized solver.
    class PotentialTerms {
    public:
        PotentialTerms(const UncoveredInstance & inst, const Rational & p) :
            inst_(inst),
            p_(p)
        {
            int max_power = 2;
            for (int i = 0; i < inst.set_count(); ++i)
                max_power = std::max(max_power, inst.cap(i) + 1);
            powers_.resize(max_power + 1);
            powers_[0] = 1;
            for (int m = 1; m <= max_power; ++m)
                powers_[m] = powers_[m - 1] * p_;
        }

        Rational element(Choice c) const
        {
            switch (c) {
            case Choice::one: return 1;
            case Choice::star: return p_;
            case Choice::zero: return 0;
            }
            return 0;
        }

        Rational pair(Choice a, Choice b) const
        {
            if (a == Choice::zero || b == Choice::zero)
                return 0;
            return powers_[(a == Choice::star ? 1 : 0) + (b == Choice::star ? 1 : 0)];
        }

        // E[#subsets of size q = cap+1 inside S cap V_i] with `stars` starred
        // and `ones` fixed-in elements of V_i.
        Rational set(int i, int stars, int ones) const
        {
            int q = inst_.cap(i) + 1;
            Rational sum = 0;
            for (int m = 0; m <= std::min(q, stars); ++m) {
                BigInt ways = binomial(stars, m) * binomial(ones, q - m);
                if (ways != 0)
                    sum += Rational(ways) * powers_[m];
            }
            return sum;
        }

        const Rational & p() const noexcept { return p_; }

    private:
        const UncoveredInstance & inst_;
        Rational p_;
        std::vector<Rational> powers_;
    };
}

/// phi(x) = E[f(S_x)], exactly, from the three closed-form terms.
inline Rational phi(const PartialChoice & x, const UncoveredInstance & inst)
{
    require(static_cast<int>(x.entries.size()) == inst.n(), ErrorKind::invalid_input, "partial choice length != n");
    detail::PotentialTerms terms(inst, x.p);
    Rational value = 0;
    for (int j = 1; j <= inst.n(); ++j) {
        value += terms.element(x.at(j));
        value -= terms.pair(x.at(j), x.at(cyclic_successor(j, inst.n())));
    }
    for (int i = 0; i < inst.set_count(); ++i) {
        int stars = 0, ones = 0;
        for (int e : inst.set(i).elements()) {
            stars += x.at(e) == Choice::star ? 1 : 0;
            ones += x.at(e) == Choice::one ? 1 : 0;
        }
        value -= terms.set(i, stars, ones);
    }
    return value;
}

struct AlterationTrace {
    ElementSet a;
    ElementSet a_prime;
    ElementSet a_double_prime;
    std::optional<ElementSet> outcome;

    bool succeeded() const { return outcome.has_value(); }
};

/// Repairs a into a solution candidate:
///   a'  drops every j with j and its cyclic successor both in a (decided on
///       a itself, all at once), so a' is stable;
///   a'' visits V_1..V_l in order and drops the largest elements of
///       a' cap V_i until at most floor(r_i/2) remain;
///   the outcome is the k smallest elements of a'' when |a''| >= k.
inline AlterationTrace alteration(const ElementSet & a, const UncoveredInstance & inst)
{
    require(a.ground_size() == inst.n(), ErrorKind::invalid_input, "set is not a subset of [n]");
    int n = inst.n();
    std::vector<int> kept;
    for (int j : a.elements())
        if (! a.contains(cyclic_successor(j, n)))
            kept.push_back(j);
    ElementSet a_prime(n, kept);

    std::vector<char> present(n + 1, 0);
    for (int j : kept)
        present[j] = 1;
    for (int i = 0; i < inst.set_count(); ++i) {
        auto members = inst.set(i).elements();
        int inside = 0;
        for (int e : members)
            inside += present[e];
        for (auto it = members.rbegin(); inside > inst.cap(i) && it != members.rend(); ++it)
            if (present[*it]) {
                present[*it] = 0;
                --inside;
            }
    }
    std::vector<int> trimmed;
    for (int j = 1; j <= n; ++j)
        if (present[j])
            trimmed.push_back(j);

    AlterationTrace trace{a, std::move(a_prime), ElementSet(n, trimmed), std::nullopt};
    if (static_cast<int>(trimmed.size()) >= inst.k())
        trace.outcome = ElementSet(n, std::vector<int>(trimmed.begin(), trimmed.begin() + inst.k()));
    return trace;
}

/// The random draw of the one-shot algorithm: element j is included iff a
/// hash of (seed, j), reduced to [0, n), is below 2k, which happens with
/// probability exactly 2k/n up to the reduction bias.
inline ElementSet random_draw(const UncoveredInstance & inst, std::uint64_t seed)
{
    std::vector<int> chosen;
    for (int j = 1; j <= inst.n(); ++j)
        if (bounded(mix(seed, static_cast<std::uint64_t>(j)), static_cast<std::uint64_t>(inst.n()))
            < static_cast<std::uint64_t>(2 * inst.k()))
            chosen.push_back(j);
    return ElementSet(inst.n(), std::move(chosen));
}

/// One Monte Carlo trial; failure (no outcome) is a legitimate result.
inline AlterationTrace randomized_solve(const UncoveredInstance & inst, std::uint64_t seed)
{
    return alteration(random_draw(inst, seed), inst);
}

struct DerandomizedReport {
    ElementSet solution;
    ElementSet chosen;                // the fully fixed set S, f(S) >= k
    std::vector<Rational> potential;  // phi before the first and after each fix
    AlterationTrace trace;
};

/// Method of conditional expectations over phi. Coordinates 1..n are fixed in
/// order to whichever value keeps phi larger (ties go to zero), so phi never
/// drops; starting from phi(all-star) >= k the final set S has f(S) >= k and
/// its alteration yields a solution.
///
/// Only the terms touching coordinate i change when it is fixed, so each step
/// updates phi locally instead of re-evaluating it.
inline DerandomizedReport derandomized_solve(const UncoveredInstance & inst)
{
    int n = inst.n();
    auto x = PartialChoice::all_star(inst);
    detail::PotentialTerms terms(inst, x.p);

    std::vector<int> stars(inst.set_count()), ones(inst.set_count(), 0);
    for (int i = 0; i < inst.set_count(); ++i)
        stars[i] = inst.set(i).size();

    Rational current = phi(x, inst);
    require(current >= inst.k(), ErrorKind::insufficient_slack,
        "phi(all-star) = " + current.str() + " < k = " + std::to_string(inst.k()));

    auto local = [&](int j, Choice value) {
        auto pred = j == 1 ? n : j - 1;
        auto succ = cyclic_successor(j, n);
        Rational sum = terms.element(value);
        sum -= terms.pair(x.at(pred), value);
        sum -= terms.pair(value, x.at(succ));
        for (int i : inst.containing(j)) {
            int s = stars[i] - 1;
            int t = ones[i] + (value == Choice::one ? 1 : 0);
            sum -= terms.set(i, s, t);
        }
        return sum;
    };

    DerandomizedReport report;
    report.potential.push_back(current);
    for (int j = 1; j <= n; ++j) {
        // both extensions share every term not touching j
        Rational if_zero = local(j, Choice::zero);
        Rational if_one = local(j, Choice::one);
        Rational before = 0;
        {
            auto pred = j == 1 ? n : j - 1;
            before = terms.element(Choice::star) - terms.pair(x.at(pred), Choice::star)
                - terms.pair(Choice::star, x.at(cyclic_successor(j, n)));
            for (int i : inst.containing(j))
                before -= terms.set(i, stars[i], ones[i]);
        }
        Choice pick = if_one > if_zero ? Choice::one : Choice::zero;
        current += (pick == Choice::one ? if_one : if_zero) - before;
        x.fix(j, pick);
        for (int i : inst.containing(j)) {
            --stars[i];
            if (pick == Choice::one)
                ++ones[i];
        }
        report.potential.push_back(current);
    }

    std::vector<int> chosen;
    for (int j = 1; j <= n; ++j)
        if (x.at(j) == Choice::one)
            chosen.push_back(j);
    report.chosen = ElementSet(n, std::move(chosen));
    require(Rational(f_value(report.chosen, inst)) == current, ErrorKind::contract_violation,
        "potential of the fixed choice differs from f");

    report.trace = alteration(report.chosen, inst);
    require(report.trace.succeeded(), ErrorKind::contract_violation, "alteration of a set with f >= k fell short of k");
    report.solution = *report.trace.outcome;
    require(verify_uncovered_solution(inst, report.solution), ErrorKind::contract_violation,
        "derandomized output failed verification");
    return report;
}

inline constexpr std::uint64_t default_brute_force_cap = 5'000'000;

/// First stable k-subset in lexicographic order meeting every cap. Every
/// valid instance has one, so failure means the instance was malformed.
inline ElementSet brute_force_solve(const UncoveredInstance & inst, std::uint64_t cap = default_brute_force_cap)
{
    require(count_stable(inst.n(), inst.k()) <= cap, ErrorKind::cap_exceeded,
        "S(" + std::to_string(inst.n()) + "," + std::to_string(inst.k()) + ") has more than " + std::to_string(cap)
            + " vertices");
    StableSubsets gen(inst.n(), inst.k(), true);
    while (auto s = gen.next())
        if (detail::meets_caps(*s, inst.sets()))
            return *s;
    fail(ErrorKind::contract_violation, "no stable k-subset meets every cap; instance invariants are broken");
}

namespace detail {
    inline void require_four_partition(int k, std::span<const ElementSet> parts)
    {
        require(k >= 1, ErrorKind::invalid_input, "four-split needs k >= 1");
        require(static_cast<int>(parts.size()) == k, ErrorKind::invalid_input,
            "four-split needs exactly k = " + std::to_string(k) + " parts");
        std::vector<char> seen(4 * k + 1, 0);
        for (auto & v : parts) {
            require(v.ground_size() == 4 * k && v.size() == 4, ErrorKind::invalid_input,
                "part {" + v.to_string() + "} is not a 4-subset of [4k]");
            for (int e : v.elements()) {
                require(! seen[e], ErrorKind::invalid_input, "element " + std::to_string(e) + " appears twice");
                seen[e] = 1;
            }
        }
    }

    // 2-colors the union of two perfect matchings given as partner arrays.
    // Components are even alternating cycles; each is walked from its
    // lowest vertex, which gets color 0.
    inline std::vector<int> two_color_matchings(const std::vector<int> & first, const std::vector<int> & second)
    {
        int n = static_cast<int>(first.size()) - 1;
        std::vector<int> color(n + 1, -1);
        for (int root = 1; root <= n; ++root) {
            if (color[root] >= 0)
                continue;
            color[root] = 0;
            int cur = root;
            bool use_first = true;
            while (true) {
                int next = use_first ? first[cur] : second[cur];
                if (color[next] >= 0) {
                    require(color[next] != color[cur], ErrorKind::contract_violation, "odd cycle in matching union");
                    break;
                }
                color[next] = 1 - color[cur];
                cur = next;
                use_first = ! use_first;
            }
        }
        return color;
    }
}

/// Splits [4k] into four stable k-subsets, each containing exactly one
/// element of every part of the given partition into 4-sets.
///
/// M1 = {12, 34, ...} and M2 = {23, 45, ..., (4k)1} cover the cycle; M3 pairs
/// each part's sorted elements (v1 v2)(v3 v4). A 2-coloring c1 of M1+M3 puts
/// two elements of each part in each class; M4 pairs the same-c1 elements of
/// each part, and a 2-coloring c2 of M2+M4 separates them. The classes of
/// (c1, c2) are returned ordered by smallest element.
inline std::array<ElementSet, 4> four_split(int k, std::span<const ElementSet> parts)
{
    detail::require_four_partition(k, parts);
    int n = 4 * k;
    std::vector<int> m1(n + 1), m2(n + 1), m3(n + 1), m4(n + 1);
    for (int j = 1; j <= n; j += 2) {
        m1[j] = j + 1;
        m1[j + 1] = j;
        int a = j + 1, b = cyclic_successor(j + 1, n);
        m2[a] = b;
        m2[b] = a;
    }
    for (auto & v : parts) {
        auto e = v.elements();
        m3[e[0]] = e[1];
        m3[e[1]] = e[0];
        m3[e[2]] = e[3];
        m3[e[3]] = e[2];
    }
    auto c1 = detail::two_color_matchings(m1, m3);
    for (auto & v : parts) {
        std::array<std::vector<int>, 2> side;
        for (int e : v.elements())
            side[c1[e]].push_back(e);
        for (auto & pair : side) {
            require(pair.size() == 2, ErrorKind::contract_violation, "first coloring unbalanced on a part");
            m4[pair[0]] = pair[1];
            m4[pair[1]] = pair[0];
        }
    }
    auto c2 = detail::two_color_matchings(m2, m4);

    std::array<std::vector<int>, 4> classes;
    for (int j = 1; j <= n; ++j)
        classes[2 * c1[j] + c2[j]].push_back(j);
    std::sort(classes.begin(), classes.end());
    return {ElementSet(n, classes[0]), ElementSet(n, classes[1]), ElementSet(n, classes[2]), ElementSet(n, classes[3])};
}

/// The classes partition [4k], each is cyclically stable, and each meets
/// every part exactly once.
inline bool verify_four_split(int k, std::span<const ElementSet> parts, const std::array<ElementSet, 4> & classes)
{
    std::vector<int> owner(4 * k + 1, 0);
    for (auto & c : classes) {
        if (c.ground_size() != 4 * k || c.size() != k || ! is_stable(c, true))
            return false;
        for (int e : c.elements())
            if (owner[e]++)
                return false;
        for (auto & v : parts)
            if (c.intersection_size(v) != 1)
                return false;
    }
    return true;
}

} // namespace stabsets
