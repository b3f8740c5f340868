#pragma once

// Search algorithms for monochromatic edges in colorings of the Schrijver
// graph S(n,k) with few colors, given black-box access to the coloring.
//
//   brute_force_mono_edge       query every vertex
//   interval_solver             disjoint runs of 2k+d-2 consecutive elements,
//                               n^O(d) queries for m <= d*floor(n/(2k+d-2)) - 1
//   extend_coloring_to_kneser   recolor unstable sets by their smallest odd
//                               element, turning S(n,k) with
//                               floor(n/2)-2k+1 colors into K(n,k) with n-2k+1
//   lift_4k_solver              reduce the floor(n/2)-2k+1 color case to a
//                               solver for S(4k,k)

#include <stabsets/coloring_oracle.hpp>
#include <stabsets/element_set.hpp>
#include <stabsets/error.hpp>
#include <stabsets/graph_family.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stabsets {

struct MonochromaticEdge {
    ElementSet a;
    ElementSet b;
    Color color = 0;

    friend bool operator==(const MonochromaticEdge &, const MonochromaticEdge &) = default;
};

struct EdgeReport {
    MonochromaticEdge edge;
    std::uint64_t queries = 0;
};

/// Checks disjointness, membership of both endpoints in the oracle's family,
/// and that the oracle assigns both endpoints e.color.
inline bool verify_mono_edge(const ColoringOracle & oracle, const MonochromaticEdge & e)
{
    const auto & spec = oracle.spec();
    for (auto * s : {&e.a, &e.b})
        if (s->ground_size() != spec.n || s->size() != spec.k || ! detail::family_contains(spec, *s))
            return false;
    if (! e.a.is_disjoint(e.b))
        return false;
    try {
        return oracle.color_of(e.a) == e.color && oracle.color_of(e.b) == e.color;
    }
    catch (const Error &) {
        return false;
    }
}

struct ColoredVertex {
    ElementSet vertex;
    Color color;
};

namespace detail {
    // Lexicographically first (color, first set, second set) disjoint pair
    // with equal colors.
    inline std::optional<MonochromaticEdge> first_mono_pair(std::vector<ColoredVertex> colored)
    {
        std::sort(colored.begin(), colored.end(), [](const ColoredVertex & x, const ColoredVertex & y) {
            return std::tie(x.color, x.vertex) < std::tie(y.color, y.vertex);
        });
        for (std::size_t lo = 0; lo < colored.size();) {
            std::size_t hi = lo;
            while (hi < colored.size() && colored[hi].color == colored[lo].color)
                ++hi;
            for (std::size_t x = lo; x < hi; ++x)
                for (std::size_t y = x + 1; y < hi; ++y)
                    if (colored[x].vertex.is_disjoint(colored[y].vertex))
                        return MonochromaticEdge{colored[x].vertex, colored[y].vertex, colored[x].color};
            lo = hi;
        }
        return std::nullopt;
    }

    inline ElementSet shift(const ElementSet & s, int offset, int n)
    {
        std::vector<int> elements(s.elements().begin(), s.elements().end());
        for (auto & e : elements)
            e += offset;
        return ElementSet(n, std::move(elements));
    }
}

/// Queries every vertex of the oracle's family once and returns the first
/// monochromatic edge. Works for any family; on S(n,k) a solution exists
/// whenever the palette has at most n-2k+1 colors, so failure certifies a
/// broken contract.
inline EdgeReport brute_force_mono_edge(const ColoringOracle & oracle, std::size_t vertex_cap = default_materialize_cap)
{
    std::vector<ColoredVertex> colored;
    std::uint64_t queries = 0;
    for_each_vertex(oracle.spec(), [&](const ElementSet & v) {
        require(colored.size() < vertex_cap, ErrorKind::cap_exceeded,
            "brute force over " + oracle.spec().to_string() + " exceeds " + std::to_string(vertex_cap) + " vertices");
        ++queries;
        colored.push_back({v, oracle.color_of(v)});
    });
    auto edge = detail::first_mono_pair(std::move(colored));
    require(edge.has_value(), ErrorKind::no_solution,
        "no monochromatic edge in " + oracle.spec().to_string() + " with palette " + std::to_string(oracle.palette()));
    return {*edge, queries};
}

/// Layout for the interval solver: t = floor(n / (2k+d-2)) blocks of
/// consecutive elements starting at 1, each carrying the k-subsets that are
/// stable in the block's own cyclic order.
struct IntervalPlan {
    int n = 0;
    int k = 0;
    int d = 0;
    int block_length = 0;
    int t = 0;
    std::vector<ElementSet> blocks;
    std::vector<std::vector<ElementSet>> group_vertices;

    int max_palette() const { return d * t - 1; }
};

inline IntervalPlan make_interval_plan(int n, int k, int d)
{
    require_stable_parameters(n, k);
    require(d >= 2, ErrorKind::invalid_input, "interval solver needs d >= 2");
    IntervalPlan plan;
    plan.n = n;
    plan.k = k;
    plan.d = d;
    plan.block_length = 2 * k + d - 2;
    plan.t = n / plan.block_length;
    require(plan.t >= 1, ErrorKind::invalid_input,
        "block length " + std::to_string(plan.block_length) + " exceeds n=" + std::to_string(n));
    auto local = enumerate_stable(plan.block_length, k, true);
    for (int i = 0; i < plan.t; ++i) {
        int offset = i * plan.block_length;
        std::vector<int> block(plan.block_length);
        for (int j = 0; j < plan.block_length; ++j)
            block[j] = offset + j + 1;
        plan.blocks.emplace_back(n, std::move(block));
        auto & group = plan.group_vertices.emplace_back();
        for (auto & s : local)
            group.push_back(detail::shift(s, offset, n));
    }
    return plan;
}

/// Finds a monochromatic edge by querying exactly the block families of the
/// interval plan. Requires palette <= d * t - 1.
inline EdgeReport interval_solver(const ColoringOracle & oracle, int d)
{
    const auto & spec = oracle.spec();
    require(spec.family == Family::schrijver, ErrorKind::invalid_input, "interval solver needs a Schrijver coloring");
    auto plan = make_interval_plan(spec.n, spec.k, d);
    require(oracle.palette() <= plan.max_palette(), ErrorKind::contract_violation,
        "palette " + std::to_string(oracle.palette()) + " exceeds d*t-1 = " + std::to_string(plan.max_palette()));

    std::vector<ColoredVertex> colored;
    std::uint64_t queries = 0;
    for (auto & group : plan.group_vertices)
        for (auto & v : group) {
            ++queries;
            colored.push_back({v, oracle.color_of(v)});
        }
    auto edge = detail::first_mono_pair(std::move(colored));
    require(edge.has_value(), ErrorKind::no_solution, "interval solver found no monochromatic edge");
    return {*edge, queries};
}

/// Extension of a coloring of S(n,k) with floor(n/2)-2k+1 colors to K(n,k)
/// with n-2k+1 colors: an unstable set whose smallest odd element is 2i-1
/// gets color i, a stable set A gets c(A) + ceil(n/2).
///
/// The extension queries the base oracle for stable sets, so the base must
/// outlive it.
class KneserExtension {
public:
    explicit KneserExtension(const ColoringOracle & base) :
        base_(&base),
        offset_((base.spec().n + 1) / 2),
        extended_(make_extended(base, offset_))
    {
    }

    const ColoringOracle & oracle() const noexcept { return extended_; }
    int offset() const noexcept { return offset_; }

    /// A monochromatic edge of the extension is a monochromatic edge of the
    /// base coloring: colors up to ceil(n/2) name a shared odd element, so
    /// they cannot appear on a disjoint pair.
    MonochromaticEdge back_map(const MonochromaticEdge & kneser_edge) const
    {
        require(kneser_edge.color > offset_, ErrorKind::contract_violation,
            "extended edge has color " + std::to_string(kneser_edge.color) + " <= ceil(n/2) = " + std::to_string(offset_)
                + "; not a monochromatic edge");
        require(kneser_edge.a.is_disjoint(kneser_edge.b), ErrorKind::contract_violation, "extended edge is not disjoint");
        return {kneser_edge.a, kneser_edge.b, kneser_edge.color - offset_};
    }

    const ColoringOracle & base() const noexcept { return *base_; }

private:
    static ColoringOracle make_extended(const ColoringOracle & base, int offset)
    {
        const auto & spec = base.spec();
        require(spec.family == Family::schrijver, ErrorKind::invalid_input, "Kneser extension needs a Schrijver coloring");
        int required = spec.n / 2 - 2 * spec.k + 1;
        require(required >= 1 && base.palette() <= required, ErrorKind::contract_violation,
            "Kneser extension needs palette <= floor(n/2)-2k+1 = " + std::to_string(required));
        const ColoringOracle * source = &base;
        return ColoringOracle(
            GraphFamilySpec(Family::kneser, spec.n, spec.k), spec.n - 2 * spec.k + 1,
            [source, offset](const ElementSet & a) -> Color {
                if (is_stable(a, true))
                    return source->color_of(a) + offset;
                for (int e : a.elements())
                    if (e % 2 == 1)
                        return (e + 1) / 2;
                fail(ErrorKind::contract_violation, "unstable set without odd element");
            },
            ColoringSource::composed, "kneser-extension");
    }

    const ColoringOracle * base_;
    int offset_;
    ColoringOracle extended_;
};

inline KneserExtension extend_coloring_to_kneser(const ColoringOracle & base)
{
    return KneserExtension(base);
}

/// A solver for S(4k,k) colored with at most 2k+1 colors. It must let
/// exceptions thrown by the oracle propagate: the lifting algorithm aborts a
/// simulation by throwing from inside color_of.
using SubSolver = std::function<MonochromaticEdge(const ColoringOracle &)>;

inline SubSolver brute_force_subsolver()
{
    return [](const ColoringOracle & o) { return brute_force_mono_edge(o).edge; };
}

enum class LiftBranch {
    direct,           // n <= 8k, one run of the sub-solver on [4k]
    simulation,       // some block simulation saw at most 2k+1 colors
    cross_block,      // every simulation aborted; edge between witness families
};

inline std::string_view to_string(LiftBranch b)
{
    switch (b) {
    case LiftBranch::direct: return "direct";
    case LiftBranch::simulation: return "simulation";
    case LiftBranch::cross_block: return "cross-block";
    }
    return "?";
}

struct LiftReport {
    MonochromaticEdge edge;
    std::uint64_t queries = 0;
    LiftBranch branch = LiftBranch::direct;
    int blocks_simulated = 0;
    // one entry per aborted simulation: the first-seen vertex of each of
    // 2k+2 distinct colors, in query order
    std::vector<std::vector<ColoredVertex>> witnesses;
};

namespace detail {
    struct SimulationAborted {};

    // Runs the sub-solver on the block {offset+1, ..., offset+4k} viewed as
    // S(4k,k). Colors are relabeled in first-seen order so the sub-solver sees
    // a palette of 2k+1; the (2k+2)-th distinct color aborts the run.
    class BlockSimulation {
    public:
        BlockSimulation(const ColoringOracle & base, int offset, std::uint64_t & queries) :
            base_(base),
            offset_(offset),
            queries_(queries),
            limit_(2 * base.spec().k + 2)
        {
        }

        std::optional<MonochromaticEdge> run(const SubSolver & sub)
        {
            int k = base_.spec().k;
            ColoringOracle proxy(
                GraphFamilySpec(Family::schrijver, 4 * k, k), limit_ - 1,
                [this](const ElementSet & local) { return observe(local); }, ColoringSource::composed,
                "block+" + std::to_string(offset_));
            try {
                MonochromaticEdge local;
                try {
                    local = sub(proxy);
                }
                catch (const Error & e) {
                    fail(ErrorKind::untrusted_subsolver, std::string("sub-solver failed: ") + e.what());
                }
                // re-query both endpoints so the monitor sees their colors
                Color shared = 0;
                bool valid = false;
                try {
                    Color ca = proxy.color_of(local.a);
                    Color cb = proxy.color_of(local.b);
                    valid = ca == cb && local.a.is_disjoint(local.b);
                    shared = ca;
                }
                catch (const Error &) {
                    valid = false;
                }
                require(valid, ErrorKind::untrusted_subsolver,
                    "sub-solver returned {" + local.a.to_string() + "}, {" + local.b.to_string()
                        + "} which is not a monochromatic edge");
                return MonochromaticEdge{shift(local.a, offset_, base_.spec().n), shift(local.b, offset_, base_.spec().n),
                    seen_colors_[shared - 1]};
            }
            catch (const SimulationAborted &) {
                return std::nullopt;
            }
        }

        const std::vector<ColoredVertex> & witness() const noexcept { return witness_; }

    private:
        Color observe(const ElementSet & local)
        {
            auto global = shift(local, offset_, base_.spec().n);
            ++queries_;
            Color c = base_.color_of(global);
            auto it = std::find(seen_colors_.begin(), seen_colors_.end(), c);
            if (it != seen_colors_.end())
                return static_cast<Color>(it - seen_colors_.begin()) + 1;
            seen_colors_.push_back(c);
            witness_.push_back({global, c});
            if (static_cast<int>(seen_colors_.size()) >= limit_)
                throw SimulationAborted{};
            return static_cast<Color>(seen_colors_.size());
        }

        const ColoringOracle & base_;
        int offset_;
        std::uint64_t & queries_;
        int limit_;
        std::vector<Color> seen_colors_;
        std::vector<ColoredVertex> witness_;
    };
}

/// Finds a monochromatic edge in a coloring of S(n,k), n >= 4k, with at most
/// floor(n/2)-2k+1 colors, using a sub-solver for S(4k,k).
///
/// For n <= 8k the palette is at most 2k+1 and one sub-solver run on [4k]
/// suffices. Otherwise the t = floor(n/4k) blocks of 4k consecutive elements
/// are simulated in order; a run that stays within 2k+1 colors yields an
/// edge, and if every run is aborted the witness families of 2k+2 distinct
/// colors hold t(2k+2) > m vertices, so two from different blocks share a
/// color and are disjoint.
inline LiftReport lift_4k_solver(const ColoringOracle & oracle, const SubSolver & sub)
{
    const auto & spec = oracle.spec();
    require(spec.family == Family::schrijver, ErrorKind::invalid_input, "lift solver needs a Schrijver coloring");
    int n = spec.n, k = spec.k;
    require(n >= 4 * k, ErrorKind::invalid_input, "lift solver needs n >= 4k");
    int max_palette = n / 2 - 2 * k + 1;
    require(oracle.palette() <= max_palette, ErrorKind::contract_violation,
        "palette " + std::to_string(oracle.palette()) + " exceeds floor(n/2)-2k+1 = " + std::to_string(max_palette));

    LiftReport report;
    bool direct = n <= 8 * k;
    int t = direct ? 1 : n / (4 * k);
    report.branch = direct ? LiftBranch::direct : LiftBranch::simulation;
    for (int i = 0; i < t; ++i) {
        detail::BlockSimulation simulation(oracle, i * 4 * k, report.queries);
        ++report.blocks_simulated;
        if (auto edge = simulation.run(sub)) {
            report.edge = *edge;
            return report;
        }
        require(! direct, ErrorKind::contract_violation, "direct run saw more than 2k+1 colors");
        report.witnesses.push_back(simulation.witness());
    }

    std::vector<ColoredVertex> pool;
    for (auto & w : report.witnesses)
        pool.insert(pool.end(), w.begin(), w.end());
    auto edge = detail::first_mono_pair(std::move(pool));
    require(edge.has_value(), ErrorKind::no_solution, "witness families share no color");
    report.branch = LiftBranch::cross_block;
    report.edge = *edge;
    return report;
}

} // namespace stabsets
