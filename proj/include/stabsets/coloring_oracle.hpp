#pragma once

// Black-box access to a vertex coloring of a graph family. Solvers only
// learn colors through color_of, and every call is counted.

#include <stabsets/element_set.hpp>
#include <stabsets/error.hpp>
#include <stabsets/graph_family.hpp>
#include <stabsets/hashing.hpp>

#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

namespace stabsets {

using Color = int;

enum class ColoringSource {
    table,
    rule,
    composed,
};

class ColoringOracle {
public:
    using Rule = std::function<Color(const ElementSet &)>;

    ColoringOracle(GraphFamilySpec spec, int palette, Rule rule, ColoringSource source, std::string description = {}) :
        spec_(spec),
        palette_(palette),
        rule_(std::move(rule)),
        source_(source),
        description_(std::move(description))
    {
        require(palette_ >= 1, ErrorKind::invalid_input, "palette size must be positive");
    }

    ColoringOracle(const ColoringOracle & other) :
        spec_(other.spec_),
        palette_(other.palette_),
        rule_(other.rule_),
        source_(other.source_),
        description_(other.description_),
        queries_(other.queries())
    {
    }

    ColoringOracle & operator=(const ColoringOracle & other)
    {
        spec_ = other.spec_;
        palette_ = other.palette_;
        rule_ = other.rule_;
        source_ = other.source_;
        description_ = other.description_;
        queries_.store(other.queries());
        return *this;
    }

    /// Color of vertex a, in [1, palette]. Counts one query per call.
    /// Querying a non-vertex or receiving a color outside the palette is a
    /// contract violation.
    Color color_of(const ElementSet & a) const
    {
        queries_.fetch_add(1, std::memory_order_relaxed);
        require(a.ground_size() == spec_.n && a.size() == spec_.k && detail::family_contains(spec_, a),
            ErrorKind::contract_violation, "query {" + a.to_string() + "} is not a vertex of " + spec_.to_string());
        Color c = rule_(a);
        require(c >= 1 && c <= palette_, ErrorKind::contract_violation,
            "color " + std::to_string(c) + " of {" + a.to_string() + "} outside palette [1, " + std::to_string(palette_)
                + "]");
        return c;
    }

    const GraphFamilySpec & spec() const noexcept { return spec_; }
    int palette() const noexcept { return palette_; }
    ColoringSource source() const noexcept { return source_; }
    const std::string & description() const noexcept { return description_; }
    std::uint64_t queries() const noexcept { return queries_.load(std::memory_order_relaxed); }
    void reset_queries() noexcept { queries_.store(0, std::memory_order_relaxed); }

private:
    GraphFamilySpec spec_;
    int palette_;
    Rule rule_;
    ColoringSource source_;
    std::string description_;
    mutable std::atomic<std::uint64_t> queries_{0};
};

using ColorTable = std::unordered_map<ElementSet, Color>;

/// Oracle answering from an explicit table. Missing vertices are allowed at
/// construction; querying one is a contract violation.
inline ColoringOracle make_table_coloring(const GraphFamilySpec & spec, int palette, ColorTable table)
{
    for (auto & [vertex, color] : table) {
        require(is_vertex(spec, vertex), ErrorKind::invalid_input,
            "table key {" + vertex.to_string() + "} is not a vertex of " + spec.to_string());
        require(color >= 1 && color <= palette, ErrorKind::invalid_input,
            "table color " + std::to_string(color) + " outside palette [1, " + std::to_string(palette) + "]");
    }
    auto shared = std::make_shared<const ColorTable>(std::move(table));
    return ColoringOracle(
        spec, palette,
        [shared](const ElementSet & a) {
            auto it = shared->find(a);
            require(it != shared->end(), ErrorKind::contract_violation, "no color recorded for {" + a.to_string() + "}");
            return it->second;
        },
        ColoringSource::table, "table");
}

/// Built-in coloring rules:
///   constant            every vertex gets 1
///   min-element-capped  min(min(A), m)
///   proper-lovasz       min(min(A), n-2k+2), proper on K(n,k)
///   random              seeded hash of the vertex, uniform on [1, m]
inline ColoringOracle make_rule_coloring(const GraphFamilySpec & spec, int palette, std::string_view rule_id,
    std::uint64_t seed = 0)
{
    ColoringOracle::Rule rule;
    if (rule_id == "constant")
        rule = [](const ElementSet &) { return 1; };
    else if (rule_id == "min-element-capped")
        rule = [palette](const ElementSet & a) { return std::min(a.front(), palette); };
    else if (rule_id == "proper-lovasz") {
        int cap = spec.n - 2 * spec.k + 2;
        rule = [cap](const ElementSet & a) { return std::min(a.front(), cap); };
    }
    else if (rule_id == "random")
        rule = [palette, seed](const ElementSet & a) {
            std::uint64_t h = splitmix64(seed);
            for (int e : a.elements())
                h = splitmix64(h ^ static_cast<std::uint64_t>(e));
            return 1 + static_cast<Color>(bounded(h, static_cast<std::uint64_t>(palette)));
        };
    else
        fail(ErrorKind::invalid_input, "unknown coloring rule '" + std::string(rule_id) + "'");

    std::string description(rule_id);
    if (rule_id == "random")
        description += "," + std::to_string(seed);
    return ColoringOracle(spec, palette, std::move(rule), ColoringSource::rule, std::move(description));
}

// Coloring file:
//   n k m family
//   <elements> <color>
//   ...
// Whitespace separated, '#' starts a comment.

inline ColoringOracle read_coloring(std::istream & in)
{
    std::string line;
    std::optional<GraphFamilySpec> spec;
    int palette = 0;
    ColorTable table;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;)
            tokens.push_back(t);
        if (tokens.empty())
            continue;
        auto where = "line " + std::to_string(line_number) + ": ";
        if (! spec) {
            require(tokens.size() == 4, ErrorKind::invalid_input, where + "expected header 'n k m family'");
            int n = 0, k = 0;
            try {
                n = std::stoi(tokens[0]);
                k = std::stoi(tokens[1]);
                palette = std::stoi(tokens[2]);
            }
            catch (const std::logic_error &) {
                fail(ErrorKind::invalid_input, where + "non-numeric header field");
            }
            require(palette >= 1, ErrorKind::invalid_input, where + "palette size must be positive");
            spec.emplace(parse_family(tokens[3]), n, k);
            continue;
        }
        require(tokens.size() == 2, ErrorKind::invalid_input, where + "expected '<elements> <color>'");
        auto vertex = ElementSet::parse(spec->n, tokens[0]);
        require(vertex.size() == spec->k && detail::family_contains(*spec, vertex), ErrorKind::invalid_input,
            where + "{" + vertex.to_string() + "} is not a vertex of " + spec->to_string());
        Color color = 0;
        try {
            std::size_t used = 0;
            color = std::stoi(tokens[1], &used);
            require(used == tokens[1].size(), ErrorKind::invalid_input, where + "malformed color");
        }
        catch (const std::logic_error &) {
            fail(ErrorKind::invalid_input, where + "malformed color '" + tokens[1] + "'");
        }
        require(color >= 1 && color <= palette, ErrorKind::invalid_input,
            where + "color " + std::to_string(color) + " outside palette [1, " + std::to_string(palette) + "]");
        require(table.emplace(vertex, color).second, ErrorKind::invalid_input,
            where + "duplicate vertex {" + vertex.to_string() + "}");
    }
    require(spec.has_value(), ErrorKind::invalid_input, "coloring file has no header");
    return make_table_coloring(*spec, palette, std::move(table));
}

inline ColoringOracle load_coloring(const std::string & path)
{
    std::ifstream in(path);
    require(in.good(), ErrorKind::invalid_input, "cannot open coloring file '" + path + "'");
    return read_coloring(in);
}

/// Writes every vertex of the oracle's family with its color (one query per
/// vertex).
inline void write_coloring(const ColoringOracle & oracle, std::ostream & out,
    std::size_t vertex_cap = default_materialize_cap)
{
    const auto & spec = oracle.spec();
    out << spec.n << ' ' << spec.k << ' ' << oracle.palette() << ' ' << family_name(spec.family) << '\n';
    std::size_t written = 0;
    for_each_vertex(spec, [&](const ElementSet & v) {
        require(++written <= vertex_cap, ErrorKind::cap_exceeded,
            "coloring of " + spec.to_string() + " exceeds " + std::to_string(vertex_cap) + " vertices");
        out << v.to_string() << ' ' << oracle.color_of(v) << '\n';
    });
}

inline void save_coloring(const ColoringOracle & oracle, const std::string & path,
    std::size_t vertex_cap = default_materialize_cap)
{
    std::ofstream out(path);
    require(out.good(), ErrorKind::invalid_input, "cannot write coloring file '" + path + "'");
    write_coloring(oracle, out, vertex_cap);
}

} // namespace stabsets
