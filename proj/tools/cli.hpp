#pragma once

// Command-line front end. run_cli is kept separate from main so the tests can
// drive it in-process.

#include <stabsets/coloring_oracle.hpp>
#include <stabsets/element_set.hpp>
#include <stabsets/error.hpp>
#include <stabsets/graph_family.hpp>
#include <stabsets/io.hpp>
#include <stabsets/reductions.hpp>
#include <stabsets/schrijver_solvers.hpp>
#include <stabsets/uncovered.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace stabsets::cli {

enum ExitCode : int {
    exit_success = 0,
    exit_no_result = 1,
    exit_invalid = 2,
};

struct RunReport {
    std::string command;
    std::string digest;
    Json solution;
    std::optional<std::uint64_t> queries;
    double millis = 0;
    bool valid = false;
    Json extra = Json::object();

    Json to_json() const
    {
        Json j = {{"command", command}, {"digest", digest}, {"solution", solution}, {"millis", millis},
            {"valid", valid}};
        j["queries"] = queries ? Json(*queries) : Json(nullptr);
        for (auto & [key, value] : extra.items())
            j[key] = value;
        return j;
    }

    void print_text(std::ostream & out) const
    {
        auto text = [](const Json & v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        out << "command: " << command << "\n";
        out << "instance: " << digest << "\n";
        if (solution.is_array())
            for (auto & s : solution)
                out << "solution: " << text(s) << "\n";
        else
            out << "solution: " << text(solution) << "\n";
        for (auto & [key, value] : extra.items())
            out << key << ": " << text(value) << "\n";
        if (queries)
            out << "queries: " << *queries << "\n";
        char buffer[32];
        std::snprintf(buffer, sizeof buffer, "%.3f", millis);
        out << "millis: " << buffer << "\n";
        out << "valid: " << (valid ? "true" : "false") << "\n";
    }
};

/// FNV-1a over a canonical rendering of the instance.
inline std::string digest(std::string_view canonical)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
    return buffer;
}

class Stopwatch {
public:
    double millis() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

namespace detail {
    inline std::string joined_command(const std::vector<std::string> & args)
    {
        std::string s;
        for (auto & a : args) {
            if (! s.empty())
                s += ' ';
            s += a;
        }
        return s;
    }

    // Splits "name:rest" into ("name", "rest"); rest is empty without a colon.
    inline std::pair<std::string, std::string> split_suffix(const std::string & s)
    {
        auto colon = s.find(':');
        if (colon == std::string::npos)
            return {s, {}};
        return {s.substr(0, colon), s.substr(colon + 1)};
    }

    inline std::uint64_t parse_seed(const std::string & s)
    {
        try {
            std::size_t used = 0;
            auto v = std::stoull(s, &used);
            require(used == s.size(), ErrorKind::invalid_input, "malformed seed '" + s + "'");
            return v;
        }
        catch (const std::logic_error &) {
            fail(ErrorKind::invalid_input, "malformed seed '" + s + "'");
        }
    }

    inline int parse_int(const std::string & s, const std::string & what)
    {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            require(used == s.size(), ErrorKind::invalid_input, "malformed " + what + " '" + s + "'");
            return v;
        }
        catch (const std::logic_error &) {
            fail(ErrorKind::invalid_input, "malformed " + what + " '" + s + "'");
        }
    }

    inline std::string edge_text(const MonochromaticEdge & e) { return e.a.to_string() + " " + e.b.to_string(); }
}

struct GlobalOptions {
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> cap;
};

class Runner {
public:
    Runner(std::ostream & out, std::ostream & err, std::string command) :
        out_(out),
        err_(err),
        command_(std::move(command))
    {
    }

    GlobalOptions global;

    int emit(RunReport report, int code)
    {
        report.command = command_;
        if (global.json)
            out_ << report.to_json().dump() << "\n";
        else
            report.print_text(out_);
        return code;
    }

    // A report that claims success must carry a verified solution.
    int emit_checked(RunReport report)
    {
        int code = report.valid ? exit_success : exit_invalid;
        if (! report.valid)
            err_ << "error: output failed verification\n";
        return emit(std::move(report), code);
    }

    std::uint64_t require_seed(std::optional<std::uint64_t> inline_seed, const std::string & what) const
    {
        if (inline_seed)
            return *inline_seed;
        require(global.seed.has_value(), ErrorKind::invalid_input, what + " needs a seed (--seed)");
        return *global.seed;
    }

    std::ostream & out() { return out_; }
    std::ostream & err() { return err_; }
    const std::string & command() const { return command_; }

private:
    std::ostream & out_;
    std::ostream & err_;
    std::string command_;
};

struct SchrijverArgs {
    std::optional<int> n, k, m;
    std::string coloring;
    std::string method = "brute";
    std::string family = "schrijver";
};

inline int solve_schrijver(Runner & run, const SchrijverArgs & args)
{
    std::optional<ColoringOracle> oracle;
    std::string canonical;
    if (args.coloring.starts_with("rule:")) {
        require(args.n && args.k && args.m, ErrorKind::invalid_input, "rule colorings need --n, --k and --m");
        auto body = args.coloring.substr(5);
        auto comma = body.find(',');
        auto name = body.substr(0, comma);
        std::optional<std::uint64_t> seed;
        if (comma != std::string::npos)
            seed = detail::parse_seed(body.substr(comma + 1));
        GraphFamilySpec spec(parse_family(args.family), *args.n, *args.k);
        std::uint64_t s = name == "random" ? run.require_seed(seed, "random coloring") : 0;
        oracle.emplace(make_rule_coloring(spec, *args.m, name, s));
    }
    else {
        oracle.emplace(load_coloring(args.coloring));
        const auto & spec = oracle->spec();
        require(! args.n || *args.n == spec.n, ErrorKind::invalid_input, "--n differs from the coloring file");
        require(! args.k || *args.k == spec.k, ErrorKind::invalid_input, "--k differs from the coloring file");
        require(! args.m || *args.m == oracle->palette(), ErrorKind::invalid_input, "--m differs from the coloring file");
    }
    canonical = oracle->spec().to_string() + " m=" + std::to_string(oracle->palette()) + " " + oracle->description();
    if (oracle->source() == ColoringSource::table) {
        std::ostringstream table;
        write_coloring(*oracle, table, run.global.cap.value_or(default_materialize_cap));
        canonical += "\n" + table.str();
        oracle->reset_queries();
    }

    RunReport report;
    report.digest = digest(canonical);
    Stopwatch clock;
    auto [method, parameter] = detail::split_suffix(args.method);
    MonochromaticEdge edge;
    if (method == "brute") {
        auto r = brute_force_mono_edge(*oracle, run.global.cap.value_or(default_materialize_cap));
        edge = r.edge;
        report.queries = r.queries;
    }
    else if (method == "interval") {
        require(! parameter.empty(), ErrorKind::invalid_input, "interval method needs a parameter: interval:d");
        auto r = interval_solver(*oracle, detail::parse_int(parameter, "interval parameter"));
        edge = r.edge;
        report.queries = r.queries;
    }
    else if (method == "lift4k") {
        auto r = lift_4k_solver(*oracle, brute_force_subsolver());
        edge = r.edge;
        report.queries = r.queries;
        report.extra["branch"] = std::string(to_string(r.branch));
    }
    else
        fail(ErrorKind::invalid_input, "unknown method '" + args.method + "'");
    report.millis = clock.millis();
    report.solution = detail::edge_text(edge);
    report.extra["color"] = edge.color;
    report.valid = verify_mono_edge(*oracle, edge);
    return run.emit_checked(std::move(report));
}

struct UncoveredArgs {
    std::string instance;
    std::string method = "derandomized";
    int retries = 1;
};

inline int solve_uncovered(Runner & run, const UncoveredArgs & args)
{
    auto raw = load_uncovered(args.instance);
    auto normalized = validate_and_normalize(raw);
    const auto & inst = normalized.instance;

    RunReport report;
    report.digest = digest(to_json(raw).dump());
    report.extra["method"] = args.method;
    if (! normalized.is_identity())
        report.extra["normalized_n"] = inst.n();
    Stopwatch clock;
    auto [method, parameter] = detail::split_suffix(args.method);
    std::optional<ElementSet> solution;
    if (method == "derandomized") {
        auto r = derandomized_solve(inst);
        report.extra["phi_start"] = r.potential.front().str();
        solution = r.solution;
    }
    else if (method == "randomized") {
        std::optional<std::uint64_t> inline_seed;
        if (! parameter.empty())
            inline_seed = detail::parse_seed(parameter);
        auto seed = run.require_seed(inline_seed, "randomized method");
        require(args.retries >= 1, ErrorKind::invalid_input, "--retries must be at least 1");
        int trial = 0;
        for (; trial < args.retries && ! solution; ++trial)
            solution = randomized_solve(inst, seed + static_cast<std::uint64_t>(trial)).outcome;
        report.extra["seed"] = seed;
        report.extra["trials"] = trial;
    }
    else if (method == "brute")
        solution = brute_force_solve(inst, run.global.cap.value_or(default_brute_force_cap));
    else
        fail(ErrorKind::invalid_input, "unknown method '" + args.method + "'");
    report.millis = clock.millis();

    if (! solution) {
        report.solution = nullptr;
        report.valid = false;
        run.err() << "randomized trials failed\n";
        return run.emit(std::move(report), exit_no_result);
    }
    auto original = normalized.to_original(*solution);
    report.solution = original.to_string();
    report.valid = verify_uncovered_solution(raw, original);
    return run.emit_checked(std::move(report));
}

inline int solve_ct(Runner & run, const std::string & path, const std::string & method_arg)
{
    auto ct = load_ct(path);
    auto reduction = ct_to_uncovered(ct);
    RunReport report;
    report.digest = digest(to_json(ct).dump());
    Stopwatch clock;
    auto [pipeline, method] = detail::split_suffix(method_arg);
    require(pipeline == "via-uncovered", ErrorKind::invalid_input, "unknown method '" + method_arg + "'");
    ElementSet reduced;
    if (method == "brute")
        reduced = brute_force_solve(reduction.target, run.global.cap.value_or(default_brute_force_cap));
    else if (method == "derandomized")
        reduced = derandomized_solve(reduction.target).solution;
    else
        fail(ErrorKind::invalid_input, "unknown method '" + method_arg + "'");
    auto solution = reduction.back_map(reduced);
    report.millis = clock.millis();
    report.solution = solution.to_string();
    report.valid = verify_ct_solution(ct, solution);
    return run.emit_checked(std::move(report));
}

inline int split4(Runner & run, const std::string & path)
{
    auto raw = load_uncovered(path);
    require(raw.k >= 1 && raw.n == 4 * raw.k, ErrorKind::invalid_input, "four-split needs n = 4k");
    std::vector<ElementSet> parts;
    for (auto & v : raw.sets)
        parts.emplace_back(raw.n, v);
    RunReport report;
    report.digest = digest(to_json(raw).dump());
    Stopwatch clock;
    auto classes = four_split(raw.k, parts);
    report.millis = clock.millis();
    report.solution = Json::array();
    for (auto & c : classes)
        report.solution.push_back(c.to_string());
    report.valid = verify_four_split(raw.k, parts, classes);
    return run.emit_checked(std::move(report));
}

inline int verify_uncovered(Runner & run, const std::string & path, const std::string & solution)
{
    auto raw = load_uncovered(path);
    validate_and_normalize(raw);
    auto s = ElementSet::parse(raw.n, solution);
    RunReport report;
    report.digest = digest(to_json(raw).dump());
    report.solution = s.to_string();
    report.valid = verify_uncovered_solution(raw, s);
    return run.emit(std::move(report), report.valid ? exit_success : exit_invalid);
}

inline int reduce(Runner & run, const std::string & kind, const std::string & in, const std::string & out)
{
    Json target;
    if (kind == "fisc-to-uncovered") {
        auto reduction = fisc_to_uncovered(load_fisc(in));
        target = to_json(reduction.target);
    }
    else {
        auto reduction = ct_to_uncovered(load_ct(in));
        target = to_json(reduction.target);
        target["original_labels"] = reduction.source.cycle();
    }
    save_json(target, out);
    if (run.global.json)
        run.out() << Json{{"command", run.command()}, {"output", out}, {"n", target["n"]}, {"k", target["k"]},
                             {"sets", target["sets"].size()}}
                         .dump()
                  << "\n";
    else
        run.out() << "wrote " << out << " (n=" << target["n"] << ", k=" << target["k"]
                  << ", sets=" << target["sets"].size() << ")\n";
    return exit_success;
}

inline int enumerate_stable_sets(Runner & run, int n, int k, bool linear)
{
    require_stable_parameters(n, k);
    auto cap = run.global.cap.value_or(1'000'000);
    StableSubsets gen(n, k, ! linear);
    Json all = Json::array();
    std::size_t count = 0;
    while (auto s = gen.next()) {
        require(++count <= cap, ErrorKind::cap_exceeded, "more than " + std::to_string(cap) + " stable sets");
        if (run.global.json)
            all.push_back(s->to_string());
        else
            run.out() << s->to_string() << "\n";
    }
    if (run.global.json)
        run.out() << Json{{"command", run.command()}, {"count", count}, {"sets", all}}.dump() << "\n";
    return exit_success;
}

inline int extremal(Runner & run, const std::string & what, const std::string & family, int n, int k, bool exact)
{
    Json j = {{"command", run.command()}};
    std::ostringstream line;
    if (what == "chi") {
        GraphFamilySpec spec(parse_family(family), n, k);
        auto bounds = chi_bounds(spec);
        line << "bounds " << bounds.lower << ".." << bounds.upper;
        j["lower"] = bounds.lower;
        j["upper"] = bounds.upper;
        if (exact) {
            auto g = materialize(spec, run.global.cap.value_or(default_materialize_cap));
            int chi = chromatic_number_exact(g, run.global.cap.value_or(default_chi_cap));
            line << " exact " << chi;
            j["exact"] = chi;
            j["within_bounds"] = bounds.lower <= chi && chi <= bounds.upper;
        }
    }
    else if (what == "alpha") {
        GraphFamilySpec spec(parse_family(family), n, k);
        if (spec.family == Family::unstable_cyclic && k >= 2) {
            auto formula = alpha_u_formula(n, k);
            line << "formula " << formula;
            j["formula"] = formula.str();
        }
        if (exact) {
            auto g = materialize(spec, run.global.cap.value_or(default_materialize_cap));
            auto alpha = independence_number_exact(g);
            line << (line.tellp() > 0 ? " " : "") << "exact " << alpha;
            j["exact"] = alpha;
        }
    }
    else {
        auto bound = hilton_milner_bound(n, k);
        std::vector<int> a_elements;
        for (int e = 2; e <= k + 1; ++e)
            a_elements.push_back(e);
        auto family_sets = hilton_milner_family(n, k, 1, ElementSet(n, a_elements));
        bool ok = is_intersecting(family_sets) && ! is_trivial(family_sets) && BigInt(family_sets.size()) == bound;
        line << "bound " << bound << " family " << family_sets.size() << (ok ? " valid" : " invalid");
        j["bound"] = bound.str();
        j["family_size"] = family_sets.size();
        j["valid"] = ok;
        if (! ok) {
            run.out() << (run.global.json ? j.dump() : line.str()) << "\n";
            return exit_invalid;
        }
    }
    run.out() << (run.global.json ? j.dump() : line.str()) << "\n";
    return exit_success;
}

// CSV rows: command,n,k,l_or_m,queries,millis
class BenchTable {
public:
    explicit BenchTable(std::ostream & out) :
        out_(out)
    {
        out_ << "command,n,k,l_or_m,queries,millis\n";
    }

    void row(const std::string & command, int n, int k, int l_or_m, std::optional<std::uint64_t> queries, double millis)
    {
        char buffer[32];
        std::snprintf(buffer, sizeof buffer, "%.3f", millis);
        out_ << command << ',' << n << ',' << k << ',' << l_or_m << ',' << (queries ? std::to_string(*queries) : "")
             << ',' << buffer << "\n";
    }

private:
    std::ostream & out_;
};

namespace detail {
    // Random instance with `l` sets of sizes in [2, max_size].
    inline UncoveredInstance bench_instance(int n, int k, int l, int max_size, std::uint64_t seed)
    {
        std::vector<ElementSet> sets;
        std::uint64_t index = 0;
        for (int i = 0; i < l; ++i) {
            int size = 2 + static_cast<int>(bounded(mix(seed, index++), static_cast<std::uint64_t>(max_size - 1)));
            std::vector<int> elements;
            while (static_cast<int>(elements.size()) < size) {
                int e = 1 + static_cast<int>(bounded(mix(seed, index++), static_cast<std::uint64_t>(n)));
                if (std::find(elements.begin(), elements.end(), e) == elements.end())
                    elements.push_back(e);
            }
            sets.emplace_back(n, std::move(elements));
        }
        return UncoveredInstance(n, k, std::move(sets));
    }
}

inline int bench(Runner & run, const std::string & suite)
{
    auto seed = run.global.seed.value_or(1);
    BenchTable table(run.out());
    if (suite == "acceptance") {
        struct Case {
            Family family;
            int n, k;
        };
        for (auto [family, n, k] : std::vector<Case>{{Family::schrijver, 9, 4}, {Family::kneser, 9, 4},
                 {Family::unstable_linear, 9, 3}, {Family::unstable_cyclic, 9, 2}, {Family::unstable_cyclic, 13, 3}}) {
            GraphFamilySpec spec(family, n, k);
            Stopwatch clock;
            int chi = chromatic_number_exact(materialize(spec), 200);
            table.row("chi-" + std::string(family_name(family)), n, k, chi, std::nullopt, clock.millis());
        }
        for (int k : {2, 3, 4}) {
            GraphFamilySpec spec(Family::unstable_cyclic, 12, k);
            Stopwatch clock;
            auto alpha = independence_number_exact(materialize(spec));
            table.row("alpha-u", 12, k, static_cast<int>(alpha), std::nullopt, clock.millis());
        }
        for (int k = 1; k <= 5; ++k) {
            auto inst = detail::bench_instance(68 * k, k, 68 * k - 2 * k + 1, 8, seed + k);
            Stopwatch clock;
            auto r = derandomized_solve(inst);
            require(verify_uncovered_solution(inst, r.solution), ErrorKind::contract_violation, "bench solve invalid");
            table.row("derandomized", inst.n(), k, inst.set_count(), std::nullopt, clock.millis());
        }
        return exit_success;
    }
    require(suite == "solvers", ErrorKind::invalid_input, "unknown suite '" + suite + "'");
    for (int d : {2, 3, 4})
        for (int k : {2, 3}) {
            int n = 60;
            auto plan = make_interval_plan(n, k, d);
            int m = plan.max_palette();
            auto oracle = make_rule_coloring(GraphFamilySpec(Family::schrijver, n, k), m, "random", seed);
            Stopwatch clock;
            auto r = interval_solver(oracle, d);
            table.row("interval:" + std::to_string(d), n, k, m, r.queries, clock.millis());
        }
    for (int k : {1, 2})
        for (int n : {8 * k, 20, 28}) {
            int m = n / 2 - 2 * k + 1;
            auto oracle = make_rule_coloring(GraphFamilySpec(Family::schrijver, n, k), m, "random", seed);
            Stopwatch clock;
            auto r = lift_4k_solver(oracle, brute_force_subsolver());
            table.row("lift4k", n, k, m, r.queries, clock.millis());
        }
    for (int k : {1, 2, 3, 4, 5}) {
        auto inst = detail::bench_instance(68 * k, k, 68 * k - 2 * k + 1, 8, seed + k);
        Stopwatch clock;
        derandomized_solve(inst);
        table.row("derandomized", inst.n(), k, inst.set_count(), std::nullopt, clock.millis());
    }
    for (int k : {10, 50, 200}) {
        std::vector<int> perm(4 * k);
        for (int i = 0; i < 4 * k; ++i)
            perm[i] = i + 1;
        for (int i = 4 * k - 1; i > 0; --i)
            std::swap(perm[i], perm[bounded(mix(seed, static_cast<std::uint64_t>(i)), static_cast<std::uint64_t>(i + 1))]);
        std::vector<ElementSet> parts;
        for (int i = 0; i < k; ++i)
            parts.emplace_back(4 * k, std::vector<int>(perm.begin() + 4 * i, perm.begin() + 4 * i + 4));
        Stopwatch clock;
        four_split(k, parts);
        table.row("split4", 4 * k, k, k, std::nullopt, clock.millis());
    }
    return exit_success;
}

inline int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Stable sets in the cycle: Schrijver-graph solvers, unfair independent sets, reductions"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    std::uint64_t seed = 0;
    std::size_t cap = 0;
    app.add_flag("--json", global.json, "print reports as JSON");
    auto seed_opt = app.add_option("--seed", seed, "seed for randomized modes");
    auto cap_opt = app.add_option("--cap", cap, "vertex or enumeration cap for brute-force work");

    auto solve = app.add_subcommand("solve", "solve an instance");
    solve->require_subcommand(1);

    SchrijverArgs schrijver;
    auto solve_s = solve->add_subcommand("schrijver", "find a monochromatic edge");
    solve_s->add_option("--n", schrijver.n);
    solve_s->add_option("--k", schrijver.k);
    solve_s->add_option("--m", schrijver.m, "palette size");
    solve_s->add_option("--coloring", schrijver.coloring, "file or rule:NAME[,seed]")->required();
    solve_s->add_option("--method", schrijver.method, "brute | interval:d | lift4k");
    solve_s->add_option("--family", schrijver.family, "vertex family for rule colorings");

    UncoveredArgs uncovered;
    auto solve_u = solve->add_subcommand("uncovered", "find an unfair independent set");
    solve_u->add_option("--instance", uncovered.instance)->required();
    solve_u->add_option("--method", uncovered.method, "derandomized | randomized[:seed] | brute");
    solve_u->add_option("--retries", uncovered.retries, "randomized trials");

    std::string ct_in, ct_method = "via-uncovered:brute";
    auto solve_c = solve->add_subcommand("ct", "independent set in a cycle plus triangles");
    solve_c->add_option("--in", ct_in)->required();
    solve_c->add_option("--method", ct_method, "via-uncovered:<brute|derandomized>");

    std::string split_instance;
    auto split = app.add_subcommand("split4", "split [4k] into four stable sets");
    split->add_option("--instance", split_instance)->required();

    std::string verify_instance, verify_solution;
    auto verify = app.add_subcommand("verify", "check a solution");
    auto verify_u = verify->add_subcommand("uncovered");
    verify->require_subcommand(1);
    verify_u->add_option("--instance", verify_instance)->required();
    verify_u->add_option("--solution", verify_solution)->required();

    std::string reduce_in, reduce_out;
    auto reduce_cmd = app.add_subcommand("reduce", "transform an instance");
    reduce_cmd->require_subcommand(1);
    auto reduce_f = reduce_cmd->add_subcommand("fisc-to-uncovered");
    auto reduce_c = reduce_cmd->add_subcommand("ct-to-uncovered");
    for (auto * r : {reduce_f, reduce_c}) {
        r->add_option("--in", reduce_in)->required();
        r->add_option("--out", reduce_out)->required();
    }

    int enum_n = 0, enum_k = 0;
    bool linear = false;
    auto enumerate = app.add_subcommand("enumerate", "list stable sets");
    enumerate->require_subcommand(1);
    auto enumerate_s = enumerate->add_subcommand("stable");
    enumerate_s->add_option("--n", enum_n)->required();
    enumerate_s->add_option("--k", enum_k)->required();
    enumerate_s->add_flag("--linear", linear, "drop the wraparound pair");

    std::string ext_family = "u";
    int ext_n = 0, ext_k = 0;
    bool ext_exact = false;
    auto extremal_cmd = app.add_subcommand("extremal", "chromatic and independence numbers");
    extremal_cmd->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App *>> extremal_subs;
    for (std::string what : {"chi", "alpha", "hm"}) {
        auto sub = extremal_cmd->add_subcommand(what);
        sub->add_option("--n", ext_n)->required();
        sub->add_option("--k", ext_k)->required();
        if (what != "hm") {
            sub->add_option("--family", ext_family, "kneser | schrijver | u | utilde");
            sub->add_flag("--exact", ext_exact, "compute the exact value");
        }
        extremal_subs.emplace_back(what, sub);
    }

    std::string suite = "solvers";
    auto bench_cmd = app.add_subcommand("bench", "timing table as CSV");
    bench_cmd->add_option("--suite", suite, "acceptance | solvers");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_success;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    if (seed_opt->count())
        global.seed = seed;
    if (cap_opt->count())
        global.cap = cap;

    Runner run(out, err, detail::joined_command(args));
    run.global = global;
    try {
        if (solve_s->parsed())
            return solve_schrijver(run, schrijver);
        if (solve_u->parsed())
            return solve_uncovered(run, uncovered);
        if (solve_c->parsed())
            return solve_ct(run, ct_in, ct_method);
        if (split->parsed())
            return split4(run, split_instance);
        if (verify_u->parsed())
            return verify_uncovered(run, verify_instance, verify_solution);
        if (reduce_f->parsed())
            return reduce(run, "fisc-to-uncovered", reduce_in, reduce_out);
        if (reduce_c->parsed())
            return reduce(run, "ct-to-uncovered", reduce_in, reduce_out);
        if (enumerate_s->parsed())
            return enumerate_stable_sets(run, enum_n, enum_k, linear);
        for (auto & [what, sub] : extremal_subs)
            if (sub->parsed())
                return extremal(run, what, ext_family, ext_n, ext_k, ext_exact);
        if (bench_cmd->parsed())
            return bench(run, suite);
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    err << "error: no command\n";
    return exit_invalid;
}

} // namespace stabsets::cli
