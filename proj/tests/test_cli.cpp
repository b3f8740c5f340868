#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace stabsets;
using stabsets::cli::run_cli;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string & name) { return std::string(STABSETS_TEST_DATA) + "/" + name; }

std::vector<std::string> lines(const std::string & text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::string field(const std::string & text, const std::string & key)
{
    for (auto & line : lines(text))
        if (line.starts_with(key + ": "))
            return line.substr(key.size() + 2);
    return {};
}

std::filesystem::path temp(const std::string & name) { return std::filesystem::temp_directory_path() / name; }

}

TEST(Cli, EnumerateStable)
{
    auto r = run({"enumerate", "stable", "--n", "6", "--k", "2"});
    EXPECT_EQ(r.code, 0);
    auto l = lines(r.out);
    ASSERT_EQ(l.size(), 9u);
    EXPECT_EQ(l.front(), "1,3");
    EXPECT_EQ(l.back(), "4,6");
    EXPECT_EQ(lines(run({"enumerate", "stable", "--n", "6", "--k", "2", "--linear"}).out).size(), 10u);

    auto j = Json::parse(run({"--json", "enumerate", "stable", "--n", "7", "--k", "3"}).out);
    EXPECT_EQ(j["count"], 7);
    EXPECT_EQ(run({"enumerate", "stable", "--n", "3", "--k", "2"}).code, 2);
}

TEST(Cli, Extremal)
{
    auto chi = run({"extremal", "chi", "--family", "u", "--n", "9", "--k", "2", "--exact"});
    EXPECT_EQ(chi.code, 0);
    EXPECT_EQ(chi.out, "bounds 5..5 exact 5\n");
    EXPECT_EQ(run({"extremal", "chi", "--family", "u", "--n", "11", "--k", "2"}).out, "bounds 5..6\n");
    EXPECT_EQ(run({"extremal", "alpha", "--family", "u", "--n", "8", "--k", "3", "--exact"}).out,
        "formula 15 exact 15\n");
    EXPECT_EQ(run({"extremal", "hm", "--n", "7", "--k", "3"}).out, "bound 13 family 13 valid\n");
    EXPECT_EQ(run({"extremal", "chi", "--family", "petersen", "--n", "9", "--k", "2"}).code, 2);
}

TEST(Cli, VerifyUncovered)
{
    auto ok = run({"verify", "uncovered", "--instance", data("u.json"), "--solution", "1,3"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(field(ok.out, "valid"), "true");
    auto bad = run({"verify", "uncovered", "--instance", data("u.json"), "--solution", "1,2"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(field(bad.out, "valid"), "false");
    EXPECT_EQ(run({"verify", "uncovered", "--instance", data("u.json"), "--solution", "1,9"}).code, 2);
}

TEST(Cli, SolveUncoveredMethods)
{
    auto brute = run({"solve", "uncovered", "--instance", data("u.json"), "--method", "brute"});
    EXPECT_EQ(brute.code, 0);
    EXPECT_EQ(field(brute.out, "valid"), "true");
    auto s = ElementSet::parse(6, field(brute.out, "solution"));
    EXPECT_TRUE(verify_uncovered_solution(RawUncoveredInstance{6, 2, {{1, 2}, {3, 4}}}, s));

    auto randomized = run({"--seed", "3", "solve", "uncovered", "--instance", data("u.json"), "--method",
        "randomized", "--retries", "50"});
    EXPECT_EQ(randomized.code, 0);
    EXPECT_EQ(field(randomized.out, "seed"), "3");

    auto inline_seed = run({"solve", "uncovered", "--instance", data("u.json"), "--method", "randomized:3",
        "--retries", "50"});
    EXPECT_EQ(field(inline_seed.out, "solution"), field(randomized.out, "solution"));

    auto unseeded = run({"solve", "uncovered", "--instance", data("u.json"), "--method", "randomized"});
    EXPECT_EQ(unseeded.code, 2);
    EXPECT_NE(unseeded.err.find("seed"), std::string::npos);

    EXPECT_EQ(run({"solve", "uncovered", "--instance", data("u.json"), "--method", "derandomized"}).code, 2);
    EXPECT_EQ(run({"solve", "uncovered", "--instance", data("u.json"), "--method", "magic"}).code, 2);
}

TEST(Cli, RandomizedFailureIsNoResult)
{
    // 2k/n = 1 keeps every element, so every draw has consecutive pairs only
    auto path = temp("stabsets_cli_tight.json");
    save_json(Json{{"n", 4}, {"k", 2}, {"sets", Json::array()}}, path.string());
    auto r = run({"solve", "uncovered", "--instance", path.string(), "--method", "randomized:1", "--retries", "3"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(field(r.out, "valid"), "false");
    std::filesystem::remove(path);
}

TEST(Cli, SolveUncoveredNormalizesSingletons)
{
    auto r = run({"--json", "solve", "uncovered", "--instance", data("u_singleton.json"), "--method", "brute"});
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["normalized_n"], 7);
    auto s = ElementSet::parse(8, j["solution"].get<std::string>());
    EXPECT_FALSE(s.contains(3));
    EXPECT_TRUE(verify_uncovered_solution(load_uncovered(data("u_singleton.json")), s));
}

TEST(Cli, InvalidInputs)
{
    EXPECT_EQ(run({"solve", "uncovered", "--instance", data("u_invalid.json")}).code, 2);
    EXPECT_EQ(run({"solve", "uncovered", "--instance", data("bad.json")}).code, 2);
    EXPECT_EQ(run({"solve", "uncovered", "--instance", data("missing.json")}).code, 2);
    EXPECT_EQ(run({"solve", "uncovered"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, JsonReportRoundTrips)
{
    auto raw = load_uncovered(data("u.json"));
    for (std::string method : {"brute", "randomized:5"}) {
        auto r = run({"--json", "solve", "uncovered", "--instance", data("u.json"), "--method", method, "--retries", "50"});
        ASSERT_EQ(r.code, 0);
        auto j = Json::parse(r.out);
        auto s = ElementSet::parse(raw.n, j["solution"].get<std::string>());
        EXPECT_EQ(j["valid"].get<bool>(), verify_uncovered_solution(raw, s));
        EXPECT_TRUE(j["queries"].is_null());
        EXPECT_EQ(j["digest"].get<std::string>().size(), 16u);
    }
    auto verify = Json::parse(run({"--json", "verify", "uncovered", "--instance", data("u.json"), "--solution", "2,5"}).out);
    EXPECT_EQ(verify["valid"].get<bool>(), verify_uncovered_solution(raw, ElementSet(6, {2, 5})));
}

TEST(Cli, SolveSchrijver)
{
    auto file = run({"solve", "schrijver", "--coloring", data("s62.coloring")});
    EXPECT_EQ(file.code, 0);
    EXPECT_EQ(field(file.out, "valid"), "true");
    EXPECT_EQ(field(file.out, "queries"), "9");

    auto interval = run({"--json", "solve", "schrijver", "--n", "20", "--k", "2", "--m", "7", "--coloring",
        "rule:random,4", "--method", "interval:2"});
    ASSERT_EQ(interval.code, 0);
    auto j = Json::parse(interval.out);
    EXPECT_TRUE(j["valid"].get<bool>());
    EXPECT_LE(j["queries"].get<int>(), 5 * 5);

    auto lift = run({"solve", "schrijver", "--n", "20", "--k", "2", "--m", "7", "--coloring", "rule:constant",
        "--method", "lift4k"});
    EXPECT_EQ(lift.code, 0);
    EXPECT_EQ(field(lift.out, "branch"), "simulation");

    auto kneser = run({"solve", "schrijver", "--n", "7", "--k", "2", "--m", "4", "--family", "kneser",
        "--coloring", "rule:min-element-capped"});
    EXPECT_EQ(kneser.code, 0);

    EXPECT_EQ(run({"solve", "schrijver", "--n", "8", "--k", "2", "--m", "5", "--coloring", "rule:random"}).code, 2);
    EXPECT_EQ(run({"solve", "schrijver", "--n", "8", "--k", "2", "--m", "4", "--coloring", "rule:proper-lovasz"}).code, 2);
    EXPECT_EQ(run({"solve", "schrijver", "--n", "8", "--k", "2", "--m", "4", "--coloring", "rule:constant",
                  "--method", "interval"})
                  .code,
        2);
    EXPECT_EQ(run({"solve", "schrijver", "--n", "7", "--coloring", data("s62.coloring")}).code, 2);
}

TEST(Cli, Split4)
{
    auto r = run({"--json", "split4", "--instance", data("split.json")});
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_TRUE(j["valid"].get<bool>());
    ASSERT_EQ(j["solution"].size(), 4u);
    std::vector<ElementSet> parts{ElementSet(8, {1, 2, 3, 4}), ElementSet(8, {5, 6, 7, 8})};
    std::array<ElementSet, 4> classes;
    for (int i = 0; i < 4; ++i)
        classes[i] = ElementSet::parse(8, j["solution"][i].get<std::string>());
    EXPECT_TRUE(verify_four_split(2, parts, classes));
    EXPECT_EQ(run({"split4", "--instance", data("u.json")}).code, 2);
}

TEST(Cli, ReduceAndSolveCt)
{
    auto fisc_out = temp("stabsets_cli_fisc_out.json");
    auto r = run({"reduce", "fisc-to-uncovered", "--in", data("fisc.json"), "--out", fisc_out.string()});
    EXPECT_EQ(r.code, 0);
    auto target = load_uncovered(fisc_out.string());
    EXPECT_EQ(target.n, 6);
    EXPECT_EQ(target.k, 2);
    EXPECT_EQ(target.sets, (std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}}));
    std::filesystem::remove(fisc_out);

    auto ct_out = temp("stabsets_cli_ct_out.json");
    EXPECT_EQ(run({"reduce", "ct-to-uncovered", "--in", data("ct.json"), "--out", ct_out.string()}).code, 0);
    auto j = detail::read_json_file(ct_out.string());
    EXPECT_EQ(j["original_labels"], Json::parse("[2,4,6,1,3,5]"));
    EXPECT_EQ(j["sets"], Json::parse("[[1,3,5],[2,4,6]]"));
    std::filesystem::remove(ct_out);

    auto solved = run({"solve", "ct", "--in", data("ct.json"), "--method", "via-uncovered:brute"});
    EXPECT_EQ(solved.code, 0);
    auto ct = load_ct(data("ct.json"));
    EXPECT_TRUE(verify_ct_solution(ct, ElementSet::parse(6, field(solved.out, "solution"))));

    auto derandomized = run({"solve", "ct", "--in", data("ct.json"), "--method", "via-uncovered:derandomized"});
    EXPECT_EQ(derandomized.code, 2);
    EXPECT_NE(derandomized.err.find("slack"), std::string::npos);
    EXPECT_EQ(run({"reduce", "ct-to-uncovered", "--in", data("fisc.json"), "--out", ct_out.string()}).code, 2);
}

TEST(Cli, BenchCsvHeader)
{
    auto r = run({"bench", "--suite", "solvers"});
    ASSERT_EQ(r.code, 0);
    auto l = lines(r.out);
    ASSERT_GT(l.size(), 1u);
    EXPECT_EQ(l.front(), "command,n,k,l_or_m,queries,millis");
    for (std::size_t i = 1; i < l.size(); ++i)
        EXPECT_EQ(std::count(l[i].begin(), l[i].end(), ','), 5);
    EXPECT_EQ(run({"bench", "--suite", "nightly"}).code, 2);
}
