#pragma once

// JSON files for uncovered, FISC and CT instances.
//   uncovered: {"n": int, "k": int, "sets": [[int, ...], ...]}
//   FISC:      {"n": int, "parts": [[int, ...], ...]}
//   CT:        {"k": int, "cycle": [int, ...], "triangles": [[int, ...], ...]}

#include <stabsets/error.hpp>
#include <stabsets/reductions.hpp>
#include <stabsets/uncovered.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <istream>
#include <string>
#include <vector>

namespace stabsets {

using Json = nlohmann::json;

namespace detail {
    inline Json parse_json(std::istream & in)
    {
        try {
            return Json::parse(in);
        }
        catch (const Json::exception & e) {
            fail(ErrorKind::invalid_input, std::string("malformed JSON: ") + e.what());
        }
    }

    inline Json read_json_file(const std::string & path)
    {
        std::ifstream in(path);
        require(bool(in), ErrorKind::invalid_input, "cannot open " + path);
        return parse_json(in);
    }

    template <class T>
    T field(const Json & j, const char * key)
    {
        require(j.is_object() && j.contains(key), ErrorKind::invalid_input, std::string("missing field \"") + key + "\"");
        try {
            return j.at(key).get<T>();
        }
        catch (const Json::exception &) {
            fail(ErrorKind::invalid_input, std::string("field \"") + key + "\" has the wrong type");
        }
    }

    inline std::vector<ElementSet> to_sets(int n, const std::vector<std::vector<int>> & lists)
    {
        std::vector<ElementSet> sets;
        for (auto & l : lists)
            sets.emplace_back(n, l);
        return sets;
    }

    inline Json from_sets(const std::vector<ElementSet> & sets)
    {
        Json out = Json::array();
        for (auto & s : sets)
            out.push_back(std::vector<int>(s.elements().begin(), s.elements().end()));
        return out;
    }
}

inline RawUncoveredInstance uncovered_from_json(const Json & j)
{
    return {detail::field<int>(j, "n"), detail::field<int>(j, "k"),
        detail::field<std::vector<std::vector<int>>>(j, "sets")};
}

inline Json to_json(const UncoveredInstance & inst)
{
    return {{"n", inst.n()}, {"k", inst.k()}, {"sets", detail::from_sets(inst.sets())}};
}

inline Json to_json(const RawUncoveredInstance & raw)
{
    return {{"n", raw.n}, {"k", raw.k}, {"sets", raw.sets}};
}

inline RawUncoveredInstance load_uncovered(const std::string & path)
{
    return uncovered_from_json(detail::read_json_file(path));
}

inline FiscInstance fisc_from_json(const Json & j)
{
    int n = detail::field<int>(j, "n");
    require(n >= 1, ErrorKind::invalid_input, "n must be positive");
    return FiscInstance(n, detail::to_sets(n, detail::field<std::vector<std::vector<int>>>(j, "parts")));
}

inline Json to_json(const FiscInstance & f)
{
    return {{"n", f.n()}, {"parts", detail::from_sets(f.parts())}};
}

inline FiscInstance load_fisc(const std::string & path)
{
    return fisc_from_json(detail::read_json_file(path));
}

inline CtInstance ct_from_json(const Json & j)
{
    int k = detail::field<int>(j, "k");
    require(k >= 1, ErrorKind::invalid_input, "k must be positive");
    return CtInstance(k, detail::field<std::vector<int>>(j, "cycle"),
        detail::to_sets(3 * k, detail::field<std::vector<std::vector<int>>>(j, "triangles")));
}

inline Json to_json(const CtInstance & c)
{
    return {{"k", c.k()}, {"cycle", c.cycle()}, {"triangles", detail::from_sets(c.triangles())}};
}

inline CtInstance load_ct(const std::string & path)
{
    return ct_from_json(detail::read_json_file(path));
}

inline void save_json(const Json & j, const std::string & path)
{
    std::ofstream out(path);
    require(bool(out), ErrorKind::invalid_input, "cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace stabsets
