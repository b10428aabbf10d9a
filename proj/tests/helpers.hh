#ifndef ECMOD_TESTS_HELPERS_HH
#define ECMOD_TESTS_HELPERS_HH

#include <ecmod/graph.hh>
#include <ecmod/target.hh>

#include <initializer_list>
#include <string>
#include <tuple>

namespace testing
{
    /// Builds a graph from (u, v, colour) triples.
    inline auto graph(int n, std::initializer_list<std::tuple<int, int, const char *>> edges) -> ecmod::ColouredGraph
    {
        ecmod::ColouredGraph g(n);
        for (auto & [u, v, c] : edges)
            g.add_edge(u, v, ecmod::Colour{ c });
        return g;
    }

    inline auto target(const std::string & name) -> ecmod::Target
    {
        return ecmod::parse_target_name(name);
    }

    /// a - b - c - d with colours r, b, r.
    inline auto rbr_path() -> ecmod::ColouredGraph
    {
        return graph(4, { { 0, 1, "r" }, { 1, 2, "b" }, { 2, 3, "r" } });
    }
}

#endif
