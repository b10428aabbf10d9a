#include "helpers.hh"
#include "oracles.hh"

#include <ecmod/error.hh>
#include <ecmod/textio.hh>

#include <doctest.h>

#include <random>

using namespace ecmod;
using testing::graph;

namespace
{
    auto parse_error_line(std::string_view text) -> std::string
    {
        try {
            parse_graph_file(text);
        }
        catch (const ParseError & e) {
            std::string m = e.what();
            return m.substr(0, m.find(':'));
        }
        return "no error";
    }
}

TEST_CASE("graph file parsing")
{
    auto f = parse_graph_file("# a path\ncolours r b\nvertices 3\n\nedge 0 1 r\nedge 2 1 b  # reversed\nedge 1 2 b\n");
    CHECK(f.colours == std::vector<Colour>{ Colour::red(), Colour::blue() });
    CHECK(f.graph.order() == 3);
    CHECK(f.graph.size() == 3);
    CHECK(f.graph.edge(1).u == 1);
    CHECK(f.graph.edge(1).v == 2);
    CHECK(same_edges(f.graph, graph(3, { { 0, 1, "r" }, { 1, 2, "b" }, { 1, 2, "b" } })));

    auto empty = parse_graph_file("colours g\nvertices 0\n");
    CHECK(empty.graph.order() == 0);
    CHECK(empty.colours.size() == 1);
}

TEST_CASE("graph file errors carry line numbers")
{
    CHECK(parse_error_line("colours r b\nvertices 2\nedge 0 2 r\n") == "line 3");
    CHECK(parse_error_line("colours r b\nvertices 2\nedge 0 1 g\n") == "line 3");
    CHECK(parse_error_line("colours r b\n\n\nvertices x\n") == "line 4");
    CHECK(parse_error_line("vertices 2\n") == "line 1");
    CHECK(parse_error_line("colours r b\nedge 0 1 r\n") == "line 2");
    CHECK(parse_error_line("colours r r\n") == "line 1");
    CHECK(parse_error_line("colours r b\nvertices 2\nvertices 2\n") == "line 3");
    CHECK(parse_error_line("colours r b\nvertices 2\nedge 0 1\n") == "line 3");
    CHECK(parse_error_line("colours r b\nvertices 2\nloop 0 r\n") == "line 3");
    CHECK(parse_error_line("colours R\n") == "line 1");
    CHECK(parse_error_line("colours r b\nvertices -1\n") == "line 2");
    CHECK(parse_error_line("") == "line 1");
}

TEST_CASE("graph file round trip")
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(rng, std::uniform_int_distribution<int>(0, 6)(rng), std::uniform_int_distribution<int>(0, 12)(rng), 0.2);
        auto text = write_graph_file(to_graph_file(g));
        auto back = parse_graph_file(text);
        CHECK(same_edges(back.graph, g));
        CHECK(write_graph_file(back) == text);
    }

    auto three = graph(2, { { 0, 1, "g" }, { 0, 0, "r" }, { 0, 1, "g" } });
    auto text = write_graph_file(to_graph_file(three));
    CHECK(text == "colours g r\nvertices 2\nedge 0 1 g\nedge 0 0 r\nedge 0 1 g\n");
    CHECK(write_graph_file(to_graph_file(ColouredGraph(1))) == "colours r b\nvertices 1\n");
}

TEST_CASE("source instances")
{
    auto s = parse_source_instance("vertices 4\nedge 0 1\nedge 2 3 # x\npart 0 1\npart 2 3\nbudget 2\n");
    CHECK(s.graph.n == 4);
    CHECK(s.graph.edges == std::vector<std::pair<int, int>>{ { 0, 1 }, { 2, 3 } });
    CHECK(s.parts == std::vector<std::vector<int>>{ { 0, 1 }, { 2, 3 } });
    CHECK(s.budget == 2);

    CHECK(parse_source_instance("vertices 2\n").budget == 0);
    CHECK_THROWS_AS(parse_source_instance("vertices 2\nedge 0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_source_instance("edge 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_source_instance("vertices 2\nbudget\n"), ParseError);
}

TEST_CASE("reduced instances parse back")
{
    auto r = gen_mis_switch(MisInstance{ SimpleGraph{ 2, { { 0, 1 } } }, { { 0 }, { 1 } } }, LoopKind::None, 3);
    auto text = write_reduced_instance(r);
    CHECK(text.starts_with("# problem: switch\n# target: H2rb_r,-\n# budget: 2\n# vertex 0: v0\n"));
    CHECK(text.find("edge 0 10 r # edge(0,1)\n") != std::string::npos);
    auto back = parse_graph_file(text);
    CHECK(same_edges(back.graph, r.instance));
}
