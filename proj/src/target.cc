#include <ecmod/error.hh>
#include <ecmod/target.hh>

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

using std::optional;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace ecmod
{
    namespace
    {
        auto edge_set(const ColouredGraph & g) -> std::set<Edge>
        {
            return std::set<Edge>(g.edges().begin(), g.edges().end());
        }

        auto add_loops(ColouredGraph & g, Vertex v, string_view spec) -> void
        {
            if (spec == "-")
                return;
            if (spec == "r" || spec == "rb" || spec == "br")
                g.add_edge(v, v, Colour::red());
            if (spec == "b" || spec == "rb" || spec == "br")
                g.add_edge(v, v, Colour::blue());
        }

        auto valid_pair_spec(string_view s) -> bool
        {
            return s == "-" || s == "r" || s == "b" || s == "rb" || s == "br";
        }

        auto valid_loop_spec(string_view s) -> bool
        {
            return s == "-" || s == "r" || s == "b";
        }

        auto transformed(const ColouredGraph & g, bool swap_colours_flag, bool swap_vertices) -> ColouredGraph
        {
            ColouredGraph result(g.order());
            for (auto & e : g.edges()) {
                Vertex u = e.u, v = e.v;
                if (swap_vertices && g.order() == 2) {
                    u = 1 - u;
                    v = 1 - v;
                }
                Colour c = e.colour;
                if (swap_colours_flag && (c.is_red() || c.is_blue()))
                    c = c.flipped();
                result.add_edge(u, v, c);
            }
            return result;
        }

        auto graph_from_name(string_view token) -> ColouredGraph
        {
            auto fail = [&]() -> ArgumentError {
                return ArgumentError{ "malformed target name '" + string(token) + "'" };
            };

            if (token.size() < 4 || token[0] != 'H')
                throw fail();

            if (token[1] == '1') {
                if (token[2] != '_')
                    throw fail();
                auto loops = token.substr(3);
                if (! valid_pair_spec(loops))
                    throw fail();
                ColouredGraph g(1);
                add_loops(g, 0, loops);
                return g;
            }

            if (token[1] != '2')
                throw fail();
            auto underscore = token.find('_');
            auto comma = token.find(',');
            if (underscore == string_view::npos || comma == string_view::npos || comma < underscore)
                throw fail();
            auto alpha = token.substr(2, underscore - 2);
            auto beta = token.substr(underscore + 1, comma - underscore - 1);
            auto gamma = token.substr(comma + 1);
            if (! valid_pair_spec(alpha) || ! valid_loop_spec(beta) || ! valid_loop_spec(gamma))
                throw fail();

            ColouredGraph g(2);
            if (alpha == "r" || alpha == "rb" || alpha == "br")
                g.add_edge(0, 1, Colour::red());
            if (alpha == "b" || alpha == "rb" || alpha == "br")
                g.add_edge(0, 1, Colour::blue());
            add_loops(g, 0, beta);
            add_loops(g, 1, gamma);
            return g;
        }

        auto match_named_core(const ColouredGraph & g) -> optional<CoreMatch>
        {
            if (g.order() < 1 || g.order() > 2 || ! g.is_two_edge_coloured())
                return std::nullopt;

            static const auto references = [] {
                vector<std::pair<int, std::set<Edge>>> result;
                for (auto & name : named_core_names()) {
                    auto h = graph_from_name(name);
                    result.emplace_back(h.order(), edge_set(h));
                }
                return result;
            }();

            for (size_t i = 0; i < references.size(); ++i) {
                auto & [order, reference] = references[i];
                auto & name = named_core_names()[i];
                if (order != g.order())
                    continue;
                for (bool cs : { false, true })
                    for (bool vs : { false, true }) {
                        if (vs && g.order() == 1)
                            continue;
                        if (edge_set(transformed(g, cs, vs)) == reference)
                            return CoreMatch{ name, cs, vs };
                    }
            }
            return std::nullopt;
        }

        auto loop_spec(const ColouredGraph & g, Vertex v) -> string
        {
            bool r = g.has_edge(v, v, Colour::red()), b = g.has_edge(v, v, Colour::blue());
            return r && b ? "rb" : r ? "r" : b ? "b" : "-";
        }
    }

    Target::Target(const ColouredGraph & g) :
        _graph(g.order())
    {
        if (g.order() < 1)
            throw ArgumentError{ "a target needs at least one vertex" };

        std::set<Edge> seen;
        for (auto & e : g.edges())
            if (seen.insert(e).second)
                _graph.add_edge(e.u, e.v, e.colour);

        _match = match_named_core(_graph);
    }

    auto Target::canonical_name() const -> optional<string>
    {
        if (_match)
            return _match->name;
        return std::nullopt;
    }

    auto named_core_names() -> const vector<string> &
    {
        static const vector<string> names = {
            "H1_rb", "H1_b", "H1_-", "H2-_r,b",
            "H2b_-,-", "H2b_r,b", "H2b_r,-", "H2b_r,r",
            "H2rb_-,-", "H2rb_r,b", "H2rb_r,-", "H2rb_r,r"
        };
        return names;
    }

    auto parse_target_name(string_view token) -> Target
    {
        return Target{ graph_from_name(token) };
    }

    auto target_name(const Target & t) -> optional<string>
    {
        auto & g = t.graph();
        if (! g.is_two_edge_coloured())
            return std::nullopt;
        if (t.order() == 1)
            return "H1_" + loop_spec(g, 0);
        if (t.order() != 2)
            return std::nullopt;

        auto beta = loop_spec(g, 0), gamma = loop_spec(g, 1);
        if (beta == "rb" || gamma == "rb")
            return std::nullopt;
        bool r = g.has_edge(0, 1, Colour::red()), b = g.has_edge(0, 1, Colour::blue());
        string alpha = r && b ? "rb" : r ? "r" : b ? "b" : "-";
        return "H2" + alpha + "_" + beta + "," + gamma;
    }
}
