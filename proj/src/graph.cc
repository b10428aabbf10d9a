#include <ecmod/error.hh>
#include <ecmod/graph.hh>

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace ecmod
{
    Colour::Colour(string name) :
        _name(std::move(name))
    {
        if (! is_valid_token(_name))
            throw ArgumentError{ "invalid colour name '" + _name + "'" };
    }

    auto Colour::red() -> Colour
    {
        return Colour{ "r" };
    }

    auto Colour::blue() -> Colour
    {
        return Colour{ "b" };
    }

    auto Colour::is_valid_token(std::string_view token) -> bool
    {
        if (token.empty())
            return false;
        return std::all_of(token.begin(), token.end(), [](char c) {
            return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
        });
    }

    auto Colour::flipped() const -> Colour
    {
        if (is_red())
            return blue();
        if (is_blue())
            return red();
        throw DomainError{ "colour '" + _name + "' has no switching partner" };
    }

    ColouredGraph::ColouredGraph(int order) :
        _order(order)
    {
        if (order < 0)
            throw ArgumentError{ "negative vertex count" };
    }

    auto ColouredGraph::add_vertex() -> Vertex
    {
        return _order++;
    }

    auto ColouredGraph::add_edge(Vertex u, Vertex v, Colour c) -> size_t
    {
        if (u < 0 || v < 0 || u >= _order || v >= _order)
            throw ArgumentError{ "edge endpoint out of range: " + to_string(u) + " " + to_string(v) + " with " + to_string(_order) + " vertices" };
        if (c.name().empty())
            throw ArgumentError{ "edge without colour" };
        if (u > v)
            std::swap(u, v);
        _edges.push_back(Edge{ u, v, std::move(c) });
        return _edges.size() - 1;
    }

    auto ColouredGraph::recolour(size_t i, Colour c) -> void
    {
        _edges.at(i).colour = std::move(c);
    }

    auto ColouredGraph::colours() const -> vector<Colour>
    {
        vector<Colour> result;
        for (auto & e : _edges)
            if (std::find(result.begin(), result.end(), e.colour) == result.end())
                result.push_back(e.colour);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto ColouredGraph::is_two_edge_coloured() const -> bool
    {
        return std::all_of(_edges.begin(), _edges.end(), [](const Edge & e) { return e.colour.is_red() || e.colour.is_blue(); });
    }

    auto ColouredGraph::incidence() const -> vector<vector<size_t>>
    {
        vector<vector<size_t>> result(_order);
        for (size_t i = 0; i < _edges.size(); ++i) {
            result[_edges[i].u].push_back(i);
            if (! _edges[i].is_loop())
                result[_edges[i].v].push_back(i);
        }
        return result;
    }

    auto ColouredGraph::has_edge(Vertex u, Vertex v, const Colour & c) const -> bool
    {
        if (u > v)
            std::swap(u, v);
        return std::any_of(_edges.begin(), _edges.end(), [&](const Edge & e) { return e.u == u && e.v == v && e.colour == c; });
    }

    auto same_edges(const ColouredGraph & a, const ColouredGraph & b) -> bool
    {
        if (a.order() != b.order() || a.size() != b.size())
            return false;
        vector<Edge> x(a.edges().begin(), a.edges().end()), y(b.edges().begin(), b.edges().end());
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
    }

    auto edge_ref(const ColouredGraph & g, size_t index) -> EdgeRef
    {
        auto & e = g.edge(index);
        size_t occurrence = 0;
        for (size_t i = 0; i < index; ++i)
            if (g.edge(i) == e)
                ++occurrence;
        return EdgeRef{ e.u, e.v, e.colour, occurrence };
    }

    auto find_edge(const ColouredGraph & g, const EdgeRef & ref) -> optional<size_t>
    {
        Vertex u = std::min(ref.u, ref.v), v = std::max(ref.u, ref.v);
        size_t seen = 0;
        for (size_t i = 0; i < g.size(); ++i) {
            auto & e = g.edge(i);
            if (e.u == u && e.v == v && e.colour == ref.colour) {
                if (seen == ref.occurrence)
                    return i;
                ++seen;
            }
        }
        return std::nullopt;
    }

    auto delete_vertices(const ColouredGraph & g, span<const Vertex> removed) -> VertexDeletion
    {
        vector<bool> gone(g.order(), false);
        for (auto v : removed) {
            if (v < 0 || v >= g.order())
                throw ArgumentError{ "cannot delete vertex " + to_string(v) };
            gone[v] = true;
        }

        vector<Vertex> renumber(g.order(), -1);
        VertexDeletion result;
        for (Vertex v = 0; v < g.order(); ++v)
            if (! gone[v]) {
                renumber[v] = static_cast<Vertex>(result.original.size());
                result.original.push_back(v);
            }

        result.graph = ColouredGraph(static_cast<int>(result.original.size()));
        for (auto & e : g.edges())
            if (! gone[e.u] && ! gone[e.v])
                result.graph.add_edge(renumber[e.u], renumber[e.v], e.colour);
        return result;
    }

    auto delete_edges(const ColouredGraph & g, span<const size_t> removed) -> ColouredGraph
    {
        vector<bool> gone(g.size(), false);
        for (auto i : removed) {
            if (i >= g.size())
                throw ArgumentError{ "cannot delete edge " + to_string(i) };
            gone[i] = true;
        }

        ColouredGraph result(g.order());
        for (size_t i = 0; i < g.size(); ++i)
            if (! gone[i])
                result.add_edge(g.edge(i).u, g.edge(i).v, g.edge(i).colour);
        return result;
    }

    namespace
    {
        auto require_two_coloured(const ColouredGraph & g) -> void
        {
            if (! g.is_two_edge_coloured())
                throw DomainError{ "switching is only defined on graphs coloured with r and b" };
        }
    }

    auto switch_at(const ColouredGraph & g, Vertex v) -> ColouredGraph
    {
        Vertex one[1] = { v };
        return switch_set(g, one);
    }

    auto switch_set(const ColouredGraph & g, span<const Vertex> s) -> ColouredGraph
    {
        require_two_coloured(g);
        vector<bool> in(g.order(), false);
        for (auto v : s) {
            if (v < 0 || v >= g.order())
                throw ArgumentError{ "cannot switch at vertex " + to_string(v) };
            in[v] = true;
        }

        ColouredGraph result = g;
        for (size_t i = 0; i < g.size(); ++i) {
            auto & e = g.edge(i);
            if (in[e.u] != in[e.v])
                result.recolour(i, e.colour.flipped());
        }
        return result;
    }

    auto swap_colours(const ColouredGraph & g, const Colour & a, const Colour & b) -> ColouredGraph
    {
        ColouredGraph result = g;
        for (size_t i = 0; i < g.size(); ++i) {
            if (g.edge(i).colour == a)
                result.recolour(i, b);
            else if (g.edge(i).colour == b)
                result.recolour(i, a);
        }
        return result;
    }

    auto connected_components(const ColouredGraph & g) -> vector<vector<Vertex>>
    {
        auto inc = g.incidence();
        vector<int> comp(g.order(), -1);
        vector<vector<Vertex>> result;
        for (Vertex root = 0; root < g.order(); ++root) {
            if (comp[root] != -1)
                continue;
            int id = static_cast<int>(result.size());
            result.emplace_back();
            vector<Vertex> stack{ root };
            comp[root] = id;
            while (! stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                result.back().push_back(x);
                for (auto ei : inc[x]) {
                    Vertex y = g.edge(ei).other(x);
                    if (comp[y] == -1) {
                        comp[y] = id;
                        stack.push_back(y);
                    }
                }
            }
            std::sort(result.back().begin(), result.back().end());
        }
        return result;
    }

    auto is_bipartite(const ColouredGraph & g) -> bool
    {
        auto inc = g.incidence();
        vector<int> side(g.order(), -1);
        for (Vertex root = 0; root < g.order(); ++root) {
            if (side[root] != -1)
                continue;
            side[root] = 0;
            vector<Vertex> stack{ root };
            while (! stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (auto ei : inc[x]) {
                    Vertex y = g.edge(ei).other(x);
                    if (side[y] == -1) {
                        side[y] = 1 - side[x];
                        stack.push_back(y);
                    }
                    else if (side[y] == side[x])
                        return false;
                }
            }
        }
        return true;
    }

    auto girth(const ColouredGraph & g) -> optional<int>
    {
        // BFS from every root, remembering the tree edge used to reach each
        // vertex so that parallel edges close 2-cycles.
        auto inc = g.incidence();
        int best = std::numeric_limits<int>::max();
        for (auto & e : g.edges())
            if (e.is_loop())
                return 1;

        vector<int> dist(g.order());
        vector<size_t> via(g.order());
        constexpr size_t none = std::numeric_limits<size_t>::max();
        for (Vertex root = 0; root < g.order(); ++root) {
            std::fill(dist.begin(), dist.end(), -1);
            std::fill(via.begin(), via.end(), none);
            std::deque<Vertex> queue{ root };
            dist[root] = 0;
            while (! queue.empty()) {
                Vertex x = queue.front();
                queue.pop_front();
                if (2 * dist[x] + 1 >= best)
                    break;
                for (auto ei : inc[x]) {
                    if (ei == via[x])
                        continue;
                    Vertex y = g.edge(ei).other(x);
                    if (dist[y] == -1) {
                        dist[y] = dist[x] + 1;
                        via[y] = ei;
                        queue.push_back(y);
                    }
                    else
                        best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        if (best == std::numeric_limits<int>::max())
            return std::nullopt;
        return best;
    }

    auto distance(const ColouredGraph & g, Vertex from, Vertex to) -> optional<int>
    {
        if (from < 0 || to < 0 || from >= g.order() || to >= g.order())
            throw ArgumentError{ "distance: vertex out of range" };
        auto inc = g.incidence();
        vector<int> dist(g.order(), -1);
        std::deque<Vertex> queue{ from };
        dist[from] = 0;
        while (! queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            if (x == to)
                return dist[x];
            for (auto ei : inc[x]) {
                Vertex y = g.edge(ei).other(x);
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        return std::nullopt;
    }
}
