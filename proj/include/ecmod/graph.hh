#ifndef ECMOD_GRAPH_HH
#define ECMOD_GRAPH_HH

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ecmod
{
    using Vertex = int;

    /// A colour name: a non-empty token over [a-z0-9_]. In 2-edge-coloured
    /// contexts only "r" (red) and "b" (blue) are allowed.
    class Colour
    {
    private:
        std::string _name;

    public:
        Colour() = default;
        explicit Colour(std::string name);

        static auto red() -> Colour;
        static auto blue() -> Colour;
        static auto is_valid_token(std::string_view token) -> bool;

        auto name() const -> const std::string & { return _name; }
        auto is_red() const -> bool { return _name == "r"; }
        auto is_blue() const -> bool { return _name == "b"; }

        /// r <-> b; only meaningful for 2-edge-coloured graphs.
        auto flipped() const -> Colour;

        auto operator<=>(const Colour &) const = default;
    };

    struct Edge
    {
        Vertex u;
        Vertex v;
        Colour colour;

        auto is_loop() const -> bool { return u == v; }
        auto other(Vertex w) const -> Vertex { return w == u ? v : u; }
        auto operator<=>(const Edge &) const = default;
    };

    /// Stable identity of an edge occurrence: endpoints, colour, and the index of
    /// this occurrence among identical records in input order.
    struct EdgeRef
    {
        Vertex u;
        Vertex v;
        Colour colour;
        std::size_t occurrence;

        auto operator<=>(const EdgeRef &) const = default;
    };

    /// Edge-coloured multigraph on vertices 0..order()-1. Loops and parallel
    /// edges (including same-colour duplicates) are kept. Edge endpoints are
    /// normalised so that u <= v.
    class ColouredGraph
    {
    private:
        int _order = 0;
        std::vector<Edge> _edges;

    public:
        ColouredGraph() = default;
        explicit ColouredGraph(int order);

        auto order() const -> int { return _order; }
        auto size() const -> std::size_t { return _edges.size(); }
        auto edges() const -> std::span<const Edge> { return _edges; }
        auto edge(std::size_t i) const -> const Edge & { return _edges.at(i); }

        auto add_vertex() -> Vertex;
        auto add_edge(Vertex u, Vertex v, Colour c) -> std::size_t;

        /// Recolours edge i in place (used by the switching primitives).
        auto recolour(std::size_t i, Colour c) -> void;

        /// Distinct colours appearing on edges, sorted.
        auto colours() const -> std::vector<Colour>;

        /// True iff every edge colour is r or b.
        auto is_two_edge_coloured() const -> bool;

        /// Edge indices incident with each vertex; a loop is listed once.
        auto incidence() const -> std::vector<std::vector<std::size_t>>;

        auto has_edge(Vertex u, Vertex v, const Colour & c) const -> bool;
    };

    /// Multiset equality of the edge records (and equal order).
    auto same_edges(const ColouredGraph & a, const ColouredGraph & b) -> bool;

    auto edge_ref(const ColouredGraph & g, std::size_t index) -> EdgeRef;
    auto find_edge(const ColouredGraph & g, const EdgeRef & ref) -> std::optional<std::size_t>;

    struct VertexDeletion
    {
        ColouredGraph graph;
        std::vector<Vertex> original; // new vertex -> old vertex
    };

    auto delete_vertices(const ColouredGraph & g, std::span<const Vertex> removed) -> VertexDeletion;
    auto delete_edges(const ColouredGraph & g, std::span<const std::size_t> removed) -> ColouredGraph;

    auto switch_at(const ColouredGraph & g, Vertex v) -> ColouredGraph;
    auto switch_set(const ColouredGraph & g, std::span<const Vertex> s) -> ColouredGraph;

    /// Exchanges two colour names on every edge.
    auto swap_colours(const ColouredGraph & g, const Colour & a, const Colour & b) -> ColouredGraph;

    /// Components of the underlying uncoloured graph, each sorted, ordered by
    /// smallest member.
    auto connected_components(const ColouredGraph & g) -> std::vector<std::vector<Vertex>>;

    auto is_bipartite(const ColouredGraph & g) -> bool;

    /// Shortest cycle of the underlying multigraph (loop = 1, parallel pair = 2).
    /// nullopt means infinite girth.
    auto girth(const ColouredGraph & g) -> std::optional<int>;

    auto distance(const ColouredGraph & g, Vertex from, Vertex to) -> std::optional<int>;
}

#endif
