#ifndef ECMOD_HOMCHECK_HH
#define ECMOD_HOMCHECK_HH

#include <ecmod/graph.hh>
#include <ecmod/target.hh>
#include <ecmod/twosat.hh>

#include <optional>
#include <string>
#include <vector>

namespace ecmod
{
    struct Homomorphism
    {
        std::vector<Vertex> map;
    };

    auto is_homomorphism(const ColouredGraph & g, const Target & h, const std::vector<Vertex> & map) -> bool;

    /// Backtracking over all maps V(G) -> V(H). Works for targets of any order.
    auto hom_exists_bruteforce(const ColouredGraph & g, const Target & h) -> std::optional<Homomorphism>;

    enum class Encoding
    {
        Plain,
        VertexDeletion,
        EdgeGroups
    };

    /// Variables 0..n-1 are x_v for the vertices of g; target vertex 0 is false
    /// and vertex 1 is true. An order-1 target is encoded as its vertex (true)
    /// plus an isolated false vertex, which only edgeless vertices can use.
    struct HomFormula
    {
        TwoCnf formula;
        std::vector<std::size_t> clause_edge;
    };

    /// Plain follows the clause table. VertexDeletion rewrites the single-literal
    /// rows of non-loop edges so each clause mentions both endpoints.
    /// EdgeGroups puts each edge's clauses in one group, in edge order; a
    /// non-loop edge whose row is a single loop gets a fresh witness variable.
    /// Throws DomainError if h has more than two vertices.
    auto build_2sat(const ColouredGraph & g, const Target & h, Encoding encoding) -> HomFormula;

    auto hom_exists_2sat(const ColouredGraph & g, const Target & h) -> std::optional<Homomorphism>;

    /// Maps an assignment of the vertex variables back to target vertices.
    auto decode_assignment(const ColouredGraph & g, const Target & h, const Assignment & a) -> std::vector<Vertex>;

    enum class ObstructionKind
    {
        RbrImage,
        RbOddRPath,
        AllBlueOddCycle,
        OddBlueParityCycle
    };

    auto to_string(ObstructionKind k) -> std::string;

    /// Path kinds: edges[i] joins walk[i] and walk[i + 1]. Cycle kinds:
    /// edges[i] joins walk[i] and walk[(i + 1) % length], edges are distinct.
    struct Obstruction
    {
        ObstructionKind kind;
        std::vector<Vertex> walk;
        std::vector<std::size_t> edges;
    };

    auto validate_obstruction(const ColouredGraph & g, const Obstruction & o) -> bool;

    /// A blue edge whose ends both touch red edges.
    auto find_rbr_image(const ColouredGraph & g) -> std::optional<Obstruction>;

    auto find_odd_blue_parity_cycle(const ColouredGraph & g) -> std::optional<Obstruction>;
    auto find_all_blue_odd_cycle(const ColouredGraph & g) -> std::optional<Obstruction>;

    /// Red edges at two vertices on opposite sides of one blue component,
    /// joined by an odd blue path. Throws ContractError if g has a cycle with an
    /// odd number of blue edges.
    auto find_rb_odd_r_path(const ColouredGraph & g) -> std::optional<Obstruction>;

    /// Smallest switch set making every edge the given colour, or empty
    /// optional if no switch set does.
    auto min_switch_to_monochromatic(const ColouredGraph & g, const Colour & colour) -> std::optional<std::vector<Vertex>>;
}

#endif
