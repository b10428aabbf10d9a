#ifndef ECMOD_TARGET_HH
#define ECMOD_TARGET_HH

#include <ecmod/graph.hh>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ecmod
{
    /// How a target was matched against one of the twelve named 2-edge-coloured
    /// cores of order at most two.
    struct CoreMatch
    {
        std::string name;           // e.g. "H2b_r,b"
        bool colours_swapped = false;
        bool vertices_swapped = false;
    };

    /// A fixed homomorphism target. Same-colour parallel edges are collapsed.
    class Target
    {
    private:
        ColouredGraph _graph;
        std::optional<CoreMatch> _match;

    public:
        explicit Target(const ColouredGraph & g);

        auto graph() const -> const ColouredGraph & { return _graph; }
        auto order() const -> int { return _graph.order(); }
        auto colours() const -> std::vector<Colour> { return _graph.colours(); }
        auto has_edge(Vertex a, Vertex b, const Colour & c) const -> bool { return _graph.has_edge(a, b, c); }

        /// Name of the matching named core (up to colour swap and vertex swap), if any.
        auto canonical_name() const -> std::optional<std::string>;
        auto core_match() const -> const std::optional<CoreMatch> & { return _match; }
    };

    /// The twelve named cores, in the order H1_rb, H1_b, H1_-, H2-_r,b,
    /// H2b_-,-, H2b_r,b, H2b_r,-, H2b_r,r, H2rb_-,-, H2rb_r,b, H2rb_r,-, H2rb_r,r.
    auto named_core_names() -> const std::vector<std::string> &;

    /// Parses "H1_<loops>" or "H2<alpha>_<beta>,<gamma>". "br" is accepted as a
    /// synonym of "rb".
    auto parse_target_name(std::string_view token) -> Target;

    /// Inverse of parse_target_name for targets expressible in the grammar.
    auto target_name(const Target & t) -> std::optional<std::string>;
}

#endif
