#ifndef ECMOD_GADGETS_HH
#define ECMOD_GADGETS_HH

#include <ecmod/graph.hh>
#include <ecmod/problem.hh>
#include <ecmod/target.hh>

#include <string>
#include <utility>
#include <vector>

namespace ecmod
{
    /// Uncoloured simple graph on vertices 0..n-1.
    struct SimpleGraph
    {
        int n = 0;
        std::vector<std::pair<int, int>> edges;

        /// Throws ArgumentError on loops, parallel edges or bad endpoints.
        auto validate() const -> void;
    };

    struct VcInstance
    {
        SimpleGraph graph;
        int k = 0;
    };

    struct MisInstance
    {
        SimpleGraph graph;
        std::vector<std::vector<int>> parts;

        /// Parts must be non-empty and partition the vertex set.
        auto validate() const -> void;
    };

    struct ReducedInstance
    {
        ColouredGraph instance;
        ProblemKind problem = ProblemKind::VertexDeletion;
        Target target{ ColouredGraph(1) };
        int budget = 0;

        /// Per output vertex and edge, where it came from, e.g. "v3", "v3'",
        /// "part1.cycle4" or "edge(0,2).x".
        std::vector<std::string> vertex_label;
        std::vector<std::string> edge_label;

        /// Per output vertex, the source vertex it stands for, or -1.
        std::vector<int> source_vertex;
    };

    /// Blue copy of G with a red pendant vv' at every vertex. Edge deletion
    /// to H2b_r,b at budget k.
    auto gen_vc_edel_h2b_rb(const VcInstance & vc) -> ReducedInstance;

    /// Red copy of G, blue pendants vv', and per edge uv new vertices x, y, z
    /// with u'x, v'x, yz red and xy, xz blue. Edge deletion to H2rb_r,b.
    auto gen_vc_edel_h2rb_rb(const VcInstance & vc) -> ReducedInstance;

    /// Red copy of G, blue pendant vv' with a red loop at v'. Switching to
    /// H2b_r,- at budget k.
    auto gen_vc_switch_h2b_rdash(const VcInstance & vc) -> ReducedInstance;

    /// The second loop of the target H2rb_r,x.
    enum class LoopKind
    {
        Red,
        Blue,
        None
    };

    auto to_string(LoopKind x) -> std::string;

    /// Accepts "r", "b" and "-".
    auto parse_loop_kind(const std::string & s) -> LoopKind;

    auto mis_target(LoopKind x) -> Target;

    struct PartitionGadget
    {
        ColouredGraph graph;
        std::vector<Vertex> special;
        std::vector<std::string> vertex_label;
    };

    struct EdgeGadget
    {
        ColouredGraph graph;
        Vertex u = 0;
        Vertex v = 0;
        std::vector<std::string> vertex_label;
    };

    /// Throws ArgumentError if q < 3 or part_size < 1.
    auto partition_gadget(LoopKind x, int q, int part_size) -> PartitionGadget;

    /// Throws ArgumentError if q < 3.
    auto edge_gadget(LoopKind x, int q) -> EdgeGadget;

    /// Source vertices keep their numbers; gadget vertices follow, partition
    /// gadgets first, then edge gadgets in edge order. Switching to H2rb_r,x
    /// at budget equal to the number of parts.
    auto gen_mis_switch(const MisInstance & mis, LoopKind x, int q) -> ReducedInstance;

    struct PropertyResult
    {
        std::string name;
        bool passed = false;
        std::string witness;
    };

    struct GadgetReport
    {
        LoopKind x = LoopKind::Red;
        int q = 0;
        int part_size = 0;
        std::vector<PropertyResult> properties;

        auto all_passed() const -> bool;
    };

    /// Exhaustive checks of P1-P3, E1-E4 and SP on the gadgets for (x, q,
    /// part_size). SP is checked on a triangle of edge gadgets between partition
    /// gadgets on three parts, over every valid switch set of specials. Throws
    /// ArgumentError if q < 3 or part_size < 1, SizeError if q > 6 or
    /// part_size > 4.
    auto verify_gadget_properties(LoopKind x, int q, int part_size) -> GadgetReport;
}

#endif
