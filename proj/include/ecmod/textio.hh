#ifndef ECMOD_TEXTIO_HH
#define ECMOD_TEXTIO_HH

#include <ecmod/gadgets.hh>
#include <ecmod/graph.hh>

#include <string>
#include <string_view>
#include <vector>

namespace ecmod
{
    /// A graph file:
    ///
    ///     colours r b
    ///     vertices 3
    ///     edge 0 1 r
    ///     edge 1 1 b
    ///
    /// Blank lines and anything after '#' are ignored. The colours and
    /// vertices lines come first, once each; edge lines may repeat.
    struct GraphFile
    {
        std::vector<Colour> colours;
        ColouredGraph graph;
    };

    /// Throws ParseError with a "line N: " prefix.
    auto parse_graph_file(std::string_view text) -> GraphFile;

    /// Colours of g in sorted order, defaulting to "r b" for an edgeless graph.
    auto to_graph_file(const ColouredGraph & g) -> GraphFile;

    /// Canonical text; parse_graph_file(write_graph_file(f)) reproduces f.
    auto write_graph_file(const GraphFile & f) -> std::string;

    /// An uncoloured source instance for the reductions:
    ///
    ///     vertices 4
    ///     edge 0 1
    ///     part 0 1
    ///     part 2 3
    ///     budget 2
    ///
    /// Parts and budget are optional.
    struct SourceInstance
    {
        SimpleGraph graph;
        std::vector<std::vector<int>> parts;
        int budget = 0;
    };

    auto parse_source_instance(std::string_view text) -> SourceInstance;

    /// The reduced instance as a graph file, preceded by "# key: value"
    /// comments for problem, target and budget, with one comment per vertex
    /// and edge naming its origin.
    auto write_reduced_instance(const ReducedInstance & r) -> std::string;
}

#endif
