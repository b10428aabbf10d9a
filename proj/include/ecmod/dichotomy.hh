#ifndef ECMOD_DICHOTOMY_HH
#define ECMOD_DICHOTOMY_HH

#include <ecmod/graph.hh>
#include <ecmod/problem.hh>
#include <ecmod/target.hh>

#include <optional>
#include <string>
#include <vector>

namespace ecmod
{
    struct Core
    {
        Target core;
        std::vector<Vertex> embedding;  // core vertex -> target vertex
        std::vector<Vertex> retraction; // target vertex -> core vertex
    };

    /// Smallest induced subgraph that the target retracts to. Targets with
    /// more than four vertices raise SizeError. An order-2 core that is one of
    /// the named cores is oriented to match its name.
    auto compute_core(const Target & h) -> Core;

    enum class Classical
    {
        PTime,
        NPComplete,
        Unknown
    };

    enum class Parameterized
    {
        FPT,
        W1Hard,
        XPOnly,
        NotInXP,
        Unknown
    };

    auto to_string(Classical c) -> std::string;
    auto to_string(Parameterized p) -> std::string;

    struct Classification
    {
        ProblemKind problem;
        Target target;
        std::optional<std::string> core_name;
        Classical classical = Classical::Unknown;
        Parameterized parameterized = Parameterized::Unknown;
        std::string source;

        /// Vertex deletion only: verdict under the target's own colour set when
        /// it differs from the ambient one.
        std::optional<Classical> alternative_classical;
    };

    /// ambient_colours defaults to {r, b} for targets coloured within {r, b},
    /// and to the target's own colours otherwise.
    auto classify_vdel(const Target & h, const std::optional<std::vector<Colour>> & ambient_colours = std::nullopt) -> Classification;
    auto classify_edel(const Target & h) -> Classification;
    auto classify_switch(const Target & h) -> Classification;
    auto classify(ProblemKind problem, const Target & h) -> Classification;

    /// One-line record: "problem=... target=... classical=... parameterized=... source=...".
    auto to_record(const Classification & c) -> std::string;

    /// Monochromatic loopless complete graphs on at least three vertices and
    /// monochromatic odd cycles.
    auto is_known_hard_colouring_target(const Target & h) -> bool;
}

#endif
