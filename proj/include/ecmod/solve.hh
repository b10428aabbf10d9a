#ifndef ECMOD_SOLVE_HH
#define ECMOD_SOLVE_HH

#include <ecmod/graph.hh>
#include <ecmod/homcheck.hh>
#include <ecmod/problem.hh>
#include <ecmod/target.hh>

#include <optional>
#include <string>
#include <vector>

namespace ecmod
{
    struct Solution
    {
        ProblemKind problem = ProblemKind::VertexDeletion;
        bool answer = false;

        /// Deleted vertices (vertex deletion) or switched vertices (switching).
        std::vector<Vertex> vertices;

        /// Indices into the input graph's edge list (edge deletion).
        std::vector<std::size_t> edges;

        /// Indexed by input vertex; deleted vertices map to -1.
        std::optional<Homomorphism> homomorphism;

        int budget_used = 0;
        std::string method;
        bool fell_back_to_xp = false;
    };

    enum class XpHomTest
    {
        Auto,
        BruteForce,
        TwoSat
    };

    struct XpOptions
    {
        XpHomTest hom_test = XpHomTest::Auto;

        /// Branch only on elements that touch an unsatisfiable 2-SAT core and
        /// build the lex-least minimum set greedily. Needs order <= 2.
        bool prune_with_core = false;

        /// Enumerate sets of exactly k elements instead of at most k.
        bool exact_size = false;
    };

    struct SolveOptions
    {
        bool strict_exact_k = false;
        bool force_xp = false;
    };

    /// Tries all sets of at most k vertices, edges or switched vertices in
    /// order of size, then lexicographically. The first hit is returned, so
    /// yes-certificates are minimum and lexicographically least.
    auto solve_xp(ProblemKind problem, const ColouredGraph & g, const Target & h, int k, const XpOptions & options = {}) -> Solution;

    auto solve_vdel(const ColouredGraph & g, const Target & h, int k, const SolveOptions & options = {}) -> Solution;
    auto solve_edel(const ColouredGraph & g, const Target & h, int k, const SolveOptions & options = {}) -> Solution;

    /// Colour dropping, foreign-colour removal, colour merging, green
    /// splitting and a bipartite vertex cover. Throws ContractError unless the
    /// core of h has at most two vertices and each colour is loops only or
    /// all three edges.
    auto solve_edel_ptime(const ColouredGraph & g, const Target & h, int k) -> Solution;

    /// Throws DomainError unless g and h are coloured with r and b.
    auto solve_switch(const ColouredGraph & g, const Target & h, int k, const SolveOptions & options = {}) -> Solution;

    auto solve(ProblemKind problem, const ColouredGraph & g, const Target & h, int k, const SolveOptions & options = {}) -> Solution;

    /// The input graph with the certificate applied, plus the new index of
    /// every input vertex (-1 if deleted).
    struct Replayed
    {
        ColouredGraph graph;
        std::vector<Vertex> new_index;
    };

    auto apply_certificate(const ColouredGraph & g, const Solution & s) -> Replayed;

    /// A yes-answer replays to a graph mapping to h within budget k, checked
    /// by brute force; a no-answer carries no certificate.
    auto verify_solution(const ColouredGraph & g, const Target & h, int k, const Solution & s) -> bool;
}

#endif
