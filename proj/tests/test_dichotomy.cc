#include "helpers.hh"
#include "oracles.hh"

#include <ecmod/dichotomy.hh>
#include <ecmod/error.hh>
#include <ecmod/homcheck.hh>

#include <doctest.h>

#include <map>
#include <random>

using namespace ecmod;
using testing::graph;
using testing::target;

namespace
{
    struct Expected
    {
        Classical classical;
        Parameterized parameterized;
    };

    constexpr auto P = Classical::PTime;
    constexpr auto NPC = Classical::NPComplete;
    constexpr auto FPT = Parameterized::FPT;
    constexpr auto W1 = Parameterized::W1Hard;

    // Vertex deletion: polynomial iff a vertex carries both loops, FPT at order two.
    // Edge deletion: polynomial iff each colour is loops only or all three edges.
    // Switching: the five listed targets are NP-complete; three of them are W[1]-hard.
    const std::map<std::string, std::array<Expected, 3>> table = {
        { "H1_rb", { { { P, FPT }, { P, FPT }, { P, FPT } } } },
        { "H1_b", { { { NPC, FPT }, { P, FPT }, { P, FPT } } } },
        { "H1_-", { { { NPC, FPT }, { P, FPT }, { P, FPT } } } },
        { "H2-_r,b", { { { NPC, FPT }, { P, FPT }, { P, FPT } } } },
        { "H2b_-,-", { { { NPC, FPT }, { NPC, FPT }, { P, FPT } } } },
        { "H2b_r,b", { { { NPC, FPT }, { NPC, FPT }, { NPC, FPT } } } },
        { "H2b_r,-", { { { NPC, FPT }, { NPC, FPT }, { NPC, FPT } } } },
        { "H2b_r,r", { { { NPC, FPT }, { NPC, FPT }, { P, FPT } } } },
        { "H2rb_-,-", { { { NPC, FPT }, { NPC, FPT }, { P, FPT } } } },
        { "H2rb_r,b", { { { NPC, FPT }, { NPC, FPT }, { NPC, W1 } } } },
        { "H2rb_r,-", { { { NPC, FPT }, { NPC, FPT }, { NPC, W1 } } } },
        { "H2rb_r,r", { { { NPC, FPT }, { NPC, FPT }, { NPC, W1 } } } },
    };

    auto swap_colours(const ColouredGraph & g) -> ColouredGraph
    {
        ColouredGraph result(g.order());
        for (auto & e : g.edges())
            result.add_edge(e.u, e.v, e.colour.flipped());
        return result;
    }

    auto swap_vertices(const ColouredGraph & g) -> ColouredGraph
    {
        ColouredGraph result(g.order());
        for (auto & e : g.edges())
            result.add_edge(g.order() - 1 - e.u, g.order() - 1 - e.v, e.colour);
        return result;
    }
}

TEST_CASE("compute_core examples")
{
    auto c = compute_core(Target{ graph(2, { { 0, 1, "b" }, { 1, 1, "b" } }) });
    CHECK(c.core.order() == 1);
    CHECK(c.core.canonical_name() == "H1_b");
    CHECK(c.embedding == std::vector<Vertex>{ 1 });
    CHECK(c.retraction == std::vector<Vertex>{ 0, 0 });

    auto h = target("H2-_r,b");
    CHECK(compute_core(h).core.order() == 2);

    auto k2 = Target{ graph(2, { { 0, 1, "b" } }) };
    CHECK(compute_core(k2).core.order() == 2);

    CHECK_THROWS_AS(compute_core(Target{ ColouredGraph(5) }), SizeError);
}

TEST_CASE("named cores are their own cores")
{
    for (auto & name : named_core_names()) {
        auto c = compute_core(target(name));
        CHECK(c.core.canonical_name() == name);
        CHECK(c.core.order() == target(name).order());
    }
}

TEST_CASE("compute_core is idempotent and a retraction")
{
    std::mt19937 rng(53);
    for (int trial = 0; trial < 150; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 4)(rng);
        auto h = Target{ oracle::random_graph(rng, n, std::uniform_int_distribution<int>(0, 8)(rng), 0.4) };
        auto c = compute_core(h);
        CHECK(oracle::maps_to(h.graph(), c.core));
        CHECK(oracle::maps_to(c.core.graph(), h));
        CHECK(is_homomorphism(h.graph(), c.core, c.retraction));
        auto again = compute_core(c.core);
        CHECK(again.core.order() == c.core.order());
        CHECK(same_edges(again.core.graph(), c.core.graph()));
    }
}

TEST_CASE("classifier matches the expected table")
{
    for (auto & [name, rows] : table) {
        auto h = target(name);
        int i = 0;
        for (auto problem : { ProblemKind::VertexDeletion, ProblemKind::EdgeDeletion, ProblemKind::Switching }) {
            auto c = classify(problem, h);
            INFO(name, " ", to_string(problem));
            CHECK(c.classical == rows[i].classical);
            CHECK(c.parameterized == rows[i].parameterized);
            CHECK(c.core_name == name);
            ++i;
        }
    }
}

TEST_CASE("classifier is invariant under colour and vertex swaps")
{
    for (auto & name : named_core_names()) {
        auto h = target(name);
        for (auto & variant : { swap_colours(h.graph()), swap_vertices(h.graph()), swap_vertices(swap_colours(h.graph())) }) {
            auto t = Target{ variant };
            for (auto problem : { ProblemKind::VertexDeletion, ProblemKind::EdgeDeletion, ProblemKind::Switching }) {
                auto a = classify(problem, h), b = classify(problem, t);
                CHECK(a.classical == b.classical);
                CHECK(a.parameterized == b.parameterized);
            }
        }
    }
}

TEST_CASE("vertex deletion ambient colours")
{
    auto c = classify_vdel(target("H1_b"));
    CHECK(c.classical == Classical::NPComplete);
    REQUIRE(c.alternative_classical);
    CHECK(*c.alternative_classical == Classical::PTime);
    CHECK(to_record(c).find("classical_target_colours=PTime") != std::string::npos);

    auto own = classify_vdel(target("H1_b"), std::vector<Colour>{ Colour::blue() });
    CHECK(own.classical == Classical::PTime);

    auto three = Target{ graph(1, { { 0, 0, "r" }, { 0, 0, "b" }, { 0, 0, "g" } }) };
    CHECK(classify_vdel(three).classical == Classical::PTime);
}

TEST_CASE("hard colouring targets")
{
    auto triangle = Target{ graph(3, { { 0, 1, "b" }, { 1, 2, "b" }, { 0, 2, "b" } }) };
    CHECK(is_known_hard_colouring_target(triangle));
    auto c = classify_vdel(triangle);
    CHECK(c.classical == Classical::NPComplete);
    CHECK(c.parameterized == Parameterized::NotInXP);
    CHECK(classify_edel(triangle).parameterized == Parameterized::NotInXP);

    auto c5 = Target{ graph(5, { { 0, 1, "r" }, { 1, 2, "r" }, { 2, 3, "r" }, { 3, 4, "r" }, { 0, 4, "r" } }) };
    CHECK(is_known_hard_colouring_target(c5));
    CHECK(! is_known_hard_colouring_target(Target{ graph(4, { { 0, 1, "r" }, { 1, 2, "r" }, { 2, 3, "r" }, { 0, 3, "r" } }) }));
    CHECK(! is_known_hard_colouring_target(Target{ graph(3, { { 0, 1, "b" }, { 1, 2, "b" }, { 0, 2, "r" } }) }));
}

TEST_CASE("unknown beyond order two")
{
    auto reducible = Target{ graph(3, { { 0, 1, "b" }, { 1, 1, "b" } }) };
    auto c = classify_edel(reducible);
    CHECK(c.core_name == "H1_b");
    CHECK(c.parameterized == Parameterized::FPT);

    auto mixed = Target{ graph(3, { { 0, 1, "b" }, { 1, 2, "b" }, { 0, 2, "r" } }) };
    auto e = classify_edel(mixed);
    CHECK(e.classical == Classical::Unknown);
    CHECK(e.parameterized == Parameterized::Unknown);
    CHECK(classify_switch(mixed).classical == Classical::Unknown);
    CHECK_THROWS_AS(classify_switch(Target{ graph(1, { { 0, 0, "g" } }) }), DomainError);
}

TEST_CASE("records")
{
    auto c = classify(ProblemKind::Switching, target("H2rb_r,r"));
    CHECK(to_record(c) == "problem=switch target=H2rb_r,r core=H2rb_r,r classical=NP-complete parameterized=W[1]-hard source=switch-order2-dichotomy,switch-multicoloured-independent-set-w1");
}
