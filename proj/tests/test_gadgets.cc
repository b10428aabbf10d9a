#include "helpers.hh"
#include "oracles.hh"

#include <ecmod/error.hh>
#include <ecmod/gadgets.hh>
#include <ecmod/homcheck.hh>
#include <ecmod/solve.hh>

#include <doctest.h>

#include <random>

using namespace ecmod;

namespace
{
    auto simple(int n, std::vector<std::pair<int, int>> edges) -> SimpleGraph
    {
        return SimpleGraph{ n, std::move(edges) };
    }

    auto to_oracle(const SimpleGraph & g) -> oracle::Simple
    {
        return oracle::Simple{ g.n, g.edges };
    }

    auto random_simple(std::mt19937 & rng, int n, double p) -> SimpleGraph
    {
        SimpleGraph g{ n, {} };
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::bernoulli_distribution(p)(rng))
                    g.edges.emplace_back(u, v);
        return g;
    }

    auto random_parts(std::mt19937 & rng, int n, int count) -> std::vector<std::vector<int>>
    {
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v)
            order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::vector<int>> parts(count);
        for (int i = 0; i < n; ++i)
            parts[i < count ? i : std::uniform_int_distribution<int>(0, count - 1)(rng)].push_back(order[i]);
        for (auto & p : parts)
            std::sort(p.begin(), p.end());
        return parts;
    }

    auto yes(const ReducedInstance & r, int budget) -> bool
    {
        if (r.problem == ProblemKind::Switching)
            return solve_xp(r.problem, r.instance, r.target, budget, { XpHomTest::TwoSat, true, false }).answer;
        return solve(r.problem, r.instance, r.target, budget).answer;
    }

    const std::vector<LoopKind> loop_kinds{ LoopKind::Red, LoopKind::Blue, LoopKind::None };
}

TEST_CASE("vertex cover reduction examples")
{
    auto k2 = VcInstance{ simple(2, { { 0, 1 } }), 1 };
    for (auto gen : { gen_vc_edel_h2b_rb, gen_vc_edel_h2rb_rb, gen_vc_switch_h2b_rdash }) {
        auto r = gen(k2);
        CHECK(r.budget == 1);
        CHECK(yes(r, 1));
        CHECK(! yes(r, 0));
    }

    auto a = gen_vc_edel_h2b_rb(k2);
    CHECK(a.problem == ProblemKind::EdgeDeletion);
    CHECK(a.target.canonical_name() == "H2b_r,b");
    CHECK(a.instance.order() == 4);
    CHECK(a.instance.size() == 3);

    auto edgeless = VcInstance{ simple(3, {}), 0 };
    CHECK(yes(gen_vc_edel_h2b_rb(edgeless), 0));
    CHECK(yes(gen_vc_switch_h2b_rdash(edgeless), 0));

    auto triangle = simple(3, { { 0, 1 }, { 1, 2 }, { 0, 2 } });
    auto t = gen_vc_edel_h2b_rb(VcInstance{ triangle, 2 });
    CHECK(yes(t, 2));
    CHECK(! yes(t, 1));
    CHECK(! yes(gen_vc_edel_h2rb_rb(VcInstance{ triangle, 1 }), 1));

    auto p3 = gen_vc_edel_h2rb_rb(VcInstance{ simple(3, { { 0, 1 }, { 1, 2 } }), 1 });
    CHECK(p3.target.canonical_name() == "H2rb_r,b");
    CHECK(yes(p3, 1));

    auto c4 = gen_vc_switch_h2b_rdash(VcInstance{ simple(4, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 0, 3 } }), 2 });
    CHECK(c4.problem == ProblemKind::Switching);
    CHECK(c4.target.canonical_name() == "H2b_r,-");
    CHECK(yes(c4, 2));
    CHECK(! yes(c4, 1));
}

TEST_CASE("vertex cover reductions are sound")
{
    std::mt19937 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        auto g = random_simple(rng, n, 0.5);
        int cover = oracle::vertex_cover_number(to_oracle(g));
        for (auto gen : { gen_vc_edel_h2b_rb, gen_vc_edel_h2rb_rb, gen_vc_switch_h2b_rdash }) {
            auto r = gen(VcInstance{ g, cover });
            for (int k = std::max(0, cover - 1); k <= cover; ++k) {
                INFO("n=", n, " edges=", g.edges.size(), " k=", k);
                CHECK(yes(r, k) == (k >= cover));
            }
        }
    }
}

TEST_CASE("vertex cover provenance")
{
    auto r = gen_vc_edel_h2rb_rb(VcInstance{ simple(2, { { 0, 1 } }), 1 });
    CHECK(r.instance.order() == 7);
    CHECK(r.vertex_label.size() == 7);
    CHECK(r.edge_label.size() == r.instance.size());
    CHECK(r.vertex_label[0] == "v0");
    CHECK(r.vertex_label[2] == "v0'");
    CHECK(r.source_vertex[0] == 0);
    CHECK(r.source_vertex[1] == 1);
    CHECK(r.source_vertex[2] == -1);
}

TEST_CASE("instance validation")
{
    CHECK_THROWS_AS(gen_vc_edel_h2b_rb(VcInstance{ simple(2, { { 0, 0 } }), 1 }), ArgumentError);
    CHECK_THROWS_AS(gen_vc_edel_h2b_rb(VcInstance{ simple(2, { { 0, 1 }, { 1, 0 } }), 1 }), ArgumentError);
    CHECK_THROWS_AS(gen_vc_edel_h2b_rb(VcInstance{ simple(2, { { 0, 2 } }), 1 }), ArgumentError);

    MisInstance overlap{ simple(2, {}), { { 0, 1 }, { 1 } } };
    CHECK_THROWS_AS(gen_mis_switch(overlap, LoopKind::Red, 3), ArgumentError);
    MisInstance missing{ simple(2, {}), { { 0 } } };
    CHECK_THROWS_AS(gen_mis_switch(missing, LoopKind::Red, 3), ArgumentError);
    MisInstance empty{ simple(1, {}), { { 0 }, {} } };
    CHECK_THROWS_AS(gen_mis_switch(empty, LoopKind::Red, 3), ArgumentError);

    MisInstance fine{ simple(1, {}), { { 0 } } };
    CHECK_THROWS_AS(gen_mis_switch(fine, LoopKind::Red, 2), ArgumentError);
    CHECK_THROWS_AS(partition_gadget(LoopKind::Blue, 2, 1), ArgumentError);
    CHECK_THROWS_AS(partition_gadget(LoopKind::Blue, 3, 0), ArgumentError);
    CHECK_THROWS_AS(edge_gadget(LoopKind::None, 2), ArgumentError);
    CHECK_THROWS_AS(parse_loop_kind("g"), ArgumentError);
    CHECK(parse_loop_kind("-") == LoopKind::None);
}

TEST_CASE("independent set reduction examples")
{
    MisInstance apart{ simple(2, {}), { { 0 }, { 1 } } };
    auto r = gen_mis_switch(apart, LoopKind::Red, 3);
    CHECK(r.budget == 2);
    CHECK(r.target.canonical_name() == "H2rb_r,r");
    CHECK(yes(r, 2));
    auto s = solve_xp(r.problem, r.instance, r.target, 2);
    CHECK(s.answer);
    CHECK(s.vertices == std::vector<Vertex>{ 0, 1 });

    MisInstance joined{ simple(2, { { 0, 1 } }), { { 0 }, { 1 } } };
    CHECK(! yes(gen_mis_switch(joined, LoopKind::Red, 3), 2));

    CHECK(gen_mis_switch(apart, LoopKind::Blue, 3).target.canonical_name() == "H2rb_r,b");
    CHECK(gen_mis_switch(apart, LoopKind::None, 3).target.canonical_name() == "H2rb_r,-");
}

TEST_CASE("independent set reductions are sound")
{
    std::mt19937 rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        int count = std::uniform_int_distribution<int>(1, std::min(n, 3))(rng);
        MisInstance mis{ random_simple(rng, n, 0.4), random_parts(rng, n, count) };
        bool expected = oracle::has_multicoloured_independent_set(to_oracle(mis.graph), mis.parts);
        for (auto x : loop_kinds) {
            auto r = gen_mis_switch(mis, x, 3);
            INFO("trial ", trial, " x=", to_string(x));
            CHECK(yes(r, r.budget) == expected);
        }
    }
}

TEST_CASE("a source vertex may be an endpoint of several edge gadgets")
{
    // Vertex 3 is v in the gadget for (1,3) and u in the one for (3,5).
    MisInstance mis{ simple(6, { { 0, 2 }, { 1, 3 }, { 2, 4 }, { 3, 5 }, { 0, 5 }, { 1, 4 }, { 0, 1 } }), { { 0, 1 }, { 2, 3 }, { 4, 5 } } };
    REQUIRE(oracle::has_multicoloured_independent_set(to_oracle(mis.graph), mis.parts));
    for (auto x : loop_kinds)
        for (int q = 3; q <= 6; ++q) {
            auto r = gen_mis_switch(mis, x, q);
            std::vector<Vertex> chosen{ 0, 3, 4 };
            INFO("x=", to_string(x), " q=", q);
            CHECK(hom_exists_2sat(switch_set(r.instance, chosen), r.target).has_value());
        }
}

TEST_CASE("generated instances have girth at least q")
{
    MisInstance mis{ simple(4, { { 0, 2 }, { 1, 3 }, { 0, 3 } }), { { 0, 1 }, { 2, 3 } } };
    for (auto x : loop_kinds)
        for (int q = 3; q <= 7; ++q) {
            auto r = gen_mis_switch(mis, x, q);
            auto g = girth(r.instance);
            INFO("x=", to_string(x), " q=", q);
            CHECK((! g || *g >= q));
            CHECK(r.source_vertex[3] == 3);
            CHECK(r.source_vertex[4] == -1);
        }
}

TEST_CASE("partition cycle parity")
{
    for (int q = 3; q <= 7; ++q)
        for (int s = 2; s <= 5; ++s) {
            auto p = partition_gadget(LoopKind::Red, q, s);
            int cycle = static_cast<int>(p.graph.size()) - (s - 1);
            CHECK(cycle == (q % 2 == s % 2 ? 2 * q : 2 * q + 2));
            CHECK(p.special.size() == static_cast<std::size_t>(s));
        }
}

TEST_CASE("gadget properties")
{
    for (auto x : loop_kinds)
        for (int q = 3; q <= 6; ++q)
            for (int s = 1; s <= 4; ++s) {
                auto report = verify_gadget_properties(x, q, s);
                CHECK(report.properties.size() == 8);
                for (auto & p : report.properties) {
                    INFO("x=", to_string(x), " q=", q, " part_size=", s, " ", p.name, " ", p.witness);
                    CHECK(p.passed);
                }
            }

    CHECK_THROWS_AS(verify_gadget_properties(LoopKind::Red, 7, 1), SizeError);
    CHECK_THROWS_AS(verify_gadget_properties(LoopKind::Red, 2, 1), ArgumentError);
    CHECK_THROWS_AS(verify_gadget_properties(LoopKind::Red, 3, 0), ArgumentError);
    CHECK_THROWS_AS(verify_gadget_properties(LoopKind::Red, 3, 5), SizeError);
}

TEST_CASE("property checks notice broken gadgets")
{
    // Switching a special vertex of a partition gadget yields a mapping, an
    // ordinary vertex does not.
    auto p = partition_gadget(LoopKind::Blue, 3, 2);
    auto h = mis_target(LoopKind::Blue);
    CHECK(! hom_exists_2sat(p.graph, h));
    CHECK(hom_exists_2sat(switch_at(p.graph, p.special[0]), h));
    for (Vertex w = 0; w < p.graph.order(); ++w)
        if (std::find(p.special.begin(), p.special.end(), w) == p.special.end())
            CHECK(! hom_exists_2sat(switch_at(p.graph, w), h));

    auto e = edge_gadget(LoopKind::None, 3);
    std::vector<Vertex> both{ e.u, e.v };
    CHECK(hom_exists_2sat(e.graph, mis_target(LoopKind::None)));
    CHECK(distance(e.graph, e.u, e.v).value_or(0) >= 3);
    CHECK(hom_exists_2sat(switch_set(e.graph, both), mis_target(LoopKind::None)));
}
