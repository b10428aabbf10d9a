#include "helpers.hh"
#include "oracles.hh"

#include <ecmod/error.hh>
#include <ecmod/homcheck.hh>
#include <ecmod/twosat.hh>

#include <doctest.h>

#include <random>
#include <sstream>

using namespace ecmod;

namespace
{
    auto satisfies(const TwoCnf & f, const Assignment & a) -> bool
    {
        std::vector<bool> values(f.num_vars);
        for (int v = 0; v < f.num_vars; ++v)
            values[v] = a.values[v].value_or(false);
        for (auto & c : f.clauses)
            if (! c.satisfied_by(values))
                return false;
        return true;
    }

    auto without_vars(const TwoCnf & f, const std::vector<int> & vars) -> TwoCnf
    {
        TwoCnf result;
        result.num_vars = f.num_vars;
        for (auto & c : f.clauses)
            if (std::none_of(vars.begin(), vars.end(), [&](int v) { return c.mentions(v); }))
                result.clauses.push_back(c);
        return result;
    }
}

TEST_CASE("solve_2sat examples")
{
    TwoCnf contradiction;
    int x = contradiction.add_var();
    contradiction.add_clause(pos(x));
    contradiction.add_clause(neg(x));
    CHECK(! solve_2sat(contradiction));

    TwoCnf empty;
    empty.num_vars = 3;
    auto a = solve_2sat(empty);
    REQUIRE(a);
    for (auto & v : a->values)
        CHECK(v == false);

    TwoCnf exclusive;
    exclusive.num_vars = 2;
    exclusive.add_clause(pos(0), pos(1));
    exclusive.add_clause(neg(0), neg(1));
    auto b = solve_2sat(exclusive);
    REQUIRE(b);
    CHECK(b->values[0] != b->values[1]);
}

TEST_CASE("repeated literals collapse to a unit clause")
{
    Clause c(pos(2), pos(2));
    CHECK(c.size() == 1);
    CHECK(Clause(pos(1), neg(1)).size() == 2);
}

TEST_CASE("solve_2sat agrees with truth tables")
{
    std::mt19937 rng(101);
    for (int trial = 0; trial < 2000; ++trial) {
        int vars = std::uniform_int_distribution<int>(1, 12)(rng);
        auto f = oracle::random_formula(rng, vars, std::uniform_int_distribution<int>(0, 3 * vars)(rng));
        auto a = solve_2sat(f);
        CHECK(a.has_value() == oracle::satisfiable(f));
        if (a)
            CHECK(satisfies(f, *a));
    }
}

TEST_CASE("unsat cores are unsatisfiable on their own")
{
    std::mt19937 rng(103);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto f = oracle::random_formula(rng, 6, 14);
        auto core = unsat_core(f);
        CHECK(core.has_value() == ! oracle::satisfiable(f));
        if (! core)
            continue;
        std::vector<char> alive(f.clauses.size(), 0);
        for (auto c : *core)
            alive[c] = 1;
        CHECK(! oracle::satisfiable(f, alive));
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("validation")
{
    TwoCnf f;
    f.num_vars = 1;
    f.add_clause(pos(1));
    CHECK_THROWS_AS(f.validate(), ArgumentError);

    TwoCnf g;
    g.num_vars = 2;
    g.add_clause(pos(0), pos(1));
    g.add_clause(neg(1));
    g.groups = std::vector<ClauseGroup>{ { { 0, 1 }, 0 } };
    CHECK_THROWS_AS(g.validate(), ArgumentError);
    g.groups = std::vector<ClauseGroup>{ { { 0 }, 0 } };
    CHECK_THROWS_AS(g.validate(), ArgumentError);
    g.groups = std::vector<ClauseGroup>{ { { 0 }, 0 }, { { 1 }, 1 } };
    CHECK_NOTHROW(g.validate());
}

TEST_CASE("var_del_almost_2sat examples")
{
    TwoCnf f;
    f.num_vars = 2;
    f.add_clause(pos(0));
    f.add_clause(neg(0));
    CHECK(var_del_almost_2sat(f, 1) == std::vector<int>{ 0 });
    CHECK(! var_del_almost_2sat(f, 0));

    f.add_clause(pos(1));
    f.add_clause(neg(1));
    CHECK(! var_del_almost_2sat(f, 1));
    CHECK(var_del_almost_2sat(f, 2) == std::vector<int>{ 0, 1 });
    CHECK_THROWS_AS(var_del_almost_2sat(f, -1), ArgumentError);
}

TEST_CASE("variable deletion on a red-blue-red path encoding")
{
    auto encoded = build_2sat(testing::rbr_path(), testing::target("H2b_r,b"), Encoding::VertexDeletion);
    auto found = var_del_almost_2sat(encoded.formula, 1);
    auto expected = oracle::var_deletion(encoded.formula, 1);
    REQUIRE(expected);
    CHECK(found == expected);
}

TEST_CASE("group_del_almost_2sat examples")
{
    TwoCnf f;
    f.num_vars = 1;
    f.add_clause(pos(0));
    f.add_clause(neg(0));
    CHECK_THROWS_AS(group_del_almost_2sat(f, 1), ArgumentError);

    f.groups = std::vector<ClauseGroup>{ { { 0 }, 0 }, { { 1 }, 0 } };
    CHECK(group_del_almost_2sat(f, 1) == std::vector<std::size_t>{ 0 });

    f.groups = std::vector<ClauseGroup>{ { { 0, 1 }, 0 } };
    CHECK(group_del_almost_2sat(f, 1) == std::vector<std::size_t>{ 0 });
    CHECK(! group_del_almost_2sat(f, 0));
}

TEST_CASE("group deletion on a red-blue-red path encoding")
{
    auto encoded = build_2sat(testing::rbr_path(), testing::target("H2b_r,b"), Encoding::EdgeGroups);
    auto found = group_del_almost_2sat(encoded.formula, 1);
    REQUIRE(found);
    CHECK(found->size() == 1);
    auto expected = oracle::group_deletion(encoded.formula, 1);
    REQUIRE(expected);
    CHECK(static_cast<int>((*found)[0]) == (*expected)[0]);
}

TEST_CASE("almost 2-SAT matches subset enumeration")
{
    std::mt19937 rng(107);
    for (int trial = 0; trial < 400; ++trial) {
        int vars = std::uniform_int_distribution<int>(1, 7)(rng);
        auto f = oracle::random_formula(rng, vars, std::uniform_int_distribution<int>(1, 12)(rng));
        int k = std::uniform_int_distribution<int>(0, 3)(rng);
        auto found = var_del_almost_2sat(f, k);
        CHECK(found == oracle::var_deletion(f, k));
        if (found)
            CHECK(solve_2sat(without_vars(f, *found)));
    }
}

TEST_CASE("group_to_var_reduction construction")
{
    // g1 = {(x or y)}, g2 = {(not x or z)} with x = 0, y = 1, z = 2.
    TwoCnf f;
    f.num_vars = 3;
    f.add_clause(pos(0), pos(1));
    f.add_clause(neg(0), pos(2));
    f.groups = std::vector<ClauseGroup>{ { { 0 }, 0 }, { { 1 }, 0 } };
    auto r = group_to_var_reduction(f);

    // x1 = 0, y1 = 1, x2 = 2, z2 = 3.
    REQUIRE(r.formula.num_vars == 4);
    CHECK(r.source_var == std::vector<int>{ 0, 1, 0, 2 });
    CHECK(r.group_of_var == std::vector<std::size_t>{ 0, 0, 1, 1 });
    REQUIRE(r.formula.clauses.size() == 4);
    CHECK(r.formula.clauses[0] == Clause(pos(0), pos(1)));
    CHECK(r.formula.clauses[1] == Clause(neg(2), pos(3)));
    CHECK(r.formula.clauses[2] == Clause(neg(0), pos(2)));
    CHECK(r.formula.clauses[3] == Clause(pos(0), neg(2)));

    TwoCnf single;
    single.num_vars = 2;
    single.add_clause(pos(0), neg(1));
    single.add_clause(neg(0));
    single.groups = std::vector<ClauseGroup>{ { { 0, 1 }, 0 } };
    auto s = group_to_var_reduction(single);
    CHECK(s.formula.clauses.size() == 2);
}

TEST_CASE("group reduction preserves the verdict")
{
    std::mt19937 rng(109);
    for (int trial = 0; trial < 400; ++trial) {
        auto f = oracle::random_grouped_formula(rng, std::uniform_int_distribution<int>(1, 6)(rng),
            std::uniform_int_distribution<int>(1, 8)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
        int k = std::uniform_int_distribution<int>(0, 2)(rng);
        auto direct = oracle::group_deletion(f, k);
        auto grouped = group_del_almost_2sat(f, k);
        auto reduced = var_del_almost_2sat(group_to_var_reduction(f).formula, k);
        CHECK(grouped.has_value() == direct.has_value());
        CHECK(reduced.has_value() == direct.has_value());
        if (grouped)
            CHECK(grouped->size() == direct->size());
    }
}

TEST_CASE("monotone in the budget")
{
    std::mt19937 rng(113);
    for (int trial = 0; trial < 200; ++trial) {
        auto f = oracle::random_formula(rng, 6, 12);
        for (int k = 0; k < 3; ++k)
            if (var_del_almost_2sat(f, k))
                CHECK(var_del_almost_2sat(f, k + 1));
    }
}

TEST_CASE("dimacs dump")
{
    TwoCnf f;
    f.num_vars = 2;
    f.add_clause(pos(0), neg(1));
    f.add_clause(pos(1));
    f.groups = std::vector<ClauseGroup>{ { { 0 }, 0 }, { { 1 }, 1 } };
    std::ostringstream s;
    write_dimacs(s, f);
    CHECK(s.str() == "p cnf 2 2\nc group 0 witness 1\n1 -2 0\nc group 1 witness 2\n2 0\n");
}
