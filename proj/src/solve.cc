#include <ecmod/dichotomy.hh>
#include <ecmod/error.hh>
#include <ecmod/solve.hh>
#include <ecmod/twosat.hh>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace ecmod
{
    namespace
    {
        auto require_budget(int k) -> void
        {
            if (k < 0)
                throw ArgumentError{ "budget must be non-negative" };
        }

        auto find_hom(const ColouredGraph & g, const Target & h, XpHomTest test = XpHomTest::Auto) -> optional<Homomorphism>
        {
            if (test == XpHomTest::Auto)
                test = h.order() <= 2 ? XpHomTest::TwoSat : XpHomTest::BruteForce;
            return test == XpHomTest::TwoSat ? hom_exists_2sat(g, h) : hom_exists_bruteforce(g, h);
        }

        struct Modified
        {
            ColouredGraph graph;
            vector<Vertex> original_vertex;
            vector<size_t> original_edge;
        };

        auto modify(ProblemKind problem, const ColouredGraph & g, const vector<int> & set) -> Modified
        {
            Modified result;
            switch (problem) {
                case ProblemKind::VertexDeletion: {
                    auto d = delete_vertices(g, set);
                    result.graph = std::move(d.graph);
                    result.original_vertex = std::move(d.original);
                    break;
                }
                case ProblemKind::EdgeDeletion: {
                    vector<size_t> edges(set.begin(), set.end());
                    result.graph = delete_edges(g, edges);
                    vector<char> gone(g.size(), 0);
                    for (auto e : edges)
                        gone[e] = 1;
                    for (size_t i = 0; i < g.size(); ++i)
                        if (! gone[i])
                            result.original_edge.push_back(i);
                    for (Vertex v = 0; v < g.order(); ++v)
                        result.original_vertex.push_back(v);
                    break;
                }
                case ProblemKind::Switching: {
                    result.graph = switch_set(g, set);
                    for (Vertex v = 0; v < g.order(); ++v)
                        result.original_vertex.push_back(v);
                    break;
                }
            }
            return result;
        }

        auto lift(const Modified & m, int order, const Homomorphism & hom) -> Homomorphism
        {
            Homomorphism result{ vector<Vertex>(order, -1) };
            for (size_t i = 0; i < m.original_vertex.size(); ++i)
                result.map[m.original_vertex[i]] = hom.map[i];
            return result;
        }

        auto make_solution(ProblemKind problem, const string & method) -> Solution
        {
            Solution s;
            s.problem = problem;
            s.method = method;
            return s;
        }

        // Fills in the certificate and recomputes the final homomorphism
        // against the caller's target.
        auto accept(Solution & s, const ColouredGraph & g, const Target & h, const vector<int> & set) -> void
        {
            s.answer = true;
            s.vertices.clear();
            s.edges.clear();
            if (s.problem == ProblemKind::EdgeDeletion)
                s.edges.assign(set.begin(), set.end());
            else
                s.vertices.assign(set.begin(), set.end());
            s.budget_used = static_cast<int>(set.size());

            auto m = modify(s.problem, g, set);
            auto hom = find_hom(m.graph, h);
            if (! hom || ! is_homomorphism(m.graph, h, hom->map))
                throw ContractError{ "solver produced a certificate that does not yield a homomorphism" };
            s.homomorphism = lift(m, g.order(), *hom);
        }

        auto ground_size(ProblemKind problem, const ColouredGraph & g) -> int
        {
            return problem == ProblemKind::EdgeDeletion ? static_cast<int>(g.size()) : g.order();
        }

        // Smallest unused elements are appended until the set has exactly k.
        auto pad(vector<int> set, int k, int ground) -> optional<vector<int>>
        {
            if (k > ground)
                return std::nullopt;
            vector<char> used(ground, 0);
            for (auto x : set)
                used[x] = 1;
            for (int x = 0; x < ground && static_cast<int>(set.size()) < k; ++x)
                if (! used[x])
                    set.push_back(x);
            std::sort(set.begin(), set.end());
            return set;
        }

        struct Reduced
        {
            Target target;
            bool usable;
        };

        // Targets with more than two vertices are replaced by their core when
        // that core is small enough for the specialised algorithms.
        auto reduce_target(const Target & h) -> Reduced
        {
            if (h.order() <= 2)
                return { h, true };
            if (h.order() > 4)
                return { h, false };
            auto core = compute_core(h);
            return { core.core, core.core.order() <= 2 };
        }
    }

    auto solve_xp(ProblemKind problem, const ColouredGraph & g, const Target & h, int k, const XpOptions & options) -> Solution
    {
        require_budget(k);
        if (problem == ProblemKind::Switching && (! g.is_two_edge_coloured() || ! h.graph().is_two_edge_coloured()))
            throw DomainError{ "switching needs an instance and target coloured with r and b" };

        auto test = options.hom_test;
        if (test == XpHomTest::Auto)
            test = h.order() <= 2 ? XpHomTest::TwoSat : XpHomTest::BruteForce;
        bool prune = options.prune_with_core && ! options.exact_size;
        if (prune && h.order() > 2)
            throw DomainError{ "core pruning needs a target with at most two vertices" };

        Solution result = make_solution(problem, options.exact_size ? "xp-exact" : "xp");
        int ground = ground_size(problem, g);

        // A set meeting a component in more than half its vertices is
        // equivalent to a smaller one.
        bool halve = problem == ProblemKind::Switching && ! options.exact_size;
        vector<int> comp(g.order(), 0), comp_size, in_comp;
        if (halve) {
            auto comps = connected_components(g);
            comp_size.resize(comps.size());
            in_comp.assign(comps.size(), 0);
            for (size_t c = 0; c < comps.size(); ++c) {
                comp_size[c] = static_cast<int>(comps[c].size());
                for (auto v : comps[c])
                    comp[v] = static_cast<int>(c);
            }
        }
        auto allowed = [&](int x) { return ! halve || 2 * (in_comp[comp[x]] + 1) <= comp_size[comp[x]]; };
        auto take = [&](int x) { if (halve) ++in_comp[comp[x]]; };
        auto drop = [&](int x) { if (halve) --in_comp[comp[x]]; };

        vector<int> current;
        auto succeeds = [&]() -> bool {
            auto m = modify(problem, g, current);
            return find_hom(m.graph, h, test).has_value();
        };

        // Elements whose removal or switching touches an unsatisfiable core
        // of the 2-SAT formula for g modified by current; empty if it maps.
        auto core_candidates = [&](bool & maps) -> vector<int> {
            auto m = modify(problem, g, current);
            auto encoded = build_2sat(m.graph, h, Encoding::Plain);
            auto core = unsat_core(encoded.formula);
            vector<int> found;
            maps = ! core;
            if (maps)
                return found;
            for (auto c : *core) {
                auto e = encoded.clause_edge[c];
                if (problem == ProblemKind::EdgeDeletion)
                    found.push_back(static_cast<int>(m.original_edge[e]));
                else {
                    found.push_back(m.original_vertex[m.graph.edge(e).u]);
                    found.push_back(m.original_vertex[m.graph.edge(e).v]);
                }
            }
            std::sort(found.begin(), found.end());
            found.erase(std::unique(found.begin(), found.end()), found.end());
            return found;
        };

        // Any successful superset of current must add an element touching the
        // current core, so branching over those is complete. Sets already
        // known to fail with at least this budget are skipped.
        vector<int> witness;
        std::map<vector<int>, int> failed;
        std::function<bool(int, int)> extendable = [&](int floor, int budget) -> bool {
            auto key = current;
            std::sort(key.begin(), key.end());
            if (auto it = failed.find(key); it != failed.end() && it->second >= budget)
                return false;

            bool maps = false;
            auto candidates = core_candidates(maps);
            if (maps) {
                witness = key;
                return true;
            }
            if (budget > 0)
                for (auto x : candidates) {
                    if (x <= floor || std::find(current.begin(), current.end(), x) != current.end())
                        continue;
                    current.push_back(x);
                    bool ok = extendable(floor, budget - 1);
                    current.pop_back();
                    if (ok)
                        return true;
                }
            failed[key] = std::max(failed[key], budget);
            return false;
        };
        auto extendable_from = [&](int floor, int budget) {
            failed.clear();
            return extendable(floor, budget);
        };

        std::function<bool(int, int)> search = [&](int size, int start) -> bool {
            int missing = size - static_cast<int>(current.size());
            if (missing == 0)
                return succeeds();

            for (int x = start; x <= ground - missing; ++x) {
                if (! allowed(x))
                    continue;
                current.push_back(x);
                take(x);
                bool ok = search(size, x + 1);
                if (ok)
                    return true;
                drop(x);
                current.pop_back();
            }
            return false;
        };

        if (prune) {
            result.method = "xp-core-guided";
            int size = -1;
            for (int t = 0; t <= std::min(k, ground) && size < 0; ++t) {
                current.clear();
                if (extendable_from(-1, t))
                    size = t;
            }
            if (size < 0)
                return result;

            // Fix elements one at a time, keeping a minimum completion. Only
            // elements below the current witness's need trying.
            auto best = witness;
            current.clear();
            for (int i = 0; i < size; ++i) {
                int floor = current.empty() ? -1 : current.back();
                int chosen = best[i];
                for (int x = floor + 1; x < best[i]; ++x) {
                    current.push_back(x);
                    bool ok = extendable_from(x, size - i - 1);
                    current.pop_back();
                    if (ok) {
                        chosen = x;
                        best = witness;
                        break;
                    }
                }
                current.push_back(chosen);
            }
            std::sort(current.begin(), current.end());
            accept(result, g, h, current);
            return result;
        }

        int low = options.exact_size ? k : 0;
        for (int size = low; size <= std::min(k, ground); ++size) {
            current.clear();
            std::fill(in_comp.begin(), in_comp.end(), 0);
            if (search(size, 0)) {
                accept(result, g, h, current);
                return result;
            }
        }
        return result;
    }

    auto solve_vdel(const ColouredGraph & g, const Target & h, int k, const SolveOptions & options) -> Solution
    {
        require_budget(k);
        if (options.force_xp)
            return solve_xp(ProblemKind::VertexDeletion, g, h, k, { XpHomTest::Auto, false, options.strict_exact_k });

        auto reduced = reduce_target(h);
        if (! reduced.usable) {
            auto s = solve_xp(ProblemKind::VertexDeletion, g, h, k, { XpHomTest::Auto, false, options.strict_exact_k });
            s.fell_back_to_xp = true;
            return s;
        }

        auto encoded = build_2sat(g, reduced.target, Encoding::VertexDeletion);
        auto deleted = var_del_almost_2sat(encoded.formula, k);
        Solution s = make_solution(ProblemKind::VertexDeletion, "almost-2sat-variable-deletion");
        if (! deleted)
            return s;

        vector<int> set(deleted->begin(), deleted->end());
        if (options.strict_exact_k) {
            auto padded = pad(set, k, g.order());
            if (! padded)
                return s;
            set = *padded;
        }
        accept(s, g, h, set);
        return s;
    }

    auto solve_edel_ptime(const ColouredGraph & g, const Target & h, int k) -> Solution
    {
        require_budget(k);
        if (h.order() > 4)
            throw ContractError{ "polynomial edge deletion needs a target whose core has at most two vertices" };
        auto core = compute_core(h).core;
        if (core.order() > 2 || classify_edel(core).classical != Classical::PTime)
            throw ContractError{ "polynomial edge deletion needs each target colour to be loops only or all three edges" };

        enum Side { Zero, One, Both, Free, Foreign };
        auto side_of = [&](const Colour & c) -> Side {
            bool l0 = core.has_edge(0, 0, c);
            if (core.order() == 1)
                return l0 ? Free : Foreign;
            bool l1 = core.has_edge(1, 1, c), across = core.has_edge(0, 1, c);
            if (l0 && l1 && across)
                return Free;
            if (l0 && l1)
                return Both;
            if (l0)
                return Zero;
            if (l1)
                return One;
            return Foreign;
        };

        // Occurrences on side 0 form the left part of the conflict graph and
        // those on side 1 the right part; a green edge has one of each.
        vector<int> certificate;
        vector<size_t> left, right;
        vector<char> green(g.size(), 0);
        for (size_t i = 0; i < g.size(); ++i) {
            switch (side_of(g.edge(i).colour)) {
                case Foreign: certificate.push_back(static_cast<int>(i)); break;
                case Free: break;
                case Zero: left.push_back(i); break;
                case One: right.push_back(i); break;
                case Both:
                    green[i] = 1;
                    left.push_back(i);
                    right.push_back(i);
                    break;
            }
        }

        vector<vector<int>> left_at(g.order()), right_at(g.order());
        for (size_t a = 0; a < left.size(); ++a) {
            auto & e = g.edge(left[a]);
            left_at[e.u].push_back(static_cast<int>(a));
            if (! e.is_loop())
                left_at[e.v].push_back(static_cast<int>(a));
        }
        for (size_t b = 0; b < right.size(); ++b) {
            auto & e = g.edge(right[b]);
            right_at[e.u].push_back(static_cast<int>(b));
            if (! e.is_loop())
                right_at[e.v].push_back(static_cast<int>(b));
        }

        vector<vector<int>> adj(left.size());
        for (Vertex v = 0; v < g.order(); ++v)
            for (auto a : left_at[v])
                for (auto b : right_at[v])
                    adj[a].push_back(b);
        for (auto & list : adj) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }

        // Augmenting paths, then the alternating-reachability cover.
        vector<int> match_left(left.size(), -1), match_right(right.size(), -1);
        vector<char> seen;
        std::function<bool(int)> augment = [&](int a) -> bool {
            for (auto b : adj[a]) {
                if (seen[b])
                    continue;
                seen[b] = 1;
                if (match_right[b] == -1 || augment(match_right[b])) {
                    match_left[a] = b;
                    match_right[b] = a;
                    return true;
                }
            }
            return false;
        };
        for (size_t a = 0; a < left.size(); ++a) {
            seen.assign(right.size(), 0);
            augment(static_cast<int>(a));
        }

        vector<char> reach_left(left.size(), 0), reach_right(right.size(), 0);
        std::deque<int> queue;
        for (size_t a = 0; a < left.size(); ++a)
            if (match_left[a] == -1) {
                reach_left[a] = 1;
                queue.push_back(static_cast<int>(a));
            }
        while (! queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            for (auto b : adj[a])
                if (! reach_right[b] && match_left[a] != b) {
                    reach_right[b] = 1;
                    int next = match_right[b];
                    if (next != -1 && ! reach_left[next]) {
                        reach_left[next] = 1;
                        queue.push_back(next);
                    }
                }
        }

        vector<int> green_hits(g.size(), 0);
        auto cover = [&](size_t edge) {
            if (! green[edge])
                certificate.push_back(static_cast<int>(edge));
            else if (++green_hits[edge] == 2)
                certificate.push_back(static_cast<int>(edge));
        };
        for (size_t a = 0; a < left.size(); ++a)
            if (! reach_left[a])
                cover(left[a]);
        for (size_t b = 0; b < right.size(); ++b)
            if (reach_right[b])
                cover(right[b]);
        std::sort(certificate.begin(), certificate.end());

        Solution s = make_solution(ProblemKind::EdgeDeletion, "edel-bipartite-vertex-cover");
        if (static_cast<int>(certificate.size()) <= k)
            accept(s, g, h, certificate);
        return s;
    }

    auto solve_edel(const ColouredGraph & g, const Target & h, int k, const SolveOptions & options) -> Solution
    {
        require_budget(k);
        if (options.force_xp)
            return solve_xp(ProblemKind::EdgeDeletion, g, h, k, { XpHomTest::Auto, false, options.strict_exact_k });

        auto reduced = reduce_target(h);
        if (! reduced.usable) {
            auto s = solve_xp(ProblemKind::EdgeDeletion, g, h, k, { XpHomTest::Auto, false, options.strict_exact_k });
            s.fell_back_to_xp = true;
            return s;
        }

        Solution s = make_solution(ProblemKind::EdgeDeletion, "almost-2sat-group-deletion");
        vector<int> set;
        if (classify_edel(reduced.target).classical == Classical::PTime) {
            auto fast = solve_edel_ptime(g, reduced.target, k);
            if (! fast.answer) {
                fast.method = "edel-bipartite-vertex-cover";
                return fast;
            }
            s.method = fast.method;
            set.assign(fast.edges.begin(), fast.edges.end());
        }
        else {
            auto encoded = build_2sat(g, reduced.target, Encoding::EdgeGroups);
            auto deleted = group_del_almost_2sat(encoded.formula, k);
            if (! deleted)
                return s;
            set.assign(deleted->begin(), deleted->end());
        }

        if (options.strict_exact_k) {
            auto padded = pad(set, k, static_cast<int>(g.size()));
            if (! padded)
                return s;
            set = *padded;
        }
        accept(s, g, h, set);
        return s;
    }

    namespace
    {
        using Witness = std::function<optional<vector<Vertex>>(const ColouredGraph &)>;

        // Iterative deepening over switch sets. Every solution must switch one
        // of the branch vertices of the current witness, so the search is
        // complete; all hits at the first successful depth are compared.
        auto bounded_switch_search(const ColouredGraph & g, int k, const Witness & witness) -> optional<vector<Vertex>>
        {
            optional<vector<Vertex>> best;
            vector<Vertex> chosen;
            std::function<void(const ColouredGraph &, int)> explore = [&](const ColouredGraph & current, int remaining) {
                auto branch = witness(current);
                if (! branch) {
                    auto sorted = chosen;
                    std::sort(sorted.begin(), sorted.end());
                    if (! best || sorted < *best)
                        best = sorted;
                    return;
                }
                if (remaining == 0)
                    return;
                for (auto v : *branch) {
                    if (std::find(chosen.begin(), chosen.end(), v) != chosen.end())
                        continue;
                    chosen.push_back(v);
                    explore(switch_at(current, v), remaining - 1);
                    chosen.pop_back();
                }
            };

            for (int depth = 0; depth <= std::min(k, g.order()); ++depth) {
                explore(g, depth);
                if (best)
                    return best;
            }
            return std::nullopt;
        }

        auto distinct_sorted(vector<Vertex> vs) -> vector<Vertex>
        {
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            return vs;
        }

        auto per_component_monochromatic(const ColouredGraph & g) -> optional<vector<Vertex>>
        {
            vector<Vertex> result;
            for (auto & comp : connected_components(g)) {
                vector<Vertex> others;
                for (Vertex v = 0, i = 0; v < g.order(); ++v) {
                    if (i < static_cast<Vertex>(comp.size()) && comp[i] == v)
                        ++i;
                    else
                        others.push_back(v);
                }
                auto sub = delete_vertices(g, others);
                auto to_red = min_switch_to_monochromatic(sub.graph, Colour::red());
                auto to_blue = min_switch_to_monochromatic(sub.graph, Colour::blue());
                if (! to_red && ! to_blue)
                    return std::nullopt;

                vector<Vertex> pick;
                if (to_red && to_blue)
                    pick = (to_red->size() < to_blue->size() || (to_red->size() == to_blue->size() && *to_red <= *to_blue)) ? *to_red : *to_blue;
                else
                    pick = to_red ? *to_red : *to_blue;
                for (auto v : pick)
                    result.push_back(sub.original[v]);
            }
            std::sort(result.begin(), result.end());
            return result;
        }
    }

    auto solve_switch(const ColouredGraph & g, const Target & h, int k, const SolveOptions & options) -> Solution
    {
        require_budget(k);
        if (! g.is_two_edge_coloured() || ! h.graph().is_two_edge_coloured())
            throw DomainError{ "switching needs an instance and target coloured with r and b" };

        if (options.force_xp || options.strict_exact_k)
            return solve_xp(ProblemKind::Switching, g, h, k, { XpHomTest::Auto, false, options.strict_exact_k });

        auto reduced = reduce_target(h);
        if (! reduced.usable) {
            auto s = solve_xp(ProblemKind::Switching, g, h, k);
            s.fell_back_to_xp = true;
            return s;
        }

        auto & match = reduced.target.core_match();
        if (! match) {
            auto s = solve_xp(ProblemKind::Switching, g, h, k);
            s.fell_back_to_xp = true;
            return s;
        }

        // Switch sets commute with exchanging the two colours.
        auto instance = match->colours_swapped ? swap_colours(g, Colour::red(), Colour::blue()) : g;
        auto & name = match->name;
        Solution s = make_solution(ProblemKind::Switching, "switch-" + name);

        auto finish = [&](const optional<vector<Vertex>> & set) -> Solution {
            if (set && static_cast<int>(set->size()) <= k)
                accept(s, g, h, vector<int>(set->begin(), set->end()));
            return s;
        };

        if (name == "H1_rb")
            return finish(vector<Vertex>{});
        if (name == "H1_-")
            return finish(g.size() == 0 ? optional<vector<Vertex>>{ vector<Vertex>{} } : std::nullopt);
        if (name == "H1_b")
            return finish(min_switch_to_monochromatic(instance, Colour::blue()));
        if (name == "H2-_r,b")
            return finish(per_component_monochromatic(instance));
        if (name == "H2rb_-,-")
            return finish(is_bipartite(instance) ? optional<vector<Vertex>>{ vector<Vertex>{} } : std::nullopt);
        if (name == "H2b_-,-") {
            if (! is_bipartite(instance))
                return s;
            return finish(min_switch_to_monochromatic(instance, Colour::blue()));
        }
        if (name == "H2b_r,r")
            return finish(find_odd_blue_parity_cycle(instance) ? std::nullopt : optional<vector<Vertex>>{ vector<Vertex>{} });
        if (name == "H2b_r,b")
            return finish(bounded_switch_search(instance, k, [](const ColouredGraph & c) -> optional<vector<Vertex>> {
                auto w = find_rbr_image(c);
                if (! w)
                    return std::nullopt;
                return distinct_sorted(w->walk);
            }));
        if (name == "H2b_r,-") {
            if (find_odd_blue_parity_cycle(instance))
                return s;
            return finish(bounded_switch_search(instance, k, [](const ColouredGraph & c) -> optional<vector<Vertex>> {
                auto w = find_rb_odd_r_path(c);
                if (! w)
                    return std::nullopt;
                auto & walk = w->walk;
                return distinct_sorted({ walk[0], walk[1], walk[walk.size() - 2], walk[walk.size() - 1] });
            }));
        }

        // The three remaining cores are W[1]-hard; enumerate with the 2-SAT
        // test and core pruning.
        auto xp = solve_xp(ProblemKind::Switching, g, reduced.target, k, { XpHomTest::TwoSat, true, false });
        s.method = "switch-xp-" + name;
        if (xp.answer)
            accept(s, g, h, vector<int>(xp.vertices.begin(), xp.vertices.end()));
        return s;
    }

    auto solve(ProblemKind problem, const ColouredGraph & g, const Target & h, int k, const SolveOptions & options) -> Solution
    {
        switch (problem) {
            case ProblemKind::VertexDeletion: return solve_vdel(g, h, k, options);
            case ProblemKind::EdgeDeletion: return solve_edel(g, h, k, options);
            case ProblemKind::Switching: return solve_switch(g, h, k, options);
        }
        throw ArgumentError{ "unknown problem kind" };
    }

    auto apply_certificate(const ColouredGraph & g, const Solution & s) -> Replayed
    {
        vector<int> set;
        if (s.problem == ProblemKind::EdgeDeletion)
            set.assign(s.edges.begin(), s.edges.end());
        else
            set.assign(s.vertices.begin(), s.vertices.end());
        auto m = modify(s.problem, g, set);

        Replayed result{ std::move(m.graph), vector<Vertex>(g.order(), -1) };
        for (size_t i = 0; i < m.original_vertex.size(); ++i)
            result.new_index[m.original_vertex[i]] = static_cast<Vertex>(i);
        return result;
    }

    auto verify_solution(const ColouredGraph & g, const Target & h, int k, const Solution & s) -> bool
    {
        if (! s.answer)
            return s.vertices.empty() && s.edges.empty() && ! s.homomorphism;

        auto size = s.problem == ProblemKind::EdgeDeletion ? s.edges.size() : s.vertices.size();
        if (static_cast<int>(size) > k || static_cast<int>(size) != s.budget_used || ! s.homomorphism)
            return false;

        auto replayed = apply_certificate(g, s);
        if (s.homomorphism->map.size() != static_cast<size_t>(g.order()))
            return false;
        vector<Vertex> map(replayed.graph.order(), -1);
        for (Vertex v = 0; v < g.order(); ++v) {
            auto n = replayed.new_index[v];
            if ((n == -1) != (s.homomorphism->map[v] == -1))
                return false;
            if (n != -1)
                map[n] = s.homomorphism->map[v];
        }
        return is_homomorphism(replayed.graph, h, map) && hom_exists_bruteforce(replayed.graph, h).has_value();
    }
}
