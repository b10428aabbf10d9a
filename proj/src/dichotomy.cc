#include <ecmod/dichotomy.hh>
#include <ecmod/error.hh>
#include <ecmod/homcheck.hh>

#include <algorithm>
#include <set>

using std::optional;
using std::string;
using std::vector;

namespace ecmod
{
    namespace
    {
        auto induced(const ColouredGraph & g, const vector<Vertex> & keep) -> ColouredGraph
        {
            vector<Vertex> index(g.order(), -1);
            for (size_t i = 0; i < keep.size(); ++i)
                index[keep[i]] = static_cast<Vertex>(i);
            ColouredGraph result(static_cast<int>(keep.size()));
            for (auto & e : g.edges())
                if (index[e.u] != -1 && index[e.v] != -1)
                    result.add_edge(index[e.u], index[e.v], e.colour);
            return result;
        }

        auto swapped_vertices(const ColouredGraph & g) -> ColouredGraph
        {
            ColouredGraph result(g.order());
            for (auto & e : g.edges())
                result.add_edge(g.order() - 1 - e.u, g.order() - 1 - e.v, e.colour);
            return result;
        }

        auto next_combination(vector<Vertex> & c, int n) -> bool
        {
            int k = static_cast<int>(c.size());
            for (int i = k - 1; i >= 0; --i)
                if (c[i] < n - k + i) {
                    ++c[i];
                    for (int j = i + 1; j < k; ++j)
                        c[j] = c[j - 1] + 1;
                    return true;
                }
            return false;
        }

        auto has_all_loops(const Target & h, const vector<Colour> & colours) -> bool
        {
            for (Vertex v = 0; v < h.order(); ++v)
                if (std::all_of(colours.begin(), colours.end(), [&](const Colour & c) { return h.has_edge(v, v, c); }))
                    return true;
            return false;
        }

        auto core_or_nothing(const Target & h) -> optional<Core>
        {
            if (h.order() > 4)
                return std::nullopt;
            return compute_core(h);
        }

        auto hard_fallback(Classification & c, const Target & h) -> void
        {
            if (is_known_hard_colouring_target(h)) {
                c.classical = Classical::NPComplete;
                c.parameterized = Parameterized::NotInXP;
                c.source = "hcolouring-np-complete-at-k0";
            }
            else
                c.source = "open-beyond-order-2";
        }
    }

    auto compute_core(const Target & h) -> Core
    {
        int n = h.order();
        if (n > 4)
            throw SizeError{ "core computation is limited to targets with at most four vertices" };

        for (int s = 1; s <= n; ++s) {
            vector<Vertex> subset(s);
            for (int i = 0; i < s; ++i)
                subset[i] = i;
            do {
                Target candidate{ induced(h.graph(), subset) };
                auto hom = hom_exists_bruteforce(h.graph(), candidate);
                if (! hom)
                    continue;

                Core result{ candidate, subset, hom->map };
                auto & match = candidate.core_match();
                if (s == 2 && match && ! match->colours_swapped && match->vertices_swapped) {
                    result.core = Target{ swapped_vertices(candidate.graph()) };
                    std::swap(result.embedding[0], result.embedding[1]);
                    for (auto & v : result.retraction)
                        v = 1 - v;
                }
                return result;
            } while (next_combination(subset, n));
        }
        throw ContractError{ "a target always retracts to itself" };
    }

    auto to_string(Classical c) -> string
    {
        switch (c) {
            case Classical::PTime: return "PTime";
            case Classical::NPComplete: return "NP-complete";
            case Classical::Unknown: return "unknown";
        }
        return "?";
    }

    auto to_string(Parameterized p) -> string
    {
        switch (p) {
            case Parameterized::FPT: return "FPT";
            case Parameterized::W1Hard: return "W[1]-hard";
            case Parameterized::XPOnly: return "XP";
            case Parameterized::NotInXP: return "not-in-XP";
            case Parameterized::Unknown: return "unknown";
        }
        return "?";
    }

    auto is_known_hard_colouring_target(const Target & h) -> bool
    {
        auto & g = h.graph();
        if (g.colours().size() != 1 || h.order() < 3)
            return false;
        for (auto & e : g.edges())
            if (e.is_loop())
                return false;

        auto inc = g.incidence();
        int n = h.order();
        auto m = static_cast<long>(g.size());
        if (m == static_cast<long>(n) * (n - 1) / 2)
            return true;

        bool two_regular = std::all_of(inc.begin(), inc.end(), [](auto & es) { return es.size() == 2; });
        return n % 2 == 1 && m == n && two_regular && connected_components(g).size() == 1;
    }

    auto classify_vdel(const Target & h, const optional<vector<Colour>> & ambient_colours) -> Classification
    {
        Classification c{ ProblemKind::VertexDeletion, h, std::nullopt, Classical::Unknown, Parameterized::Unknown, {}, std::nullopt };

        auto own = h.colours();
        vector<Colour> ambient;
        if (ambient_colours) {
            ambient = *ambient_colours;
            std::sort(ambient.begin(), ambient.end());
            ambient.erase(std::unique(ambient.begin(), ambient.end()), ambient.end());
        }
        else if (h.graph().is_two_edge_coloured())
            ambient = { Colour::blue(), Colour::red() };
        else
            ambient = own;

        bool ptime = has_all_loops(h, ambient);
        c.classical = ptime ? Classical::PTime : Classical::NPComplete;
        if (own != ambient && has_all_loops(h, own) != ptime)
            c.alternative_classical = has_all_loops(h, own) ? Classical::PTime : Classical::NPComplete;
        c.source = "vdel-all-loops-dichotomy";

        auto core = core_or_nothing(h);
        if (core)
            c.core_name = core->core.canonical_name();

        if (ptime)
            c.parameterized = Parameterized::FPT;
        else if (h.order() <= 2 || (core && core->core.order() <= 2)) {
            c.parameterized = Parameterized::FPT;
            c.source += ",order2-almost-2sat-fpt";
        }
        else if (is_known_hard_colouring_target(core ? core->core : h)) {
            c.parameterized = Parameterized::NotInXP;
            c.source += ",hcolouring-np-complete-at-k0";
        }
        return c;
    }

    auto classify_edel(const Target & h) -> Classification
    {
        Classification c{ ProblemKind::EdgeDeletion, h, std::nullopt, Classical::Unknown, Parameterized::Unknown, {}, std::nullopt };
        auto core = core_or_nothing(h);
        if (! core || core->core.order() > 2) {
            hard_fallback(c, core ? core->core : h);
            return c;
        }

        auto & k = core->core;
        c.core_name = k.canonical_name();
        bool ptime = true;
        for (auto & colour : k.colours()) {
            bool loops_only = true;
            for (auto & e : k.graph().edges())
                if (e.colour == colour && ! e.is_loop())
                    loops_only = false;
            bool all_three = k.order() == 1
                || (k.has_edge(0, 0, colour) && k.has_edge(0, 1, colour) && k.has_edge(1, 1, colour));
            if (! loops_only && ! all_three)
                ptime = false;
        }

        c.classical = ptime ? Classical::PTime : Classical::NPComplete;
        c.parameterized = Parameterized::FPT;
        c.source = "edel-loops-or-complete-dichotomy,order2-group-almost-2sat-fpt";
        return c;
    }

    auto classify_switch(const Target & h) -> Classification
    {
        if (! h.graph().is_two_edge_coloured())
            throw DomainError{ "switching is only defined for targets coloured with r and b" };

        Classification c{ ProblemKind::Switching, h, std::nullopt, Classical::Unknown, Parameterized::Unknown, {}, std::nullopt };
        auto core = core_or_nothing(h);
        if (! core || core->core.order() > 2) {
            hard_fallback(c, core ? core->core : h);
            return c;
        }

        c.core_name = core->core.canonical_name();
        if (! c.core_name) {
            c.source = "unmatched-order-2-core";
            return c;
        }

        static const std::set<string> fpt_hard = { "H2b_r,b", "H2b_r,-" };
        static const std::set<string> w1_hard = { "H2rb_r,b", "H2rb_r,-", "H2rb_r,r" };
        if (fpt_hard.contains(*c.core_name)) {
            c.classical = Classical::NPComplete;
            c.parameterized = Parameterized::FPT;
            c.source = "switch-order2-dichotomy,switch-bounded-search-fpt";
        }
        else if (w1_hard.contains(*c.core_name)) {
            c.classical = Classical::NPComplete;
            c.parameterized = Parameterized::W1Hard;
            c.source = "switch-order2-dichotomy,switch-multicoloured-independent-set-w1";
        }
        else {
            c.classical = Classical::PTime;
            c.parameterized = Parameterized::FPT;
            c.source = "switch-order2-dichotomy";
        }
        return c;
    }

    auto classify(ProblemKind problem, const Target & h) -> Classification
    {
        switch (problem) {
            case ProblemKind::VertexDeletion: return classify_vdel(h);
            case ProblemKind::EdgeDeletion: return classify_edel(h);
            case ProblemKind::Switching: return classify_switch(h);
        }
        throw ArgumentError{ "unknown problem kind" };
    }

    auto to_record(const Classification & c) -> string
    {
        auto name = target_name(c.target);
        string result = "problem=" + to_string(c.problem);
        result += " target=" + (name ? *name : "order-" + std::to_string(c.target.order()));
        result += " core=" + (c.core_name ? *c.core_name : "-");
        result += " classical=" + to_string(c.classical);
        result += " parameterized=" + to_string(c.parameterized);
        if (c.alternative_classical)
            result += " classical_target_colours=" + to_string(*c.alternative_classical);
        result += " source=" + c.source;
        return result;
    }
}
