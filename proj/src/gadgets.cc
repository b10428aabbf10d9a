#include <ecmod/error.hh>
#include <ecmod/gadgets.hh>
#include <ecmod/homcheck.hh>

#include <algorithm>
#include <set>
#include <sstream>

using std::string;
using std::vector;

namespace ecmod
{
    using std::to_string;

    namespace
    {
        struct Builder
        {
            ColouredGraph graph;
            vector<string> vertex_label;
            vector<string> edge_label;

            auto vertex(const string & label) -> Vertex
            {
                vertex_label.push_back(label);
                return graph.add_vertex();
            }

            auto edge(Vertex u, Vertex v, const Colour & c, const string & label) -> void
            {
                graph.add_edge(u, v, c);
                edge_label.push_back(label);
            }
        };

        auto colour_if(bool red) -> Colour
        {
            return red ? Colour::red() : Colour::blue();
        }

        /// Copies piece into b. fixed[w] >= 0 identifies piece vertex w with an
        /// existing vertex; the rest are created with the prefix on their label.
        auto embed(Builder & b, const ColouredGraph & piece, const vector<string> & labels, vector<Vertex> fixed, const string & prefix) -> vector<Vertex>
        {
            for (Vertex w = 0; w < piece.order(); ++w)
                if (fixed[w] < 0)
                    fixed[w] = b.vertex(prefix + "." + labels[w]);
            for (auto & e : piece.edges())
                b.edge(fixed[e.u], fixed[e.v], e.colour, prefix);
            return fixed;
        }

        auto maps(const ColouredGraph & g, LoopKind x) -> bool
        {
            return hom_exists_2sat(g, mis_target(x)).has_value();
        }

        auto girth_at_least(const ColouredGraph & g, int q) -> bool
        {
            auto gi = girth(g);
            return ! gi || *gi >= q;
        }

        auto show(const vector<Vertex> & vs) -> string
        {
            std::ostringstream s;
            s << '{';
            for (size_t i = 0; i < vs.size(); ++i)
                s << (i ? "," : "") << vs[i];
            s << '}';
            return s.str();
        }

        auto finish_vc(Builder & b, ProblemKind problem, const string & target, int k, int n) -> ReducedInstance
        {
            ReducedInstance r;
            r.problem = problem;
            r.target = parse_target_name(target);
            r.budget = k;
            r.source_vertex.assign(b.graph.order(), -1);
            for (int v = 0; v < n; ++v)
                r.source_vertex[v] = v;
            r.instance = std::move(b.graph);
            r.vertex_label = std::move(b.vertex_label);
            r.edge_label = std::move(b.edge_label);
            return r;
        }

        auto start_vc(const VcInstance & vc, const Colour & copy_colour) -> Builder
        {
            vc.graph.validate();
            if (vc.k < 0)
                throw ArgumentError{ "budget must be non-negative" };
            Builder b;
            for (int v = 0; v < vc.graph.n; ++v)
                b.vertex("v" + to_string(v));
            for (int v = 0; v < vc.graph.n; ++v)
                b.vertex("v" + to_string(v) + "'");
            for (auto [u, v] : vc.graph.edges)
                b.edge(u, v, copy_colour, "v" + to_string(u) + "v" + to_string(v));
            return b;
        }

        auto edge_name(int u, int v) -> string
        {
            return "edge(" + to_string(u) + "," + to_string(v) + ")";
        }
    }

    auto SimpleGraph::validate() const -> void
    {
        if (n < 0)
            throw ArgumentError{ "vertex count must be non-negative" };
        std::set<std::pair<int, int>> seen;
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ArgumentError{ "edge endpoint out of range" };
            if (u == v)
                throw ArgumentError{ "simple graphs have no loops" };
            if (! seen.emplace(std::min(u, v), std::max(u, v)).second)
                throw ArgumentError{ "simple graphs have no parallel edges" };
        }
    }

    auto MisInstance::validate() const -> void
    {
        graph.validate();
        vector<int> owner(graph.n, -1);
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].empty())
                throw ArgumentError{ "parts must be non-empty" };
            for (auto v : parts[i]) {
                if (v < 0 || v >= graph.n)
                    throw ArgumentError{ "part member out of range" };
                if (owner[v] != -1)
                    throw ArgumentError{ "vertex " + to_string(v) + " is in two parts" };
                owner[v] = static_cast<int>(i);
            }
        }
        if (std::find(owner.begin(), owner.end(), -1) != owner.end())
            throw ArgumentError{ "parts do not cover every vertex" };
    }

    auto gen_vc_edel_h2b_rb(const VcInstance & vc) -> ReducedInstance
    {
        auto b = start_vc(vc, Colour::blue());
        int n = vc.graph.n;
        for (int v = 0; v < n; ++v)
            b.edge(v, n + v, Colour::red(), "pendant(" + to_string(v) + ")");
        return finish_vc(b, ProblemKind::EdgeDeletion, "H2b_r,b", vc.k, n);
    }

    auto gen_vc_edel_h2rb_rb(const VcInstance & vc) -> ReducedInstance
    {
        auto b = start_vc(vc, Colour::red());
        int n = vc.graph.n;
        for (int v = 0; v < n; ++v)
            b.edge(v, n + v, Colour::blue(), "pendant(" + to_string(v) + ")");
        for (auto [u, v] : vc.graph.edges) {
            auto name = edge_name(u, v);
            auto x = b.vertex(name + ".x");
            auto y = b.vertex(name + ".y");
            auto z = b.vertex(name + ".z");
            b.edge(n + u, x, Colour::red(), name + ".u'x");
            b.edge(n + v, x, Colour::red(), name + ".v'x");
            b.edge(y, z, Colour::red(), name + ".yz");
            b.edge(x, y, Colour::blue(), name + ".xy");
            b.edge(x, z, Colour::blue(), name + ".xz");
        }
        return finish_vc(b, ProblemKind::EdgeDeletion, "H2rb_r,b", vc.k, n);
    }

    auto gen_vc_switch_h2b_rdash(const VcInstance & vc) -> ReducedInstance
    {
        auto b = start_vc(vc, Colour::red());
        int n = vc.graph.n;
        for (int v = 0; v < n; ++v) {
            b.edge(v, n + v, Colour::blue(), "pendant(" + to_string(v) + ")");
            b.edge(n + v, n + v, Colour::red(), "loop(" + to_string(v) + ")");
        }
        return finish_vc(b, ProblemKind::Switching, "H2b_r,-", vc.k, n);
    }

    auto to_string(LoopKind x) -> string
    {
        switch (x) {
            case LoopKind::Red: return "r";
            case LoopKind::Blue: return "b";
            case LoopKind::None: return "-";
        }
        return "?";
    }

    auto parse_loop_kind(const string & s) -> LoopKind
    {
        if (s == "r")
            return LoopKind::Red;
        if (s == "b")
            return LoopKind::Blue;
        if (s == "-")
            return LoopKind::None;
        throw ArgumentError{ "gadget family must be r, b or -, not '" + s + "'" };
    }

    auto mis_target(LoopKind x) -> Target
    {
        return parse_target_name("H2rb_r," + to_string(x));
    }

    auto partition_gadget(LoopKind x, int q, int part_size) -> PartitionGadget
    {
        if (q < 3)
            throw ArgumentError{ "q must be at least 3" };
        if (part_size < 1)
            throw ArgumentError{ "parts must be non-empty" };

        Builder b;
        PartitionGadget result;
        int s = part_size;

        if (x != LoopKind::Blue) {
            // Blue chord c_0..c_{s-1} with two blue paths of length half
            // between its ends; half has the parity of s, so chord plus either
            // path is an odd cycle.
            int half = (q % 2 == s % 2) ? q : q + 1;
            for (int j = 0; j < s; ++j)
                result.special.push_back(b.vertex("chord" + to_string(j)));
            for (int j = 0; j + 1 < s; ++j)
                b.edge(j, j + 1, Colour::blue(), "chord");
            for (int side = 0; side < 2; ++side) {
                Vertex prev = 0;
                for (int t = 1; t < half; ++t) {
                    auto w = b.vertex("side" + to_string(side) + "." + to_string(t));
                    b.edge(prev, w, Colour::blue(), "side" + to_string(side));
                    prev = w;
                }
                b.edge(prev, s - 1, Colour::blue(), "side" + to_string(side));
            }
        }
        else {
            // Two alternating odd cycles, each with an alternating odd cycle
            // hanging at its double-red vertex, glued along a path of s
            // vertices opposite that vertex.
            int cycle = (s + q) % 2 == 1 ? s + q : s + q + 1;
            int small = q % 2 == 1 ? q : q + 1;
            int d = (cycle - s + 1) / 2;

            for (int j = 0; j < s; ++j)
                result.special.push_back(b.vertex("chord" + to_string(j)));
            for (int j = 0; j + 1 < s; ++j)
                b.edge(j, j + 1, colour_if((d + j) % 2 == 0), "chord");

            for (int copy = 0; copy < 2; ++copy) {
                auto prefix = "copy" + to_string(copy);
                vector<Vertex> w(cycle);
                for (int i = 0; i < cycle; ++i)
                    w[i] = (i >= d && i < d + s) ? i - d : b.vertex(prefix + ".w" + to_string(i));
                for (int i = 0; i < cycle; ++i) {
                    bool on_chord = i >= d && i + 1 < d + s;
                    if (! on_chord)
                        b.edge(w[i], w[(i + 1) % cycle], colour_if(i % 2 == 0), prefix + ".cycle");
                }
                Vertex prev = w[0];
                for (int i = 0; i < small; ++i) {
                    Vertex next = i + 1 < small ? b.vertex(prefix + ".y" + to_string(i + 1)) : w[0];
                    b.edge(prev, next, colour_if(i % 2 == 1), prefix + ".hang");
                    prev = next;
                }
            }
        }

        result.graph = std::move(b.graph);
        result.vertex_label = std::move(b.vertex_label);
        return result;
    }

    auto edge_gadget(LoopKind x, int q) -> EdgeGadget
    {
        if (q < 3)
            throw ArgumentError{ "q must be at least 3" };

        Builder b;
        EdgeGadget result;
        switch (x) {
            case LoopKind::Red: {
                // All-blue (2q+1)-cycle switched at c_0 and c_q.
                int len = 2 * q + 1;
                for (int i = 0; i < len; ++i)
                    b.vertex("c" + to_string(i));
                for (int i = 0; i < len; ++i) {
                    int j = (i + 1) % len;
                    bool touched = i == 0 || j == 0 || i == q || j == q;
                    b.edge(i, j, colour_if(touched), "cycle");
                }
                result.u = 0;
                result.v = q;
                break;
            }
            case LoopKind::None: {
                int len = std::max(q, 5);
                if (len % 2 == 0)
                    ++len;
                for (int i = 0; i <= len; ++i)
                    b.vertex("p" + to_string(i));
                for (int i = 0; i < len; ++i)
                    b.edge(i, i + 1, colour_if(i < 2 || i >= len - 2), "path");
                result.u = 0;
                result.v = len;
                break;
            }
            case LoopKind::Blue: {
                // Alternating (2q+1)-cycles A (double red at a_0) and B (double
                // blue at a_0), then A switched at u and v, placed symmetrically
                // about a_0 at distance q from each other.
                int len = 2 * q + 1;
                for (int i = 0; i < len; ++i)
                    b.vertex("a" + to_string(i));
                Vertex u = (q + 1) / 2, v = len - u;
                for (int i = 0; i < len; ++i) {
                    int j = (i + 1) % len;
                    bool red = i % 2 == 0;
                    if (i == u || j == u || i == v || j == v)
                        red = ! red;
                    b.edge(i, j, colour_if(red), "cycleA");
                }
                Vertex prev = 0;
                for (int i = 0; i < len; ++i) {
                    Vertex next = i + 1 < len ? b.vertex("b" + to_string(i + 1)) : 0;
                    b.edge(prev, next, colour_if(i % 2 == 1), "cycleB");
                    prev = next;
                }
                result.u = u;
                result.v = v;
                break;
            }
        }
        result.graph = std::move(b.graph);
        result.vertex_label = std::move(b.vertex_label);
        return result;
    }

    auto gen_mis_switch(const MisInstance & mis, LoopKind x, int q) -> ReducedInstance
    {
        if (q < 3)
            throw ArgumentError{ "q must be at least 3" };
        mis.validate();

        Builder b;
        for (int v = 0; v < mis.graph.n; ++v)
            b.vertex("v" + to_string(v));

        for (size_t i = 0; i < mis.parts.size(); ++i) {
            auto gadget = partition_gadget(x, q, static_cast<int>(mis.parts[i].size()));
            vector<Vertex> fixed(gadget.graph.order(), -1);
            for (size_t j = 0; j < gadget.special.size(); ++j)
                fixed[gadget.special[j]] = mis.parts[i][j];
            embed(b, gadget.graph, gadget.vertex_label, fixed, "part" + to_string(i));
        }

        auto gadget = edge_gadget(x, q);
        for (auto [u, v] : mis.graph.edges) {
            vector<Vertex> fixed(gadget.graph.order(), -1);
            fixed[gadget.u] = u;
            fixed[gadget.v] = v;
            embed(b, gadget.graph, gadget.vertex_label, fixed, edge_name(u, v));
        }

        ReducedInstance r;
        r.problem = ProblemKind::Switching;
        r.target = mis_target(x);
        r.budget = static_cast<int>(mis.parts.size());
        r.source_vertex.assign(b.graph.order(), -1);
        for (int v = 0; v < mis.graph.n; ++v)
            r.source_vertex[v] = v;
        r.instance = std::move(b.graph);
        r.vertex_label = std::move(b.vertex_label);
        r.edge_label = std::move(b.edge_label);
        return r;
    }

    auto GadgetReport::all_passed() const -> bool
    {
        return std::all_of(properties.begin(), properties.end(), [](const PropertyResult & p) { return p.passed; });
    }

    auto verify_gadget_properties(LoopKind x, int q, int part_size) -> GadgetReport
    {
        if (q < 3)
            throw ArgumentError{ "q must be at least 3" };
        if (part_size < 1)
            throw ArgumentError{ "part size must be at least 1" };
        if (q > 6 || part_size > 4)
            throw SizeError{ "gadget checks need q <= 6 and part_size <= 4" };

        GadgetReport report;
        report.x = x;
        report.q = q;
        report.part_size = part_size;
        auto add = [&](const string & name, bool passed, const string & witness = "") {
            report.properties.push_back(PropertyResult{ name, passed, passed ? "" : witness });
        };

        auto part = partition_gadget(x, q, part_size);
        auto edge = edge_gadget(x, q);
        auto & pg = part.graph;

        add("P1", ! maps(pg, x), "partition gadget maps without switching");

        string p2_witness;
        for (Vertex w = 0; w < pg.order() && p2_witness.empty(); ++w) {
            bool special = std::find(part.special.begin(), part.special.end(), w) != part.special.end();
            if (maps(switch_at(pg, w), x) != special)
                p2_witness = "switching vertex " + to_string(w) + " (" + part.vertex_label[w] + ")" + (special ? " does not map" : " maps");
        }
        add("P2", p2_witness.empty(), p2_witness);

        add("P3", girth_at_least(pg, q), "girth " + to_string(girth(pg).value_or(0)));

        string e1_witness;
        for (auto & s : vector<vector<Vertex>>{ {}, { edge.u }, { edge.v } })
            if (e1_witness.empty() && ! maps(switch_set(edge.graph, s), x))
                e1_witness = "switch set " + show(s) + " does not map";
        add("E1", e1_witness.empty(), e1_witness);

        // Two partition gadgets joined by one edge gadget between specials a and b.
        struct Composed
        {
            ColouredGraph graph;
            vector<Vertex> first, second;
        };
        auto compose = [&](int a, int b_index) {
            Builder b;
            vector<Vertex> none(pg.order(), -1);
            auto first = embed(b, pg, part.vertex_label, none, "part0");
            auto second = embed(b, pg, part.vertex_label, none, "part1");
            vector<Vertex> fixed(edge.graph.order(), -1);
            fixed[edge.u] = first[part.special[a]];
            fixed[edge.v] = second[part.special[b_index]];
            embed(b, edge.graph, edge.vertex_label, fixed, "edge");
            Composed c{ std::move(b.graph), {}, {} };
            for (auto w : part.special) {
                c.first.push_back(first[w]);
                c.second.push_back(second[w]);
            }
            return c;
        };

        string e2_witness;
        for (int a = 0; a < part_size && e2_witness.empty(); ++a)
            for (int bi = 0; bi < part_size && e2_witness.empty(); ++bi) {
                auto c = compose(a, bi);
                vector<Vertex> s{ c.first[a], c.second[bi] };
                if (maps(switch_set(c.graph, s), x))
                    e2_witness = "specials " + to_string(a) + " and " + to_string(bi) + " switched, still maps";
            }
        add("E2", e2_witness.empty(), e2_witness);

        add("E3", girth_at_least(edge.graph, q), "girth " + to_string(girth(edge.graph).value_or(0)));
        auto dist = distance(edge.graph, edge.u, edge.v);
        add("E4", ! dist || *dist >= q, "distance " + to_string(dist.value_or(-1)));

        // SP: three partition gadgets with edge gadgets p0-p1, p1-p2 and p0-p2
        // on their first specials, so a source vertex can be u twice, v twice
        // or both. For every valid set of specials the whole maps iff every
        // gadget maps on its own.
        string sp_witness;
        {
            Builder b;
            vector<Vertex> none(pg.order(), -1);
            vector<vector<Vertex>> specials;
            for (int i = 0; i < 3; ++i) {
                auto placed = embed(b, pg, part.vertex_label, none, "part" + to_string(i));
                specials.emplace_back();
                for (auto w : part.special)
                    specials.back().push_back(placed[w]);
            }
            const vector<std::pair<int, int>> links{ { 0, 1 }, { 1, 2 }, { 0, 2 } };
            for (auto [i, j] : links) {
                vector<Vertex> fixed(edge.graph.order(), -1);
                fixed[edge.u] = specials[i][0];
                fixed[edge.v] = specials[j][0];
                embed(b, edge.graph, edge.vertex_label, fixed, "edge");
            }

            int total = 3 * part_size;
            for (int mask = 0; mask < (1 << total) && sp_witness.empty(); ++mask) {
                auto on = [&](int i, int j) { return (mask >> (i * part_size + j) & 1) != 0; };
                bool valid = std::none_of(links.begin(), links.end(), [&](auto l) { return on(l.first, 0) && on(l.second, 0); });
                if (! valid)
                    continue;
                vector<Vertex> s;
                bool pieces = true;
                for (int i = 0; i < 3; ++i) {
                    vector<Vertex> local;
                    for (int j = 0; j < part_size; ++j)
                        if (on(i, j)) {
                            s.push_back(specials[i][j]);
                            local.push_back(part.special[j]);
                        }
                    pieces = pieces && maps(switch_set(pg, local), x);
                }
                for (auto [i, j] : links) {
                    vector<Vertex> local;
                    if (on(i, 0))
                        local.push_back(edge.u);
                    if (on(j, 0))
                        local.push_back(edge.v);
                    pieces = pieces && maps(switch_set(edge.graph, local), x);
                }
                bool whole = maps(switch_set(b.graph, s), x);
                if (whole != pieces)
                    sp_witness = "switch set " + show(s) + (whole ? " maps although a gadget does not" : " fails although every gadget maps");
            }
        }
        add("SP", sp_witness.empty(), sp_witness);

        return report;
    }
}
