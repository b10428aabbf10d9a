#include <ecmod/error.hh>
#include <ecmod/homcheck.hh>

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
        // Colour-indexed adjacency of a target, with -1 for colours h lacks.
        struct TargetTable
        {
            int order;
            std::map<Colour, int> colour_id;
            vector<char> adjacent;

            explicit TargetTable(const Target & h) :
                order(h.order())
            {
                for (auto & c : h.colours())
                    colour_id.emplace(c, static_cast<int>(colour_id.size()));
                adjacent.assign(colour_id.size() * order * order, 0);
                for (auto & e : h.graph().edges()) {
                    int c = colour_id.at(e.colour);
                    adjacent[(c * order + e.u) * order + e.v] = 1;
                    adjacent[(c * order + e.v) * order + e.u] = 1;
                }
            }

            auto id(const Colour & c) const -> int
            {
                auto it = colour_id.find(c);
                return it == colour_id.end() ? -1 : it->second;
            }

            auto has(int c, Vertex a, Vertex b) const -> bool
            {
                return c >= 0 && adjacent[(c * order + a) * order + b];
            }
        };

        auto require_two_coloured(const ColouredGraph & g, const char * what) -> void
        {
            if (! g.is_two_edge_coloured())
                throw DomainError{ string(what) + " needs a graph coloured with r and b" };
        }

        auto joins(const Edge & e, Vertex a, Vertex b) -> bool
        {
            return (e.u == a && e.v == b) || (e.u == b && e.v == a);
        }
    }

    auto is_homomorphism(const ColouredGraph & g, const Target & h, const vector<Vertex> & map) -> bool
    {
        if (map.size() != static_cast<size_t>(g.order()))
            return false;
        for (auto v : map)
            if (v < 0 || v >= h.order())
                return false;
        TargetTable table(h);
        return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge & e) {
            return table.has(table.id(e.colour), map[e.u], map[e.v]);
        });
    }

    auto hom_exists_bruteforce(const ColouredGraph & g, const Target & h) -> optional<Homomorphism>
    {
        TargetTable table(h);
        int n = g.order();

        // Edges are checked at their later endpoint.
        vector<vector<std::pair<Vertex, int>>> back(n);
        for (auto & e : g.edges()) {
            int c = table.id(e.colour);
            if (c < 0)
                return std::nullopt;
            back[e.v].emplace_back(e.u, c);
        }

        vector<Vertex> map(n, -1);
        std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
            if (v == n)
                return true;
            for (Vertex a = 0; a < h.order(); ++a) {
                map[v] = a;
                bool ok = std::all_of(back[v].begin(), back[v].end(), [&](auto & p) {
                    return table.has(p.second, map[p.first], a);
                });
                if (ok && extend(v + 1))
                    return true;
            }
            map[v] = -1;
            return false;
        };

        if (! extend(0))
            return std::nullopt;
        return Homomorphism{ map };
    }

    namespace
    {
        struct Row
        {
            bool e00 = false, e01 = false, e11 = false;
        };

        auto row_for(const Target & h, const Colour & c) -> Row
        {
            Row r;
            if (h.order() == 1)
                r.e11 = h.has_edge(0, 0, c);
            else {
                r.e00 = h.has_edge(0, 0, c);
                r.e01 = h.has_edge(0, 1, c);
                r.e11 = h.has_edge(1, 1, c);
            }
            return r;
        }

        class Emitter
        {
        private:
            HomFormula & _out;
            size_t _edge;
            size_t _first;

        public:
            Emitter(HomFormula & out, size_t edge) :
                _out(out),
                _edge(edge),
                _first(out.formula.clauses.size())
            {
            }

            auto operator()(Literal a) -> void
            {
                _out.formula.add_clause(a);
                _out.clause_edge.push_back(_edge);
            }

            auto operator()(Literal a, Literal b) -> void
            {
                _out.formula.add_clause(a, b);
                _out.clause_edge.push_back(_edge);
            }

            auto emitted() const -> vector<size_t>
            {
                vector<size_t> result;
                for (size_t i = _first; i < _out.formula.clauses.size(); ++i)
                    result.push_back(i);
                return result;
            }
        };
    }

    auto build_2sat(const ColouredGraph & g, const Target & h, Encoding encoding) -> HomFormula
    {
        if (h.order() > 2)
            throw DomainError{ "2-SAT encoding needs a target with at most two vertices" };

        HomFormula result;
        result.formula.num_vars = g.order();
        if (encoding == Encoding::EdgeGroups)
            result.formula.groups.emplace();

        std::map<Colour, Row> rows;
        for (size_t i = 0; i < g.size(); ++i) {
            auto & e = g.edge(i);
            auto it = rows.find(e.colour);
            if (it == rows.end())
                it = rows.emplace(e.colour, row_for(h, e.colour)).first;
            auto & row = it->second;

            Emitter emit(result, i);
            int witness = e.u;
            Literal xu = pos(e.u), xv = pos(e.v);

            if (e.is_loop()) {
                if (! row.e00)
                    emit(xu);
                if (! row.e11)
                    emit(xu.negated());
            }
            else {
                bool single_loop = ! row.e01 && (row.e00 != row.e11);
                if (single_loop && encoding == Encoding::EdgeGroups) {
                    int c = result.formula.add_var();
                    auto lu = row.e11 ? xu : xu.negated(), lv = row.e11 ? xv : xv.negated();
                    emit(pos(c), lu);
                    emit(pos(c), lv);
                    emit(neg(c));
                    witness = c;
                }
                else if (single_loop && encoding == Encoding::VertexDeletion) {
                    if (row.e11) {
                        emit(xu, xv);
                        emit(xu, xv.negated());
                        emit(xu.negated(), xv);
                    }
                    else {
                        emit(xu.negated(), xv.negated());
                        emit(xu.negated(), xv);
                        emit(xu, xv.negated());
                    }
                }
                else if (single_loop) {
                    if (row.e11) {
                        emit(xu);
                        emit(xv);
                    }
                    else {
                        emit(xu.negated());
                        emit(xv.negated());
                    }
                }
                else if (! row.e00 && ! row.e01 && ! row.e11) {
                    if (encoding == Encoding::VertexDeletion) {
                        emit(xu, xv);
                        emit(xu, xv.negated());
                        emit(xu.negated(), xv);
                        emit(xu.negated(), xv.negated());
                    }
                    else {
                        emit(xu);
                        emit(xu.negated());
                    }
                }
                else if (row.e01 && ! row.e00 && ! row.e11) {
                    emit(xu, xv);
                    emit(xu.negated(), xv.negated());
                }
                else if (row.e01 && row.e00 && ! row.e11)
                    emit(xu.negated(), xv.negated());
                else if (row.e01 && ! row.e00 && row.e11)
                    emit(xu, xv);
                else if (! row.e01 && row.e00 && row.e11) {
                    emit(xu, xv.negated());
                    emit(xu.negated(), xv);
                }
            }

            if (encoding == Encoding::EdgeGroups) {
                auto clauses = emit.emitted();
                result.formula.groups->push_back(ClauseGroup{ clauses, clauses.empty() ? -1 : witness });
            }
        }
        return result;
    }

    auto decode_assignment(const ColouredGraph & g, const Target & h, const Assignment & a) -> vector<Vertex>
    {
        vector<Vertex> map(g.order(), 0);
        if (h.order() == 2)
            for (Vertex v = 0; v < g.order(); ++v)
                map[v] = a.values.at(v).value_or(false) ? 1 : 0;
        return map;
    }

    auto hom_exists_2sat(const ColouredGraph & g, const Target & h) -> optional<Homomorphism>
    {
        auto encoded = build_2sat(g, h, Encoding::Plain);
        auto a = solve_2sat(encoded.formula);
        if (! a)
            return std::nullopt;
        return Homomorphism{ decode_assignment(g, h, *a) };
    }

    auto to_string(ObstructionKind k) -> string
    {
        switch (k) {
            case ObstructionKind::RbrImage: return "RBR_IMAGE";
            case ObstructionKind::RbOddRPath: return "RB_ODD_R_PATH";
            case ObstructionKind::AllBlueOddCycle: return "ALL_BLUE_ODD_CYCLE";
            case ObstructionKind::OddBlueParityCycle: return "ODD_BLUE_PARITY_CYCLE";
        }
        return "?";
    }

    auto validate_obstruction(const ColouredGraph & g, const Obstruction & o) -> bool
    {
        for (auto e : o.edges)
            if (e >= g.size())
                return false;
        for (auto v : o.walk)
            if (v < 0 || v >= g.order())
                return false;

        auto blue_count = std::count_if(o.edges.begin(), o.edges.end(), [&](size_t e) { return g.edge(e).colour.is_blue(); });

        switch (o.kind) {
            case ObstructionKind::RbrImage:
            case ObstructionKind::RbOddRPath: {
                if (o.edges.size() < 3 || o.walk.size() != o.edges.size() + 1)
                    return false;
                for (size_t i = 0; i < o.edges.size(); ++i)
                    if (! joins(g.edge(o.edges[i]), o.walk[i], o.walk[i + 1]))
                        return false;
                if (! g.edge(o.edges.front()).colour.is_red() || ! g.edge(o.edges.back()).colour.is_red())
                    return false;
                if (blue_count != static_cast<long>(o.edges.size()) - 2)
                    return false;
                if (o.kind == ObstructionKind::RbrImage)
                    return o.edges.size() == 3;
                return blue_count % 2 == 1;
            }

            case ObstructionKind::AllBlueOddCycle:
            case ObstructionKind::OddBlueParityCycle: {
                size_t length = o.edges.size();
                if (length == 0 || o.walk.size() != length)
                    return false;
                auto sorted = o.edges;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                    return false;
                for (size_t i = 0; i < length; ++i)
                    if (! joins(g.edge(o.edges[i]), o.walk[i], o.walk[(i + 1) % length]))
                        return false;
                if (o.kind == ObstructionKind::AllBlueOddCycle)
                    return blue_count == static_cast<long>(length) && length % 2 == 1;
                return blue_count % 2 == 1;
            }
        }
        return false;
    }

    auto find_rbr_image(const ColouredGraph & g) -> optional<Obstruction>
    {
        require_two_coloured(g, "red-blue-red detection");
        constexpr size_t none = static_cast<size_t>(-1);
        vector<size_t> first_red(g.order(), none);
        for (size_t i = 0; i < g.size(); ++i) {
            auto & e = g.edge(i);
            if (! e.colour.is_red())
                continue;
            if (first_red[e.u] == none)
                first_red[e.u] = i;
            if (first_red[e.v] == none)
                first_red[e.v] = i;
        }

        for (size_t i = 0; i < g.size(); ++i) {
            auto & e = g.edge(i);
            if (! e.colour.is_blue() || first_red[e.u] == none || first_red[e.v] == none)
                continue;
            auto r1 = first_red[e.u], r2 = first_red[e.v];
            return Obstruction{ ObstructionKind::RbrImage,
                { g.edge(r1).other(e.u), e.u, e.v, g.edge(r2).other(e.v) },
                { r1, i, r2 } };
        }
        return std::nullopt;
    }

    namespace
    {
        // Spanning forest of the edges accepted by the filter, with parity
        // potentials. The first non-tree edge (by index) closing an odd cycle
        // is reported together with its tree path.
        auto find_odd_cycle(const ColouredGraph & g, ObstructionKind kind,
            const std::function<bool(const Edge &)> & use, const std::function<int(const Edge &)> & weight) -> optional<Obstruction>
        {
            constexpr size_t none = static_cast<size_t>(-1);
            auto inc = g.incidence();
            vector<int> potential(g.order(), -1), depth(g.order(), 0);
            vector<size_t> parent_edge(g.order(), none);
            vector<char> tree(g.size(), 0);

            for (Vertex root = 0; root < g.order(); ++root) {
                if (potential[root] != -1)
                    continue;
                potential[root] = 0;
                std::deque<Vertex> queue{ root };
                while (! queue.empty()) {
                    Vertex x = queue.front();
                    queue.pop_front();
                    for (auto ei : inc[x]) {
                        auto & e = g.edge(ei);
                        if (! use(e))
                            continue;
                        Vertex y = e.other(x);
                        if (potential[y] == -1) {
                            potential[y] = potential[x] ^ weight(e);
                            depth[y] = depth[x] + 1;
                            parent_edge[y] = ei;
                            tree[ei] = 1;
                            queue.push_back(y);
                        }
                    }
                }
            }

            for (size_t i = 0; i < g.size(); ++i) {
                auto & e = g.edge(i);
                if (tree[i] || ! use(e) || ((potential[e.u] ^ potential[e.v] ^ weight(e)) & 1) == 0)
                    continue;

                vector<Vertex> up_x{ e.u }, up_y{ e.v };
                vector<size_t> edges_x, edges_y;
                Vertex a = e.u, b = e.v;
                while (a != b) {
                    if (depth[a] >= depth[b]) {
                        edges_x.push_back(parent_edge[a]);
                        a = g.edge(parent_edge[a]).other(a);
                        up_x.push_back(a);
                    }
                    else {
                        edges_y.push_back(parent_edge[b]);
                        b = g.edge(parent_edge[b]).other(b);
                        up_y.push_back(b);
                    }
                }

                // walk: u .. lca .. v, then the closing edge back to u.
                Obstruction o{ kind, up_x, edges_x };
                for (size_t j = up_y.size() - 1; j-- > 0;)
                    o.walk.push_back(up_y[j]);
                for (size_t j = edges_y.size(); j-- > 0;)
                    o.edges.push_back(edges_y[j]);
                o.edges.push_back(i);
                return o;
            }
            return std::nullopt;
        }
    }

    auto find_odd_blue_parity_cycle(const ColouredGraph & g) -> optional<Obstruction>
    {
        require_two_coloured(g, "blue parity detection");
        return find_odd_cycle(g, ObstructionKind::OddBlueParityCycle,
            [](const Edge &) { return true; },
            [](const Edge & e) { return e.colour.is_blue() ? 1 : 0; });
    }

    auto find_all_blue_odd_cycle(const ColouredGraph & g) -> optional<Obstruction>
    {
        require_two_coloured(g, "blue odd cycle detection");
        return find_odd_cycle(g, ObstructionKind::AllBlueOddCycle,
            [](const Edge & e) { return e.colour.is_blue(); },
            [](const Edge &) { return 1; });
    }

    auto find_rb_odd_r_path(const ColouredGraph & g) -> optional<Obstruction>
    {
        require_two_coloured(g, "red-blue-red path detection");
        if (find_odd_blue_parity_cycle(g))
            throw ContractError{ "red-blue-red path detection needs a graph without odd blue parity cycles" };

        constexpr size_t none = static_cast<size_t>(-1);
        auto inc = g.incidence();
        vector<size_t> first_red(g.order(), none);
        for (size_t i = 0; i < g.size(); ++i) {
            auto & e = g.edge(i);
            if (! e.colour.is_red())
                continue;
            if (first_red[e.u] == none)
                first_red[e.u] = i;
            if (first_red[e.v] == none)
                first_red[e.v] = i;
        }

        for (Vertex x = 0; x < g.order(); ++x) {
            if (first_red[x] == none)
                continue;

            // Blue BFS from x; the blue subgraph is bipartite by the precondition.
            vector<int> dist(g.order(), -1);
            vector<size_t> via(g.order(), none);
            std::deque<Vertex> queue{ x };
            dist[x] = 0;
            while (! queue.empty()) {
                Vertex a = queue.front();
                queue.pop_front();
                for (auto ei : inc[a]) {
                    auto & e = g.edge(ei);
                    if (! e.colour.is_blue())
                        continue;
                    Vertex b = e.other(a);
                    if (dist[b] == -1) {
                        dist[b] = dist[a] + 1;
                        via[b] = ei;
                        queue.push_back(b);
                    }
                }
            }

            for (Vertex y = 0; y < g.order(); ++y) {
                if (first_red[y] == none || dist[y] == -1 || dist[y] % 2 == 0)
                    continue;
                vector<Vertex> path{ y };
                vector<size_t> path_edges;
                for (Vertex b = y; b != x;) {
                    path_edges.push_back(via[b]);
                    b = g.edge(via[b]).other(b);
                    path.push_back(b);
                }
                std::reverse(path.begin(), path.end());
                std::reverse(path_edges.begin(), path_edges.end());

                Obstruction o{ ObstructionKind::RbOddRPath, {}, {} };
                o.walk.push_back(g.edge(first_red[x]).other(x));
                o.walk.insert(o.walk.end(), path.begin(), path.end());
                o.walk.push_back(g.edge(first_red[y]).other(y));
                o.edges.push_back(first_red[x]);
                o.edges.insert(o.edges.end(), path_edges.begin(), path_edges.end());
                o.edges.push_back(first_red[y]);
                return o;
            }
        }
        return std::nullopt;
    }

    auto min_switch_to_monochromatic(const ColouredGraph & g, const Colour & colour) -> optional<vector<Vertex>>
    {
        require_two_coloured(g, "switching to one colour");
        if (! colour.is_red() && ! colour.is_blue())
            throw DomainError{ "switching can only reach r or b" };

        auto inc = g.incidence();
        vector<int> label(g.order(), -1);
        vector<Vertex> result;
        for (Vertex root = 0; root < g.order(); ++root) {
            if (label[root] != -1)
                continue;
            label[root] = 0;
            vector<Vertex> members{ root };
            std::deque<Vertex> queue{ root };
            while (! queue.empty()) {
                Vertex x = queue.front();
                queue.pop_front();
                for (auto ei : inc[x]) {
                    auto & e = g.edge(ei);
                    int flip = e.colour == colour ? 0 : 1;
                    if (e.is_loop()) {
                        if (flip)
                            return std::nullopt;
                        continue;
                    }
                    Vertex y = e.other(x);
                    if (label[y] == -1) {
                        label[y] = label[x] ^ flip;
                        members.push_back(y);
                        queue.push_back(y);
                    }
                    else if (label[y] != (label[x] ^ flip))
                        return std::nullopt;
                }
            }

            auto ones = std::count_if(members.begin(), members.end(), [&](Vertex v) { return label[v] == 1; });
            int take = 2 * ones < static_cast<long>(members.size()) ? 1 : 0;
            for (auto v : members)
                if (label[v] == take)
                    result.push_back(v);
        }
        std::sort(result.begin(), result.end());
        return result;
    }
}
