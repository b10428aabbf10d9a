#include <ecmod/error.hh>
#include <ecmod/twosat.hh>

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <ostream>
#include <tuple>

using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace ecmod
{
    Clause::Clause(Literal a) :
        _literals{ a, a },
        _size(1)
    {
    }

    Clause::Clause(Literal a, Literal b) :
        _literals{ a, b },
        _size(a == b ? 1 : 2)
    {
    }

    auto Clause::mentions(int var) const -> bool
    {
        return _literals[0].var == var || (_size == 2 && _literals[1].var == var);
    }

    auto Clause::satisfied_by(const vector<bool> & values) const -> bool
    {
        for (auto & l : literals())
            if (values.at(l.var) == l.positive)
                return true;
        return false;
    }

    auto Clause::operator==(const Clause & other) const -> bool
    {
        auto a = literals(), b = other.literals();
        return std::equal(a.begin(), a.end(), b.begin(), b.end());
    }

    auto TwoCnf::add_clause(Literal a) -> size_t
    {
        clauses.emplace_back(a);
        return clauses.size() - 1;
    }

    auto TwoCnf::add_clause(Literal a, Literal b) -> size_t
    {
        clauses.emplace_back(a, b);
        return clauses.size() - 1;
    }

    auto TwoCnf::validate() const -> void
    {
        if (num_vars < 0)
            throw ArgumentError{ "negative variable count" };
        for (size_t i = 0; i < clauses.size(); ++i)
            for (auto & l : clauses[i].literals())
                if (l.var < 0 || l.var >= num_vars)
                    throw ArgumentError{ "clause " + to_string(i) + " uses variable " + to_string(l.var) + " out of range" };

        if (! groups)
            return;

        vector<int> owner(clauses.size(), -1);
        for (size_t g = 0; g < groups->size(); ++g) {
            auto & group = (*groups)[g];
            for (auto c : group.clauses) {
                if (c >= clauses.size())
                    throw ArgumentError{ "group " + to_string(g) + " lists missing clause " + to_string(c) };
                if (owner[c] != -1)
                    throw ArgumentError{ "clause " + to_string(c) + " appears in two groups" };
                owner[c] = static_cast<int>(g);
                if (! clauses[c].mentions(group.witness))
                    throw ArgumentError{ "witness of group " + to_string(g) + " does not occur in clause " + to_string(c) };
            }
        }
        for (size_t c = 0; c < clauses.size(); ++c)
            if (owner[c] == -1)
                throw ArgumentError{ "clause " + to_string(c) + " belongs to no group" };
    }

    namespace
    {
        auto node_of(Literal l) -> int
        {
            return 2 * l.var + (l.positive ? 1 : 0);
        }

        struct ImplicationGraph
        {
            int nodes = 0;
            vector<int> start;
            vector<int> target;
            vector<size_t> origin;

            ImplicationGraph(const TwoCnf & f, const vector<char> * alive)
            {
                nodes = 2 * f.num_vars;
                vector<std::tuple<int, int, size_t>> arcs;
                for (size_t i = 0; i < f.clauses.size(); ++i) {
                    if (alive && ! (*alive)[i])
                        continue;
                    auto lits = f.clauses[i].literals();
                    if (lits.size() == 1)
                        arcs.emplace_back(node_of(lits[0].negated()), node_of(lits[0]), i);
                    else {
                        arcs.emplace_back(node_of(lits[0].negated()), node_of(lits[1]), i);
                        arcs.emplace_back(node_of(lits[1].negated()), node_of(lits[0]), i);
                    }
                }

                start.assign(nodes + 1, 0);
                for (auto & [a, b, c] : arcs)
                    ++start[a + 1];
                for (int n = 0; n < nodes; ++n)
                    start[n + 1] += start[n];
                target.resize(arcs.size());
                origin.resize(arcs.size());
                vector<int> fill(start.begin(), start.end() - 1);
                for (auto & [a, b, c] : arcs) {
                    target[fill[a]] = b;
                    origin[fill[a]] = c;
                    ++fill[a];
                }
            }
        };

        // Component ids are assigned in order of completion, so sinks come first.
        auto strongly_connected_components(const ImplicationGraph & g) -> vector<int>
        {
            constexpr int unvisited = -1;
            vector<int> index(g.nodes, unvisited), low(g.nodes, 0), comp(g.nodes, -1);
            vector<char> on_stack(g.nodes, 0);
            vector<int> stack;
            vector<std::pair<int, int>> calls;
            int next_index = 0, next_comp = 0;

            for (int root = 0; root < g.nodes; ++root) {
                if (index[root] != unvisited)
                    continue;
                calls.emplace_back(root, g.start[root]);
                index[root] = low[root] = next_index++;
                stack.push_back(root);
                on_stack[root] = 1;

                while (! calls.empty()) {
                    auto & [v, arc] = calls.back();
                    if (arc < g.start[v + 1]) {
                        int w = g.target[arc++];
                        if (index[w] == unvisited) {
                            index[w] = low[w] = next_index++;
                            stack.push_back(w);
                            on_stack[w] = 1;
                            calls.emplace_back(w, g.start[w]);
                        }
                        else if (on_stack[w])
                            low[v] = std::min(low[v], index[w]);
                        continue;
                    }

                    int done = v;
                    calls.pop_back();
                    if (low[done] == index[done]) {
                        int w;
                        do {
                            w = stack.back();
                            stack.pop_back();
                            on_stack[w] = 0;
                            comp[w] = next_comp;
                        } while (w != done);
                        ++next_comp;
                    }
                    if (! calls.empty())
                        low[calls.back().first] = std::min(low[calls.back().first], low[done]);
                }
            }
            return comp;
        }

        auto shortest_path_clauses(const ImplicationGraph & g, int from, int to, vector<size_t> & out) -> bool
        {
            vector<int> via(g.nodes, -1);
            vector<char> seen(g.nodes, 0);
            std::deque<int> queue{ from };
            seen[from] = 1;
            while (! queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                if (v == to)
                    break;
                for (int a = g.start[v]; a < g.start[v + 1]; ++a) {
                    int w = g.target[a];
                    if (! seen[w]) {
                        seen[w] = 1;
                        via[w] = a;
                        queue.push_back(w);
                    }
                }
            }
            if (! seen[to])
                return false;

            // Walk back using the arc that discovered each node.
            int v = to;
            while (v != from) {
                int a = via[v];
                out.push_back(g.origin[a]);
                auto it = std::upper_bound(g.start.begin(), g.start.end(), a);
                v = static_cast<int>(it - g.start.begin()) - 1;
            }
            return true;
        }

        auto core_of(const TwoCnf & f, const vector<char> * alive) -> optional<vector<size_t>>
        {
            ImplicationGraph g(f, alive);
            auto comp = strongly_connected_components(g);

            constexpr int max_candidates = 8;
            optional<vector<size_t>> best;
            int candidates = 0;
            for (int x = 0; x < f.num_vars && candidates < max_candidates; ++x) {
                int p = node_of(pos(x)), n = node_of(neg(x));
                if (comp[p] != comp[n])
                    continue;
                ++candidates;
                vector<size_t> core;
                shortest_path_clauses(g, p, n, core);
                shortest_path_clauses(g, n, p, core);
                std::sort(core.begin(), core.end());
                core.erase(std::unique(core.begin(), core.end()), core.end());
                if (! best || core.size() < best->size())
                    best = std::move(core);
            }
            return best;
        }

        auto assignment_of(const TwoCnf & f, const vector<char> * alive) -> optional<Assignment>
        {
            ImplicationGraph g(f, alive);
            auto comp = strongly_connected_components(g);
            Assignment result;
            result.values.resize(f.num_vars);
            for (int x = 0; x < f.num_vars; ++x) {
                int p = comp[node_of(pos(x))], n = comp[node_of(neg(x))];
                if (p == n)
                    return std::nullopt;
                result.values[x] = p < n;
            }
            return result;
        }

        // Deletable items (variables or groups) each kill a set of clauses. A
        // solution must kill at least one clause of every unsatisfiable core, so
        // branching on the items touching one core is complete.
        class DeletionSearch
        {
        private:
            const TwoCnf & _f;
            int _items;
            vector<vector<int>> _killers;
            vector<vector<size_t>> _killed_by;
            vector<int> _dead;
            vector<char> _alive;

            auto remove(int item) -> void
            {
                for (auto c : _killed_by[item])
                    if (_dead[c]++ == 0)
                        _alive[c] = 0;
            }

            auto restore(int item) -> void
            {
                for (auto c : _killed_by[item])
                    if (--_dead[c] == 0)
                        _alive[c] = 1;
            }

            auto exists(int budget, int min_item) -> bool
            {
                auto core = core_of(_f, &_alive);
                if (! core)
                    return true;
                if (budget == 0)
                    return false;

                vector<int> branch;
                for (auto c : *core)
                    for (auto item : _killers[c])
                        if (item >= min_item)
                            branch.push_back(item);
                std::sort(branch.begin(), branch.end());
                branch.erase(std::unique(branch.begin(), branch.end()), branch.end());

                for (auto item : branch) {
                    remove(item);
                    bool ok = exists(budget - 1, min_item);
                    restore(item);
                    if (ok)
                        return true;
                }
                return false;
            }

        public:
            DeletionSearch(const TwoCnf & f, int items, vector<vector<int>> killers) :
                _f(f),
                _items(items),
                _killers(std::move(killers)),
                _killed_by(items),
                _dead(f.clauses.size(), 0),
                _alive(f.clauses.size(), 1)
            {
                for (size_t c = 0; c < _killers.size(); ++c)
                    for (auto item : _killers[c])
                        _killed_by[item].push_back(c);
            }

            auto run(int k) -> optional<vector<int>>
            {
                if (k < 0)
                    throw ArgumentError{ "negative budget" };

                int size = -1;
                for (int d = 0; d <= k; ++d)
                    if (exists(d, 0)) {
                        size = d;
                        break;
                    }
                if (size == -1)
                    return std::nullopt;

                vector<int> chosen;
                int min_item = 0;
                for (int i = 0; i < size; ++i) {
                    bool placed = false;
                    for (int item = min_item; item < _items && ! placed; ++item) {
                        remove(item);
                        if (exists(size - i - 1, item + 1)) {
                            chosen.push_back(item);
                            min_item = item + 1;
                            placed = true;
                        }
                        else
                            restore(item);
                    }
                    if (! placed)
                        throw ContractError{ "almost 2-SAT: lost a solution while fixing its elements" };
                }
                for (auto item : chosen)
                    restore(item);
                return chosen;
            }
        };
    }

    auto solve_2sat(const TwoCnf & f) -> optional<Assignment>
    {
        return assignment_of(f, nullptr);
    }

    auto unsat_core(const TwoCnf & f) -> optional<vector<size_t>>
    {
        return core_of(f, nullptr);
    }

    auto var_del_almost_2sat(const TwoCnf & f, int k) -> optional<vector<int>>
    {
        f.validate();
        vector<vector<int>> killers(f.clauses.size());
        for (size_t c = 0; c < f.clauses.size(); ++c) {
            for (auto & l : f.clauses[c].literals())
                killers[c].push_back(l.var);
            std::sort(killers[c].begin(), killers[c].end());
            killers[c].erase(std::unique(killers[c].begin(), killers[c].end()), killers[c].end());
        }
        return DeletionSearch{ f, f.num_vars, std::move(killers) }.run(k);
    }

    auto group_del_almost_2sat(const TwoCnf & f, int k) -> optional<vector<size_t>>
    {
        if (! f.groups)
            throw ArgumentError{ "group deletion needs a grouped formula" };
        f.validate();

        vector<vector<int>> killers(f.clauses.size());
        for (size_t g = 0; g < f.groups->size(); ++g)
            for (auto c : (*f.groups)[g].clauses)
                killers[c].push_back(static_cast<int>(g));

        auto found = DeletionSearch{ f, static_cast<int>(f.groups->size()), std::move(killers) }.run(k);
        if (! found)
            return std::nullopt;
        return vector<size_t>(found->begin(), found->end());
    }

    auto group_to_var_reduction(const TwoCnf & f) -> GroupReduction
    {
        if (! f.groups)
            throw ArgumentError{ "group reduction needs a grouped formula" };
        f.validate();

        GroupReduction result;
        std::map<std::pair<int, size_t>, int> copy;
        vector<vector<int>> copies_of(f.num_vars);

        auto copy_of = [&](int x, size_t g) -> int {
            auto [it, fresh] = copy.try_emplace({ x, g }, result.formula.num_vars);
            if (fresh) {
                result.formula.add_var();
                result.group_of_var.push_back(g);
                result.source_var.push_back(x);
                copies_of[x].push_back(it->second);
            }
            return it->second;
        };

        for (size_t g = 0; g < f.groups->size(); ++g)
            for (auto c : (*f.groups)[g].clauses) {
                auto lits = f.clauses[c].literals();
                auto rename = [&](Literal l) { return Literal{ copy_of(l.var, g), l.positive }; };
                auto first = rename(lits[0]);
                if (lits.size() == 1)
                    result.formula.add_clause(first);
                else {
                    auto second = rename(lits[1]);
                    result.formula.add_clause(first, second);
                }
            }

        for (auto & copies : copies_of)
            for (size_t i = 0; i < copies.size(); ++i)
                for (size_t j = i + 1; j < copies.size(); ++j) {
                    result.formula.add_clause(neg(copies[i]), pos(copies[j]));
                    result.formula.add_clause(pos(copies[i]), neg(copies[j]));
                }

        return result;
    }

    auto write_dimacs(std::ostream & s, const TwoCnf & f) -> void
    {
        auto write_clause = [&](const Clause & c) {
            for (auto & l : c.literals())
                s << (l.positive ? "" : "-") << (l.var + 1) << ' ';
            s << "0\n";
        };

        s << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
        if (! f.groups) {
            for (auto & c : f.clauses)
                write_clause(c);
            return;
        }
        for (size_t g = 0; g < f.groups->size(); ++g) {
            auto & group = (*f.groups)[g];
            s << "c group " << g << " witness " << (group.witness + 1) << '\n';
            for (auto c : group.clauses)
                write_clause(f.clauses[c]);
        }
    }
}
