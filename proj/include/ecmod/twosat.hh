#ifndef ECMOD_TWOSAT_HH
#define ECMOD_TWOSAT_HH

#include <array>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace ecmod
{
    struct Literal
    {
        int var;
        bool positive;

        auto negated() const -> Literal { return Literal{ var, ! positive }; }
        auto operator<=>(const Literal &) const = default;
    };

    inline auto pos(int v) -> Literal { return Literal{ v, true }; }
    inline auto neg(int v) -> Literal { return Literal{ v, false }; }

    /// A clause of one or two literals. A two-literal clause with a repeated
    /// literal is stored as a unit clause.
    class Clause
    {
    private:
        std::array<Literal, 2> _literals;
        int _size;

    public:
        explicit Clause(Literal a);
        Clause(Literal a, Literal b);

        auto literals() const -> std::span<const Literal> { return { _literals.data(), static_cast<std::size_t>(_size) }; }
        auto size() const -> int { return _size; }
        auto mentions(int var) const -> bool;
        auto satisfied_by(const std::vector<bool> & values) const -> bool;

        auto operator==(const Clause & other) const -> bool;
    };

    struct ClauseGroup
    {
        std::vector<std::size_t> clauses;
        int witness = -1;
    };

    struct TwoCnf
    {
        int num_vars = 0;
        std::vector<Clause> clauses;
        std::optional<std::vector<ClauseGroup>> groups;

        auto add_var() -> int { return num_vars++; }
        auto add_clause(Literal a) -> std::size_t;
        auto add_clause(Literal a, Literal b) -> std::size_t;

        /// Throws ArgumentError if a literal is out of range, groups do not
        /// partition the clauses, or a witness misses a clause of its group.
        auto validate() const -> void;
    };

    /// Values per variable; a deleted variable has no value.
    struct Assignment
    {
        std::vector<std::optional<bool>> values;
    };

    /// Implication graph plus strongly connected components. Unsatisfiable
    /// formulas yield an empty optional. The all-false assignment is returned
    /// for formulas without clauses.
    auto solve_2sat(const TwoCnf & f) -> std::optional<Assignment>;

    /// Indices of a set of clauses that is unsatisfiable on its own, taken from
    /// the two implication chains x => ~x and ~x => x of a conflicting variable;
    /// among all conflicting variables, the chain pair with fewest clauses is
    /// used. Empty optional if f is satisfiable.
    auto unsat_core(const TwoCnf & f) -> std::optional<std::vector<std::size_t>>;

    /// Smallest set of at most k variables whose deletion (with every clause
    /// mentioning them) makes f satisfiable; lexicographically least among the
    /// smallest. Empty optional if none exists.
    auto var_del_almost_2sat(const TwoCnf & f, int k) -> std::optional<std::vector<int>>;

    /// As var_del_almost_2sat, deleting whole groups. Throws ArgumentError if f
    /// has no groups.
    auto group_del_almost_2sat(const TwoCnf & f, int k) -> std::optional<std::vector<std::size_t>>;

    struct GroupReduction
    {
        TwoCnf formula;
        std::vector<std::size_t> group_of_var;
        std::vector<int> source_var;
    };

    /// Renames each variable occurring in group i to a private copy x_i and
    /// adds equality clauses between every pair of copies of the same variable.
    auto group_to_var_reduction(const TwoCnf & f) -> GroupReduction;

    /// DIMACS-like text; groups appear as "c group <i> witness <w>" lines
    /// followed by their clauses.
    auto write_dimacs(std::ostream & s, const TwoCnf & f) -> void;
}

#endif
