#ifndef ECMOD_PROBLEM_HH
#define ECMOD_PROBLEM_HH

#include <string>
#include <string_view>

namespace ecmod
{
    enum class ProblemKind
    {
        VertexDeletion,
        EdgeDeletion,
        Switching
    };

    /// "vdel", "edel" or "switch".
    auto to_string(ProblemKind p) -> std::string;

    /// Accepts the short names, case-insensitively. Throws ArgumentError.
    auto parse_problem(std::string_view s) -> ProblemKind;
}

#endif
