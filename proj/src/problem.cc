#include <ecmod/error.hh>
#include <ecmod/problem.hh>

#include <algorithm>
#include <cctype>

namespace ecmod
{
    auto to_string(ProblemKind p) -> std::string
    {
        switch (p) {
            case ProblemKind::VertexDeletion: return "vdel";
            case ProblemKind::EdgeDeletion: return "edel";
            case ProblemKind::Switching: return "switch";
        }
        return "?";
    }

    auto parse_problem(std::string_view s) -> ProblemKind
    {
        std::string lower(s);
        std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
        if (lower == "vdel")
            return ProblemKind::VertexDeletion;
        if (lower == "edel")
            return ProblemKind::EdgeDeletion;
        if (lower == "switch")
            return ProblemKind::Switching;
        throw ArgumentError{ "unknown problem '" + std::string(s) + "', expected vdel, edel or switch" };
    }
}
