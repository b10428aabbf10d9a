#include <ecmod/dichotomy.hh>
#include <ecmod/ecmod.h>
#include <ecmod/error.hh>
#include <ecmod/gadgets.hh>
#include <ecmod/solve.hh>
#include <ecmod/textio.hh>

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

using namespace ecmod;

struct ecmod_graph
{
    GraphFile file;
};

struct ecmod_target
{
    Target target;
};

struct ecmod_solution
{
    Solution solution;
    std::vector<int> homomorphism;
};

namespace
{
    thread_local std::string last_error;

    auto status_of(ErrorKind k) -> ecmod_status
    {
        switch (k) {
            case ErrorKind::Argument: return ECMOD_ERR_ARGUMENT;
            case ErrorKind::Domain: return ECMOD_ERR_DOMAIN;
            case ErrorKind::Parse: return ECMOD_ERR_PARSE;
            case ErrorKind::Size: return ECMOD_ERR_SIZE;
            case ErrorKind::Contract: return ECMOD_ERR_CONTRACT;
        }
        return ECMOD_ERR_INTERNAL;
    }

    template <typename F>
    auto guarded(F && f) -> ecmod_status
    {
        try {
            f();
            last_error.clear();
            return ECMOD_OK;
        }
        catch (const Error & e) {
            last_error = e.what();
            return status_of(e.kind());
        }
        catch (const std::exception & e) {
            last_error = e.what();
            return ECMOD_ERR_INTERNAL;
        }
        catch (...) {
            last_error = "unknown error";
            return ECMOD_ERR_INTERNAL;
        }
    }

    auto require(const void * p, const char * what) -> void
    {
        if (! p)
            throw ArgumentError{ std::string{ what } + " is null" };
    }

    auto copy_string(const std::string & s) -> char *
    {
        auto result = static_cast<char *>(std::malloc(s.size() + 1));
        if (! result)
            throw std::bad_alloc{};
        std::memcpy(result, s.c_str(), s.size() + 1);
        return result;
    }

    auto problem_of(ecmod_problem p) -> ProblemKind
    {
        switch (p) {
            case ECMOD_VDEL: return ProblemKind::VertexDeletion;
            case ECMOD_EDEL: return ProblemKind::EdgeDeletion;
            case ECMOD_SWITCH: return ProblemKind::Switching;
        }
        throw ArgumentError{ "unknown problem code " + std::to_string(static_cast<int>(p)) };
    }
}

extern "C" {

ECMOD_API const char * ecmod_last_error(void)
{
    return last_error.c_str();
}

ECMOD_API const char * ecmod_status_name(ecmod_status status)
{
    switch (status) {
        case ECMOD_OK: return "ok";
        case ECMOD_ERR_ARGUMENT: return "argument error";
        case ECMOD_ERR_DOMAIN: return "domain error";
        case ECMOD_ERR_PARSE: return "parse error";
        case ECMOD_ERR_SIZE: return "size error";
        case ECMOD_ERR_CONTRACT: return "contract error";
        case ECMOD_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

ECMOD_API void ecmod_string_free(char * s)
{
    std::free(s);
}

ECMOD_API ecmod_status ecmod_problem_parse(const char * name, ecmod_problem * out)
{
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        switch (parse_problem(name)) {
            case ProblemKind::VertexDeletion: *out = ECMOD_VDEL; break;
            case ProblemKind::EdgeDeletion: *out = ECMOD_EDEL; break;
            case ProblemKind::Switching: *out = ECMOD_SWITCH; break;
        }
    });
}

ECMOD_API ecmod_status ecmod_graph_parse(const char * text, ecmod_graph ** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new ecmod_graph{ parse_graph_file(text) };
    });
}

ECMOD_API ecmod_status ecmod_graph_write(const ecmod_graph * g, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = copy_string(write_graph_file(g->file));
    });
}

ECMOD_API int ecmod_graph_order(const ecmod_graph * g)
{
    return g ? g->file.graph.order() : 0;
}

ECMOD_API size_t ecmod_graph_size(const ecmod_graph * g)
{
    return g ? g->file.graph.size() : 0;
}

ECMOD_API void ecmod_graph_free(ecmod_graph * g)
{
    delete g;
}

ECMOD_API ecmod_status ecmod_target_from_name(const char * name, ecmod_target ** out)
{
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = new ecmod_target{ parse_target_name(name) };
    });
}

ECMOD_API ecmod_status ecmod_target_from_graph(const ecmod_graph * g, ecmod_target ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = new ecmod_target{ Target{ g->file.graph } };
    });
}

ECMOD_API ecmod_status ecmod_target_canonical_name(const ecmod_target * t, char ** out, int * colours_swapped, int * vertices_swapped)
{
    return guarded([&] {
        require(t, "target");
        require(out, "out");
        auto & match = t->target.core_match();
        *out = match ? copy_string(match->name) : nullptr;
        if (colours_swapped)
            *colours_swapped = match && match->colours_swapped;
        if (vertices_swapped)
            *vertices_swapped = match && match->vertices_swapped;
    });
}

ECMOD_API void ecmod_target_free(ecmod_target * t)
{
    delete t;
}

ECMOD_API ecmod_status ecmod_solve(ecmod_problem problem, const ecmod_graph * g, const ecmod_target * t, int k, unsigned flags, ecmod_solution ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(t, "target");
        require(out, "out");
        SolveOptions options;
        options.strict_exact_k = flags & ECMOD_SOLVE_STRICT_EXACT_K;
        options.force_xp = flags & ECMOD_SOLVE_FORCE_XP;
        auto s = solve(problem_of(problem), g->file.graph, t->target, k, options);
        auto result = new ecmod_solution{ std::move(s), {} };
        if (result->solution.homomorphism)
            result->homomorphism = result->solution.homomorphism->map;
        *out = result;
    });
}

ECMOD_API int ecmod_solution_answer(const ecmod_solution * s)
{
    return s && s->solution.answer;
}

ECMOD_API int ecmod_solution_budget_used(const ecmod_solution * s)
{
    return s ? s->solution.budget_used : 0;
}

ECMOD_API const char * ecmod_solution_method(const ecmod_solution * s)
{
    return s ? s->solution.method.c_str() : "";
}

ECMOD_API int ecmod_solution_fell_back(const ecmod_solution * s)
{
    return s && s->solution.fell_back_to_xp;
}

ECMOD_API size_t ecmod_solution_vertices(const ecmod_solution * s, const int ** out)
{
    if (! s)
        return 0;
    if (out)
        *out = s->solution.vertices.data();
    return s->solution.vertices.size();
}

ECMOD_API size_t ecmod_solution_edges(const ecmod_solution * s, const size_t ** out)
{
    if (! s)
        return 0;
    if (out)
        *out = s->solution.edges.data();
    return s->solution.edges.size();
}

ECMOD_API size_t ecmod_solution_homomorphism(const ecmod_solution * s, const int ** out)
{
    if (! s)
        return 0;
    if (out)
        *out = s->homomorphism.data();
    return s->homomorphism.size();
}

ECMOD_API ecmod_status ecmod_solution_verify(const ecmod_solution * s, const ecmod_graph * g, const ecmod_target * t, int k, int * valid)
{
    return guarded([&] {
        require(s, "solution");
        require(g, "graph");
        require(t, "target");
        require(valid, "valid");
        *valid = verify_solution(g->file.graph, t->target, k, s->solution);
    });
}

ECMOD_API void ecmod_solution_free(ecmod_solution * s)
{
    delete s;
}

ECMOD_API ecmod_status ecmod_classify(ecmod_problem problem, const ecmod_target * t, char ** out)
{
    return guarded([&] {
        require(t, "target");
        require(out, "out");
        *out = copy_string(to_record(classify(problem_of(problem), t->target)));
    });
}

ECMOD_API ecmod_status ecmod_generate(const char * reduction, const char * source_text, const char * x, int q, char ** out, int * budget)
{
    return guarded([&] {
        require(reduction, "reduction");
        require(source_text, "source");
        require(out, "out");
        auto source = parse_source_instance(source_text);
        std::string name = reduction;
        ReducedInstance r;
        if (name == "mis-switch") {
            require(x, "x");
            r = gen_mis_switch(MisInstance{ source.graph, source.parts }, parse_loop_kind(x), q);
        }
        else {
            VcInstance vc{ source.graph, source.budget };
            if (name == "vc-edel-h2b_rb")
                r = gen_vc_edel_h2b_rb(vc);
            else if (name == "vc-edel-h2rb_rb")
                r = gen_vc_edel_h2rb_rb(vc);
            else if (name == "vc-switch-h2b_rdash")
                r = gen_vc_switch_h2b_rdash(vc);
            else
                throw ArgumentError{ "unknown reduction '" + name + "'" };
        }
        *out = copy_string(write_reduced_instance(r));
        if (budget)
            *budget = r.budget;
    });
}

ECMOD_API ecmod_status ecmod_verify_gadgets(const char * x, int q, int part_size, char ** out, int * all_passed)
{
    return guarded([&] {
        require(x, "x");
        require(out, "out");
        auto report = verify_gadget_properties(parse_loop_kind(x), q, part_size);
        std::string text;
        for (auto & p : report.properties) {
            text += p.name + ": " + (p.passed ? "pass" : "fail");
            if (! p.passed && ! p.witness.empty())
                text += " (" + p.witness + ")";
            text += '\n';
        }
        *out = copy_string(text);
        if (all_passed)
            *all_passed = report.all_passed();
    });
}
}
