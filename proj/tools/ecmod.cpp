#include <ecmod/ecmod.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    constexpr int exit_yes = 0;
    constexpr int exit_no = 1;
    constexpr int exit_error = 2;

    struct Failure
    {
        std::string message;
    };

    auto check(ecmod_status status) -> void
    {
        if (status != ECMOD_OK)
            throw Failure{ std::string{ ecmod_status_name(status) } + ": " + ecmod_last_error() };
    }

    auto read_input(const std::string & path) -> std::string
    {
        if (path == "-")
            return std::string{ std::istreambuf_iterator<char>{ std::cin }, {} };
        std::ifstream in(path);
        if (! in)
            throw Failure{ "cannot read '" + path + "'" };
        return std::string{ std::istreambuf_iterator<char>{ in }, {} };
    }

    auto take_string(char * s) -> std::string
    {
        std::string result = s ? s : "";
        ecmod_string_free(s);
        return result;
    }

    struct Graph
    {
        ecmod_graph * g = nullptr;
        ~Graph() { ecmod_graph_free(g); }
    };

    struct TargetHandle
    {
        ecmod_target * t = nullptr;
        ~TargetHandle() { ecmod_target_free(t); }
    };

    struct SolutionHandle
    {
        ecmod_solution * s = nullptr;
        ~SolutionHandle() { ecmod_solution_free(s); }
    };

    // A target is a name from the grammar, or else a graph file.
    auto load_target(const std::string & token, TargetHandle & out) -> void
    {
        if (ecmod_target_from_name(token.c_str(), &out.t) == ECMOD_OK)
            return;
        std::string name_error = ecmod_last_error();
        std::ifstream probe(token);
        if (! probe)
            throw Failure{ "target '" + token + "' is neither a target name (" + name_error + ") nor a readable file" };
        Graph g;
        check(ecmod_graph_parse(read_input(token).c_str(), &g.g));
        check(ecmod_target_from_graph(g.g, &out.t));
    }

    auto print_target(const ecmod_target * t) -> void
    {
        char * name = nullptr;
        int colours = 0, vertices = 0;
        check(ecmod_target_canonical_name(t, &name, &colours, &vertices));
        if (! name) {
            std::cout << "canonical_target: none\n";
            return;
        }
        std::cout << "canonical_target: " << take_string(name) << '\n';
        std::cout << "colours_swapped: " << (colours ? "yes" : "no") << '\n';
        std::cout << "vertices_swapped: " << (vertices ? "yes" : "no") << '\n';
    }

    template <typename T>
    auto join(const T * data, std::size_t n) -> std::string
    {
        std::ostringstream out;
        for (std::size_t i = 0; i < n; ++i)
            out << (i ? " " : "") << data[i];
        return out.str();
    }

    struct SolveArgs
    {
        std::string problem, target, input;
        int k = 0;
        bool certificate = false, strict = false, force_xp = false;
    };

    auto run_solve(const SolveArgs & a) -> int
    {
        ecmod_problem problem;
        check(ecmod_problem_parse(a.problem.c_str(), &problem));
        TargetHandle t;
        load_target(a.target, t);
        Graph g;
        check(ecmod_graph_parse(read_input(a.input).c_str(), &g.g));

        unsigned flags = 0;
        if (a.strict)
            flags |= ECMOD_SOLVE_STRICT_EXACT_K;
        if (a.force_xp)
            flags |= ECMOD_SOLVE_FORCE_XP;
        SolutionHandle s;
        check(ecmod_solve(problem, g.g, t.t, a.k, flags, &s.s));

        bool yes = ecmod_solution_answer(s.s);
        std::cout << "answer: " << (yes ? "yes" : "no") << '\n';
        std::cout << "problem: " << a.problem << '\n';
        std::cout << "target: " << a.target << '\n';
        print_target(t.t);
        std::cout << "k: " << a.k << '\n';
        std::cout << "method: " << ecmod_solution_method(s.s) << '\n';
        if (ecmod_solution_fell_back(s.s))
            std::cout << "fell_back_to_xp: yes\n";
        if (yes) {
            std::cout << "budget_used: " << ecmod_solution_budget_used(s.s) << '\n';
            if (problem == ECMOD_EDEL) {
                const size_t * edges = nullptr;
                auto n = ecmod_solution_edges(s.s, &edges);
                std::cout << "deleted_edges: " << join(edges, n) << '\n';
            }
            else {
                const int * vertices = nullptr;
                auto n = ecmod_solution_vertices(s.s, &vertices);
                std::cout << (problem == ECMOD_VDEL ? "deleted_vertices: " : "switch_set: ") << join(vertices, n) << '\n';
            }
            if (a.certificate) {
                const int * map = nullptr;
                auto n = ecmod_solution_homomorphism(s.s, &map);
                std::cout << "homomorphism: " << join(map, n) << '\n';
                int valid = 0;
                check(ecmod_solution_verify(s.s, g.g, t.t, a.k, &valid));
                std::cout << "certificate_verified: " << (valid ? "yes" : "no") << '\n';
            }
        }
        return yes ? exit_yes : exit_no;
    }

    auto run_classify(const std::string & problem_name, const std::string & target) -> int
    {
        ecmod_problem problem;
        check(ecmod_problem_parse(problem_name.c_str(), &problem));
        TargetHandle t;
        load_target(target, t);
        char * record = nullptr;
        check(ecmod_classify(problem, t.t, &record));

        // The record is space-separated key=value pairs.
        std::istringstream fields(take_string(record));
        std::string field;
        while (fields >> field) {
            auto eq = field.find('=');
            std::cout << field.substr(0, eq) << ": " << field.substr(eq + 1) << '\n';
        }
        return exit_yes;
    }

    auto run_generate(const std::string & reduction, const std::string & input, const std::string & x, int q) -> int
    {
        char * text = nullptr;
        int budget = 0;
        check(ecmod_generate(reduction.c_str(), read_input(input).c_str(), x.c_str(), q, &text, &budget));
        std::cout << take_string(text);
        return exit_yes;
    }

    auto parse_range(const std::string & s) -> std::pair<int, int>
    {
        try {
            auto dots = s.find("..");
            if (dots == std::string::npos) {
                int v = std::stoi(s);
                return { v, v };
            }
            return { std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2)) };
        }
        catch (const std::exception &) {
            throw Failure{ "bad range '" + s + "'" };
        }
    }

    auto run_verify(const std::string & family, const std::string & q_range, const std::string & size_range) -> int
    {
        auto [q_low, q_high] = parse_range(q_range);
        auto [s_low, s_high] = parse_range(size_range);
        bool all = true;
        for (int q = q_low; q <= q_high; ++q)
            for (int s = s_low; s <= s_high; ++s) {
                char * report = nullptr;
                int passed = 0;
                check(ecmod_verify_gadgets(family.c_str(), q, s, &report, &passed));
                std::istringstream lines(take_string(report));
                std::string line;
                while (std::getline(lines, line))
                    std::cout << "x=" << family << " q=" << q << " size=" << s << " " << line << '\n';
                all = all && passed;
            }
        std::cout << "all_passed: " << (all ? "yes" : "no") << '\n';
        return all ? exit_yes : exit_no;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Edge-coloured graph modification solver" };
    app.require_subcommand(1);

    SolveArgs solve_args, oracle_args;
    auto add_solve_options = [](CLI::App * cmd, SolveArgs & a) {
        cmd->add_option("--problem", a.problem, "vdel, edel or switch")->required();
        cmd->add_option("--target", a.target, "target name such as H2b_r,b, or a graph file")->required();
        cmd->add_option("--k", a.k, "budget")->required()->check(CLI::NonNegativeNumber);
        cmd->add_flag("--certificate", a.certificate, "print and verify the homomorphism");
        cmd->add_flag("--strict-exact-k", a.strict, "use exactly k modifications");
        cmd->add_option("input", a.input, "graph file, or - for standard input")->required();
    };
    auto solve_cmd = app.add_subcommand("solve", "decide a modification problem");
    add_solve_options(solve_cmd, solve_args);
    solve_cmd->add_flag("--force-xp", solve_args.force_xp, "use exhaustive search");
    auto oracle_cmd = app.add_subcommand("oracle", "solve with exhaustive search");
    add_solve_options(oracle_cmd, oracle_args);

    std::string classify_problem, classify_target;
    auto classify_cmd = app.add_subcommand("classify", "complexity of a problem for a target");
    classify_cmd->add_option("--problem", classify_problem)->required();
    classify_cmd->add_option("--target", classify_target)->required();

    std::string reduction, generate_input, x = "r";
    int q = 3;
    auto generate_cmd = app.add_subcommand("generate", "build a reduced instance");
    generate_cmd->add_option("reduction", reduction, "vc-edel-h2b_rb, vc-edel-h2rb_rb, vc-switch-h2b_rdash or mis-switch")->required();
    generate_cmd->add_option("input", generate_input, "source instance file, or -")->required();
    generate_cmd->add_option("--x", x, "second loop of the target for mis-switch: r, b or -");
    generate_cmd->add_option("--q", q, "girth parameter for mis-switch");

    std::string family, q_range = "3", size_range = "1";
    auto verify_cmd = app.add_subcommand("verify", "check gadget properties");
    verify_cmd->add_option("--family", family, "r, b or -")->required();
    verify_cmd->add_option("--q", q_range, "value or range such as 3..4");
    verify_cmd->add_option("--size", size_range, "part size or range such as 1..3");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_error;
    }

    try {
        if (*solve_cmd)
            return run_solve(solve_args);
        if (*oracle_cmd) {
            oracle_args.force_xp = true;
            return run_solve(oracle_args);
        }
        if (*classify_cmd)
            return run_classify(classify_problem, classify_target);
        if (*generate_cmd)
            return run_generate(reduction, generate_input, x, q);
        if (*verify_cmd)
            return run_verify(family, q_range, size_range);
    }
    catch (const Failure & f) {
        std::cerr << "error: " << f.message << '\n';
        return exit_error;
    }
    return exit_error;
}
