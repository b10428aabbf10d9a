#ifndef ECMOD_ECMOD_H
#define ECMOD_ECMOD_H

#include <stddef.h>

#if defined(_WIN32)
#  define ECMOD_API __declspec(dllexport)
#else
#  define ECMOD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every function returning ecmod_status leaves its outputs untouched on
 * failure; ecmod_last_error() then describes the failure on this thread. */
typedef enum ecmod_status
{
    ECMOD_OK = 0,
    ECMOD_ERR_ARGUMENT = 1,
    ECMOD_ERR_DOMAIN = 2,
    ECMOD_ERR_PARSE = 3,
    ECMOD_ERR_SIZE = 4,
    ECMOD_ERR_CONTRACT = 5,
    ECMOD_ERR_INTERNAL = 6
} ecmod_status;

typedef enum ecmod_problem
{
    ECMOD_VDEL = 0,
    ECMOD_EDEL = 1,
    ECMOD_SWITCH = 2
} ecmod_problem;

enum
{
    ECMOD_SOLVE_STRICT_EXACT_K = 1u << 0,
    ECMOD_SOLVE_FORCE_XP = 1u << 1
};

typedef struct ecmod_graph ecmod_graph;
typedef struct ecmod_target ecmod_target;
typedef struct ecmod_solution ecmod_solution;

ECMOD_API const char * ecmod_last_error(void);
ECMOD_API const char * ecmod_status_name(ecmod_status status);

/* Strings returned through char ** outputs belong to the caller. */
ECMOD_API void ecmod_string_free(char * s);

ECMOD_API ecmod_status ecmod_problem_parse(const char * name, ecmod_problem * out);

/* Graph file text, as accepted by the command line tool. */
ECMOD_API ecmod_status ecmod_graph_parse(const char * text, ecmod_graph ** out);
ECMOD_API ecmod_status ecmod_graph_write(const ecmod_graph * g, char ** out);
ECMOD_API int ecmod_graph_order(const ecmod_graph * g);
ECMOD_API size_t ecmod_graph_size(const ecmod_graph * g);
ECMOD_API void ecmod_graph_free(ecmod_graph * g);

ECMOD_API ecmod_status ecmod_target_from_name(const char * name, ecmod_target ** out);
ECMOD_API ecmod_status ecmod_target_from_graph(const ecmod_graph * g, ecmod_target ** out);

/* Name of the matching named core, or NULL in *out if there is none. */
ECMOD_API ecmod_status ecmod_target_canonical_name(const ecmod_target * t, char ** out, int * colours_swapped, int * vertices_swapped);
ECMOD_API void ecmod_target_free(ecmod_target * t);

ECMOD_API ecmod_status ecmod_solve(ecmod_problem problem, const ecmod_graph * g, const ecmod_target * t, int k, unsigned flags, ecmod_solution ** out);
ECMOD_API int ecmod_solution_answer(const ecmod_solution * s);
ECMOD_API int ecmod_solution_budget_used(const ecmod_solution * s);
ECMOD_API const char * ecmod_solution_method(const ecmod_solution * s);
ECMOD_API int ecmod_solution_fell_back(const ecmod_solution * s);

/* Deleted or switched vertices; edge indices for edge deletion. */
ECMOD_API size_t ecmod_solution_vertices(const ecmod_solution * s, const int ** out);
ECMOD_API size_t ecmod_solution_edges(const ecmod_solution * s, const size_t ** out);

/* Indexed by input vertex, -1 for deleted vertices. Length 0 if absent. */
ECMOD_API size_t ecmod_solution_homomorphism(const ecmod_solution * s, const int ** out);

/* Replays the certificate and checks the result by brute force. */
ECMOD_API ecmod_status ecmod_solution_verify(const ecmod_solution * s, const ecmod_graph * g, const ecmod_target * t, int k, int * valid);
ECMOD_API void ecmod_solution_free(ecmod_solution * s);

/* One-line "key=value" classification record. */
ECMOD_API ecmod_status ecmod_classify(ecmod_problem problem, const ecmod_target * t, char ** out);

/* reduction is one of vc-edel-h2b_rb, vc-edel-h2rb_rb, vc-switch-h2b_rdash
 * or mis-switch; x and q are used by mis-switch only. The output is a graph
 * file with problem, target and budget as leading comments. */
ECMOD_API ecmod_status ecmod_generate(const char * reduction, const char * source_text, const char * x, int q, char ** out, int * budget);

/* One "name: pass" or "name: fail (witness)" line per property. */
ECMOD_API ecmod_status ecmod_verify_gadgets(const char * x, int q, int part_size, char ** out, int * all_passed);

#ifdef __cplusplus
}
#endif

#endif
