#ifndef MADSTAR_MADSTAR_H
#define MADSTAR_MADSTAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef MADSTAR_BUILDING_LIBRARY
#    define MADSTAR_API __declspec(dllexport)
#  else
#    define MADSTAR_API __declspec(dllimport)
#  endif
#else
#  define MADSTAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. They match the command-line exit codes. */
#define MADSTAR_OK 0
#define MADSTAR_NEGATIVE 1      /* computed, and the answer is "no": infeasible, invalid, violated */
#define MADSTAR_INPUT_ERROR 2   /* malformed input or bad arguments */
#define MADSTAR_TIMEOUT 3       /* gave up; nothing is claimed */
#define MADSTAR_INTERNAL 4

typedef struct madstar_graph madstar_graph;

/*
 * Results come back as one JSON object per call, written to *out_json and
 * owned by the caller (release with madstar_string_free). It is set for
 * MADSTAR_OK, MADSTAR_NEGATIVE and MADSTAR_TIMEOUT. On any other status
 * madstar_last_error() holds {"error": ..., "detail": ...} for this thread.
 *
 * A timeout_ms of 0 or less means no time limit.
 */

MADSTAR_API const char* madstar_version(void);
MADSTAR_API const char* madstar_last_error(void);
MADSTAR_API void madstar_string_free(char* s);

/* format: "graph6", "edgelist", "dimacs" or NULL / "auto" to sniff. */
MADSTAR_API int madstar_graph_parse(const char* text, size_t len, const char* format, madstar_graph** out);
/* edges holds 2*m vertex ids. */
MADSTAR_API int madstar_graph_from_edges(int32_t n, const int32_t* edges, size_t m, madstar_graph** out);
MADSTAR_API void madstar_graph_free(madstar_graph* g);
MADSTAR_API int32_t madstar_graph_n(const madstar_graph* g);
MADSTAR_API int64_t madstar_graph_m(const madstar_graph* g);
MADSTAR_API int madstar_graph_serialize(const madstar_graph* g, const char* format, char** out_text);
MADSTAR_API int madstar_info(const madstar_graph* g, char** out_json);

/* density */
MADSTAR_API int madstar_mad(const madstar_graph* g, char** out_json);
MADSTAR_API int madstar_rho(const madstar_graph* g, const int32_t* set, size_t len, int64_t* out_value);
MADSTAR_API int madstar_rho_star(const madstar_graph* g, const int32_t* seed, size_t len, char** out_json);
/* MADSTAR_NEGATIVE when mad > 8/3. */
MADSTAR_API int madstar_mad_le_8_3(const madstar_graph* g, char** out_json);

/* star colorings; colors has one entry per vertex */
MADSTAR_API int madstar_star_verify(const madstar_graph* g, const int32_t* colors, size_t len, char** out_json);
/* limit 0: no limit. force lifts the default vertex cap. */
MADSTAR_API int madstar_star_color(const madstar_graph* g, int32_t limit, int force, int64_t timeout_ms, char** out_json);
MADSTAR_API int madstar_star_greedy(const madstar_graph* g, char** out_json);

/* FI_k partitions; labels: 0 for F, j for I_j */
MADSTAR_API int madstar_fii_find(const madstar_graph* g, int32_t k, int forcing, int64_t timeout_ms, char** out_json);
MADSTAR_API int madstar_fii_verify(const madstar_graph* g, int32_t k, const int32_t* labels, size_t len, char** out_json);
/* Same, with the partition given as JSON (labels array or part lists). */
MADSTAR_API int madstar_fii_verify_json(const madstar_graph* g, int32_t k, const char* partition_json, char** out_json);
MADSTAR_API int madstar_star_verify_json(const madstar_graph* g, const char* coloring_json, char** out_json);
/* find, convert to a 5-coloring, verify */
MADSTAR_API int madstar_star5(const madstar_graph* g, int64_t timeout_ms, char** out_json);

/* ids may be NULL; graphs are then named by position. With count 0 and
 * builtin set, a generated corpus for k is used. */
MADSTAR_API int madstar_boundary(int32_t k, int32_t n_max, const madstar_graph* const* graphs, const char* const* ids,
                                 size_t count, int builtin, uint64_t seed, int64_t timeout_ms, char** out_json);

/* configurations; ids is a comma list such as "C5,Cp1", or NULL for all */
MADSTAR_API int madstar_config_scan(const madstar_graph* g, const char* ids, char** out_json);
/* match_json: {"config": ..., "key": [...]}. NULL with config set checks every
 * match of that configuration. plan may be NULL to use the catalog. */
MADSTAR_API int madstar_lemma_check(const madstar_graph* g, const char* config, const char* match_json, const char* plan,
                                    int64_t timeout_ms, char** out_json);
/* gadget: "triangle", "J1", "J2", "edge", "path2"; other is the second
 * endpoint for edge and path2, else ignored. out_json reports the budget. */
MADSTAR_API int madstar_attach(const madstar_graph* g, int32_t at, const char* gadget, int32_t other,
                               madstar_graph** out_graph, char** out_json);

/* discharging */
MADSTAR_API int madstar_discharge(const madstar_graph* g, char** out_json);
MADSTAR_API int madstar_discharge_audit(const madstar_graph* g, char** out_json);
/* MADSTAR_NEGATIVE when a precondition fails. */
MADSTAR_API int madstar_terminal_partition(const madstar_graph* g, char** out_json);

/* generators; spec as "g5n:2", "cycle:7", "mad-bounded:10:8/3:7", "host:C5" */
MADSTAR_API int madstar_generate(const char* spec, madstar_graph** out);
/* {"graphs": [{"id": ..., "graph6": ...}, ...]} */
MADSTAR_API int madstar_gen_corpus(int32_t count, int32_t n_max, const char* bound, uint64_t seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
