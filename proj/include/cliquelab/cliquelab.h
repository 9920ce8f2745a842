#ifndef CLIQUELAB_H
#define CLIQUELAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(CLIQUELAB_BUILDING)
#define CLQ_API __attribute__((visibility("default")))
#else
#define CLQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum clq_status {
    CLQ_OK = 0,
    CLQ_ERR_PARSE = 1,
    CLQ_ERR_RANGE = 2,
    CLQ_ERR_SELF_LOOP = 3,
    CLQ_ERR_DOMAIN = 4,
    CLQ_ERR_PRECONDITION = 5,
    CLQ_ERR_BUDGET = 6,
    CLQ_ERR_IO = 7,
    CLQ_ERR_INTERNAL = 8,
    CLQ_ERR_ARGUMENT = 9
} clq_status;

/* Immutable simple graph. */
typedef struct clq_graph clq_graph;

CLQ_API const char* clq_version(void);
CLQ_API const char* clq_status_name(clq_status status);

/* Message of the last failure on the calling thread; "" after success. */
CLQ_API const char* clq_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
CLQ_API void clq_string_free(char* s);

/* format: "graph6" or "edgelist". */
CLQ_API clq_status clq_graph_parse(const char* text, size_t length, const char* format, clq_graph** out);
/* pairs holds 2*edge_count vertex indices. */
CLQ_API clq_status clq_graph_from_edges(int n, const int* pairs, size_t edge_count, clq_graph** out);
CLQ_API void clq_graph_free(clq_graph* g);
CLQ_API int clq_graph_order(const clq_graph* g);
CLQ_API int64_t clq_graph_size(const clq_graph* g);
CLQ_API int clq_graph_adjacent(const clq_graph* g, int u, int v);
CLQ_API clq_status clq_graph_min_degree(const clq_graph* g, int* out);
CLQ_API clq_status clq_graph_serialize(const clq_graph* g, const char* format, char** out);

/*
 * Analysis entry points. `options` is a JSON object (NULL or "" for
 * defaults); the result is a JSON document written to *out_json.
 *
 *   clq_cliques  {"r", "cap"}
 *   clq_alpha    {"ell", "mode": "auto"|"exact"|"bounds", "threshold", "restarts", "seed"}
 *   clq_factor   {"r", "max_nodes", "time_ms", "max_candidates"}
 *   clq_tiling   {"r", "max_nodes", "time_ms", "x", "y", "a"}   (x, y, a select a cross tiling)
 *   clq_cover    {"r", "w"}
 */
CLQ_API clq_status clq_cliques(const clq_graph* g, const char* options, char** out_json);
CLQ_API clq_status clq_alpha(const clq_graph* g, const char* options, char** out_json);
CLQ_API clq_status clq_factor(const clq_graph* g, const char* options, char** out_json);
CLQ_API clq_status clq_tiling(const clq_graph* g, const char* options, char** out_json);
CLQ_API clq_status clq_cover(const clq_graph* g, const char* options, char** out_json);

/*
 * action: "verify", "absorbing", "reach", "census" or "transferral".
 *   verify      {"r", "t", "s", "a"}
 *   absorbing   {"r", "a", "xi", "exhaustive_limit", "samples", "seed"}
 *   reach       {"r", "t", "u", "v", "cap"}
 *   census      {"r", "parts", "beta"}
 *   transferral {"r", "parts", "beta", "i", "j"}  or  {"k", "census", "i", "j"} with g == NULL
 * Budget keys "max_nodes", "time_ms" apply to every action.
 */
CLQ_API clq_status clq_absorb(const clq_graph* g, const char* action, const char* options, char** out_json);

/*
 * spec: {"family", "n", "r", "ell", "x", "rho", "seed", "sizes", "core",
 *        "epsilon", "delta", "eta", "source", "fraction", ...}.
 * Writes the graph and a sidecar with designated sets, provenance and metrics.
 */
CLQ_API clq_status clq_generate(const char* spec, clq_graph** out_graph, char** out_sidecar);

/*
 * action: "check", "condition", "search" or "estimate". request holds the
 * weighted graph {"k", "triples"} (or {"k", "uniform": w}) plus "c", "mu", "t", "seed", "retries",
 * "trials", "set", "exact". c and mu accept numbers or "p/q" strings.
 */
CLQ_API clq_status clq_wpart(const char* action, const char* request, char** out_json);

/* Runs a sweep described by a JSON config; returns the records as JSON. */
CLQ_API clq_status clq_sweep(const char* config, char** out_json);

/* Aggregates sweep CSV text; format "text", "csv" or "json". */
CLQ_API clq_status clq_report(const char* sweep_csv, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif
