/* rshare — resolving shares, average resolving shares and the resolving
 * topological index of simple connected graphs, in exact rational arithmetic.
 *
 * C interface over the C++ core. Handles are opaque; every fallible call
 * returns an rshare_status and leaves a message readable through
 * rshare_last_error() (thread-local). Strings returned through char** out
 * parameters are owned by the caller and released with rshare_string_free();
 * strings returned as const char* are owned by the library or the handle
 * they came from.
 */
#ifndef RSHARE_H
#define RSHARE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rshare_status {
    RSHARE_OK = 0,
    RSHARE_ERR_INVALID = 1,      /* bad argument or parameter bound */
    RSHARE_ERR_PARSE = 2,        /* malformed input text */
    RSHARE_ERR_DISCONNECTED = 3, /* operation requires a connected graph */
    RSHARE_ERR_NOMEM = 4,
    RSHARE_ERR_INTERNAL = 5
} rshare_status;

typedef enum rshare_input_format {
    RSHARE_INPUT_AUTO = 0,
    RSHARE_INPUT_EDGELIST = 1,
    RSHARE_INPUT_DIMACS = 2
} rshare_input_format;

typedef enum rshare_graph_format {
    RSHARE_GRAPH_EDGELIST = 0,
    RSHARE_GRAPH_DIMACS = 1
} rshare_graph_format;

typedef enum rshare_report_format {
    RSHARE_REPORT_JSON = 0,
    RSHARE_REPORT_CSV = 1,
    RSHARE_REPORT_TABLE = 2
} rshare_report_format;

typedef struct rshare_graph rshare_graph;
typedef struct rshare_report rshare_report;

const char* rshare_version(void);

/* Message for the most recent failing call on this thread ("" initially). */
const char* rshare_last_error(void);

void rshare_string_free(char* s);

/* ------------------------------------------------------------------ graphs */

/* Build from an edge array laid out u0,v0,u1,v1,... (2*edge_count entries).
 * Self-loops and out-of-range endpoints are rejected; duplicate edges
 * collapse to one. */
rshare_status rshare_graph_build(int64_t vertex_count, const int64_t* endpoints,
                                 int64_t edge_count, rshare_graph** out);

/* family_text: "path:10", "cycle:7", "complete:5", "kpartite:2,3,4",
 * "wheel:9", "friendship:4", "petersen". allow_unverified lifts the
 * k-partite part-size >= 2 guard. */
rshare_status rshare_graph_from_family(const char* family_text, int allow_unverified,
                                       rshare_graph** out);

rshare_status rshare_graph_parse(const char* text, rshare_input_format format,
                                 rshare_graph** out);

void rshare_graph_free(rshare_graph* g);

int64_t rshare_graph_order(const rshare_graph* g);
int64_t rshare_graph_size(const rshare_graph* g);
int rshare_graph_is_connected(const rshare_graph* g);

/* "edgelist" | "dimacs" | "family" */
const char* rshare_graph_source(const rshare_graph* g);

/* Parser warnings, one per line; "" when there are none. */
const char* rshare_graph_warnings(const rshare_graph* g);

rshare_status rshare_graph_write(const rshare_graph* g, rshare_graph_format format,
                                 char** out_text);

/* ----------------------------------------------------------------- compute */

typedef struct rshare_compute_options {
    int64_t threads;        /* 0 = available parallelism */
    int per_pair;           /* nonzero: include per-pair neighborhoods */
    const char* input_desc; /* free-form input description for the report */
} rshare_compute_options;

/* Resolving topological index with its per-vertex decomposition. The graph
 * must be connected with at least two vertices. */
rshare_status rshare_compute(const rshare_graph* g, const rshare_compute_options* options,
                             rshare_report** out);

void rshare_report_free(rshare_report* r);

rshare_status rshare_report_render(const rshare_report* r, rshare_report_format format,
                                   char** out_text);

/* Exact index as "p/q" in lowest terms; owned by the report handle. */
const char* rshare_report_index(const rshare_report* r);

int64_t rshare_report_order(const rshare_report* r);

/* ------------------------------------------------------- metric dimension */

/* Exact metric dimension when the graph has at most exact_cap vertices
 * (*out_is_exact = 1), otherwise a greedy upper bound (*out_is_exact = 0). */
rshare_status rshare_metric_dimension(const rshare_graph* g, int64_t exact_cap,
                                      int64_t* out_value, int* out_is_exact);

/* ------------------------------------------------------------ closed forms */

/* Compare published closed-form indices against definitional computation.
 * kind: one of path, cycle, complete, wheel, friendship, kpartite, petersen.
 * range_or_parts: "A..B" for ranged kinds, a part-size list like "2,3,4" for
 * kpartite, "" for petersen. brute_cap (vertex count) bounds the definitional
 * recomputation; 0 means the default of 200. Writes one line per parameter
 * into *out_text; *out_has_novel is set to 1 when a mismatch is not in the
 * known-discrepancy ledger. */
rshare_status rshare_verify_family(const char* kind, const char* range_or_parts,
                                   int64_t brute_cap, char** out_text, int* out_has_novel);

/* The static ledger of known published-vs-computed discrepancies. */
rshare_status rshare_known_discrepancies(char** out_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RSHARE_H */
