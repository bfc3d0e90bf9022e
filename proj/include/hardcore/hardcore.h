/* C interface to the hard-core model toolkit: exact independence
 * polynomials, occupancy/partition-function bounds, Glauber sampling,
 * random regular graphs, and corpus scanning.
 *
 * Conventions:
 *   - Every fallible call returns hc_status; HC_OK is 0. On failure a
 *     human-readable message is available from hc_last_error() until the
 *     next failing call on the same thread.
 *   - Strings handed out through char** are heap-allocated by the library
 *     and must be released with hc_string_free().
 *   - Objects behind opaque handles are released with their _free call.
 *   - Fugacities are passed as strings ("1", "5/2", "0.25") where exact
 *     rational arithmetic is used, and as doubles where the result is a
 *     double anyway.
 */
#ifndef HARDCORE_H
#define HARDCORE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
    HC_OK = 0,
    HC_ERR_INVALID_ARGUMENT = 1,
    HC_ERR_PARSE = 2,
    HC_ERR_TOO_LARGE = 3,
    HC_ERR_PRECONDITION = 4,
    HC_ERR_BUDGET_EXCEEDED = 5,
    HC_ERR_IO = 6,
    HC_ERR_INTERNAL = 7
} hc_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* hc_last_error(void);

void hc_string_free(char* s);

/* ---------------------------------------------------------------- graphs */

typedef struct hc_graph hc_graph;

/* One graph6 line; an optional ">>graph6<<" header is accepted. */
hc_status hc_graph_from_graph6(const char* line, hc_graph** out);
/* Whitespace-separated "u v" edge lines, '#' comments, 0-based labels. */
hc_status hc_graph_from_edge_list(const char* text, hc_graph** out);
void hc_graph_free(hc_graph* g);

uint32_t hc_graph_order(const hc_graph* g);
hc_status hc_graph_to_graph6(const hc_graph* g, char** out);
hc_status hc_graph_stats(const hc_graph* g, uint32_t* max_degree,
                         uint32_t* min_degree, int* is_regular,
                         int* triangle_free, uint32_t* girth,
                         uint64_t* edge_count);

/* ------------------------------------------- independence polynomial */

typedef struct hc_poly hc_poly;

/* Exact coefficients; size_cap 0 selects the default cap of 40 vertices. */
hc_status hc_poly_compute(const hc_graph* g, uint32_t size_cap, hc_poly** out);
void hc_poly_free(hc_poly* p);

uint32_t hc_poly_alpha(const hc_poly* p);
uint32_t hc_poly_order(const hc_poly* p);
/* Coefficient i_k as a decimal string. */
hc_status hc_poly_coeff(const hc_poly* p, uint32_t k, char** out);
/* {"n":…,"coeffs":["1","5","5"],"alpha":…} */
hc_status hc_poly_to_json(const hc_poly* p, char** out);

/* Exact evaluation at a rational fugacity; JSON object or CSV row. */
hc_status hc_poly_eval_json(const hc_poly* p, const char* lambda, char** out);
hc_status hc_poly_eval_csv(const hc_poly* p, const char* lambda,
                           int with_header, char** out);

/* alpha(G)/mean_size(lambda) as an exact fraction string. */
hc_status hc_ratio(const hc_graph* g, const char* lambda, uint32_t size_cap,
                   char** out);

/* ---------------------------------------------------------------- bounds */

hc_status hc_lambert_w(double z, double* out);
/* Triangle-free occupancy lower bound at maximum degree d. */
hc_status hc_occupancy_lower(uint32_t d, double lambda, double* out);
/* Triangle-free lower bound on log P for an n-vertex max-degree-d graph. */
hc_status hc_log_partition_lower(double n, uint32_t d, double lambda,
                                 double* out);
hc_status hc_kdd_occupancy(uint32_t d, double lambda, double* out);
hc_status hc_kdd_log_partition_per_vertex(uint32_t d, double lambda,
                                          double* out);
hc_status hc_shearer_f(double d, double* out);
/* Degree-free log-partition exponent and the crossover degree behind it. */
hc_status hc_partition_exponent(double n, double lambda, double* exponent,
                                double* crossover_degree);
hc_status hc_tree_lambda(uint32_t d, double alpha, double* out);
hc_status hc_tree_occupancy(uint32_t d, double lambda, double* alpha,
                            double* z);

/* -------------------------------------------------------------- sampling */

/* Glauber-dynamics estimate; burn_in UINT64_MAX and thinning 0 select the
 * defaults (100 n log n and n). Returns the sample JSON object
 * {graph6, lambda, seed, samples, occupancy, stderr, z_histogram, ...}. */
hc_status hc_sample_json(const hc_graph* g, double lambda, uint64_t seed,
                         uint64_t samples, uint64_t burn_in, uint64_t thinning,
                         char** out);

/* ------------------------------------------------- random regular graphs */

/* Configuration-model sample; triangle_free nonzero adds the conditioning.
 * want_json 0 yields the bare graph6 line, nonzero a JSON object with
 * rejection statistics. max_attempts 0 selects the default of 100000. */
hc_status hc_random_regular(uint32_t n, uint32_t d, uint64_t seed,
                            int triangle_free, uint64_t max_attempts,
                            int want_json, char** out);

/* ------------------------------------------------- streaming operations */

/* Receives one output line (no trailing newline) per record; return 0 to
 * continue, nonzero to abort the operation with HC_ERR_IO. */
typedef int (*hc_line_sink)(void* ctx, const char* line);

/* Ratio scan over a graph6 corpus file ("-" reads stdin). Emits the ranked
 * records through the sink (CSV rows with a header line, or JSON lines when
 * fmt_json). Warnings about skipped lines stream through warn_sink when it
 * is non-NULL. clique_free_r 0 disables that filter. */
hc_status hc_scan_file(const char* path, const char* lambda,
                       int triangle_free, uint32_t clique_free_r,
                       uint32_t min_degree, int regular_only, uint32_t top_k,
                       uint32_t size_cap, int fmt_json, hc_line_sink sink,
                       void* sink_ctx, hc_line_sink warn_sink, void* warn_ctx,
                       uint64_t* ranked, uint64_t* filtered_out);

/* Exhaustive circulant-graph search on n vertices with connection-set sizes
 * in [min_size, max_size] (max_size 0 means n/2), one representative per
 * multiplier-equivalence class. alpha_target -1 disables that filter; top_k
 * 0 keeps every match. */
hc_status hc_circulant_search(uint32_t n, uint32_t min_size, uint32_t max_size,
                              int triangle_free, int64_t alpha_target,
                              const char* lambda, uint32_t top_k, int fmt_json,
                              hc_line_sink sink, void* sink_ctx);

/* Verifies every applicable bound for each corpus graph at each fugacity in
 * the comma-separated lambda list. Rows stream through the sink; the overall
 * summary (graph/row/violation counts, minimum slacks, notes) is returned as
 * a JSON string. violations receives the total violation count. */
hc_status hc_verify_bounds_file(const char* path, const char* lambda_list,
                                uint32_t size_cap, int fmt_json,
                                hc_line_sink sink, void* sink_ctx,
                                uint64_t* violations, char** summary_json);

/* Random-regular convergence experiment: one graph per seed, one row per
 * (seed, lambda), CSV (with header) or JSON lines. samples 0, burn_in
 * UINT64_MAX and thinning 0 select defaults (100000, 100 n log n, n). */
hc_status hc_tightness(uint32_t n, uint32_t d, const char* lambda_list,
                       const char* seed_list, uint64_t samples,
                       uint64_t burn_in, uint64_t thinning, int fmt_json,
                       hc_line_sink sink, void* sink_ctx);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HARDCORE_H */
