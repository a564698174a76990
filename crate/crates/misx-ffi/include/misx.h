#ifndef MISX_H
#define MISX_H

/* Generated by cbindgen from misx-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status of a C-API call.
 */
typedef enum MisxStatus {
  MISX_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  MISX_STATUS_NULL_ARGUMENT,
  /**
   * Parameters violate a documented precondition.
   */
  MISX_STATUS_INVALID_ARGUMENT,
  /**
   * An edge list contained a self-loop.
   */
  MISX_STATUS_SELF_LOOP,
  /**
   * A vertex index was out of range.
   */
  MISX_STATUS_VERTEX_OUT_OF_RANGE,
  /**
   * A tree-only operation received a non-tree.
   */
  MISX_STATUS_NOT_A_TREE,
  /**
   * The order exceeds a hard guard.
   */
  MISX_STATUS_ORDER_GUARD,
  /**
   * Unparseable graph6, edge-list, or number text.
   */
  MISX_STATUS_MALFORMED_INPUT,
  /**
   * An internal invariant failed; report as a bug.
   */
  MISX_STATUS_DEFECT,
} MisxStatus;

/**
 * Opaque graph handle.
 */
typedef struct MisxGraph MisxGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent error on this thread, or null. Free with
 * [`misx_string_free`].
 */
char *misx_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must have been returned by this library and not freed before.
 */
void misx_string_free(char *s);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `g` must have been returned by this library and not freed before.
 */
void misx_graph_free(struct MisxGraph *g);

/**
 * Builds a graph on `n` vertices from `num_edges` pairs packed flat as
 * `u0, v0, u1, v1, ...`. Self-loops and out-of-range endpoints are
 * rejected; duplicate edges collapse.
 *
 * # Safety
 * `endpoints` must point to `2 * num_edges` readable values (or be null
 * when `num_edges` is zero); `out` must be a valid destination.
 */
enum MisxStatus misx_graph_from_edges(size_t n,
                                      const size_t *endpoints,
                                      size_t num_edges,
                                      struct MisxGraph **out);

/**
 * Decodes a NUL-terminated graph6 string.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be a valid
 * destination.
 */
enum MisxStatus misx_graph_from_graph6(const char *text, struct MisxGraph **out);

/**
 * Encodes a graph as graph6.
 *
 * # Safety
 * `g` must be a live handle; `out` must be a valid destination.
 */
enum MisxStatus misx_graph_to_graph6(const struct MisxGraph *g, char **out);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
size_t misx_graph_order(const struct MisxGraph *g);

/**
 * Number of edges; 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
size_t misx_graph_edge_count(const struct MisxGraph *g);

/**
 * Whether the edge `{u, v}` is present. False for a null handle or
 * out-of-range endpoints.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
bool misx_graph_has_edge(const struct MisxGraph *g, size_t u, size_t v);

/**
 * Whether the graph is a tree.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
bool misx_graph_is_tree(const struct MisxGraph *g);

/**
 * Whether every degree is at most 3.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
bool misx_graph_is_subcubic(const struct MisxGraph *g);

/**
 * Complement on the same vertex set.
 *
 * # Safety
 * `g` must be a live handle; `out` must be a valid destination.
 */
enum MisxStatus misx_graph_complement(const struct MisxGraph *g, struct MisxGraph **out);

/**
 * Exact `(alpha, count)` by branch-and-bound; guarded at order 30. The
 * count is written as a decimal string.
 *
 * # Safety
 * All pointers must be valid destinations; `g` must be a live handle.
 */
enum MisxStatus misx_count_mis_exact(const struct MisxGraph *g,
                                     size_t *alpha_out,
                                     char **count_out);

/**
 * Exact `(alpha, count)` for a tree via the linear-time DP.
 *
 * # Safety
 * All pointers must be valid destinations; `g` must be a live handle.
 */
enum MisxStatus misx_count_mis_tree(const struct MisxGraph *g, size_t *alpha_out, char **count_out);

/**
 * Splits the maximum-independent-set count of a tree by membership of
 * vertex `v`. Both counts are decimal strings.
 *
 * # Safety
 * All pointers must be valid destinations; `g` must be a live handle.
 */
enum MisxStatus misx_conditional_count_tree(const struct MisxGraph *g,
                                            size_t v,
                                            char **with_out,
                                            char **without_out);

/**
 * Number of cliques of order `q`, as a decimal string.
 *
 * # Safety
 * All pointers must be valid destinations; `g` must be a live handle.
 */
enum MisxStatus misx_count_cliques(const struct MisxGraph *g, size_t q, char **count_out);

/**
 * Number of cliques of order `q` containing vertex `u`, as a decimal
 * string.
 *
 * # Safety
 * All pointers must be valid destinations; `g` must be a live handle.
 */
enum MisxStatus misx_clique_degree(const struct MisxGraph *g, size_t u, size_t q, char **count_out);

/**
 * The Turán graph `T_p(n)`.
 *
 * # Safety
 * `out` must be a valid destination.
 */
enum MisxStatus misx_turan_graph(size_t n, size_t p, struct MisxGraph **out);

/**
 * Complement of `T_alpha(n)`: a disjoint union of balanced cliques.
 *
 * # Safety
 * `out` must be a valid destination.
 */
enum MisxStatus misx_turan_complement(size_t n, size_t alpha, struct MisxGraph **out);

/**
 * The star with `n - alpha - 1` edges subdivided once.
 *
 * # Safety
 * `out` must be a valid destination.
 */
enum MisxStatus misx_gen_subdivided_star(size_t n, size_t alpha, struct MisxGraph **out);

/**
 * The caterpillar with a pendant on every vertex of a path of order `k`.
 *
 * # Safety
 * `out` must be a valid destination.
 */
enum MisxStatus misx_gen_caterpillar(size_t k, struct MisxGraph **out);

/**
 * A tree grown from a single vertex by `steps` middle-vertex path
 * attachments. With `seeded` false the deterministic chain policy is
 * used and `seed` is ignored.
 *
 * # Safety
 * `out` must be a valid destination.
 */
enum MisxStatus misx_gen_p3_tree(size_t steps, bool seeded, uint64_t seed, struct MisxGraph **out);

/**
 * The mixed extremal subcubic tree for the given order and independence
 * number.
 *
 * # Safety
 * `out` must be a valid destination.
 */
enum MisxStatus misx_gen_extremal_subcubic(size_t n, size_t alpha, struct MisxGraph **out);

/**
 * The `n`-th Fibonacci number as a decimal string.
 *
 * # Safety
 * `out` must be a valid destination.
 */
enum MisxStatus misx_fib(size_t n, char **out);

/**
 * The ceiling/floor product bound for order `n` and independence number
 * `alpha`, as a decimal string.
 *
 * # Safety
 * `out` must be a valid destination.
 */
enum MisxStatus misx_general_bound(size_t n, size_t alpha, char **out);

/**
 * The order-only bound `3^(n/3)`-style value, as a decimal string.
 *
 * # Safety
 * `out` must be a valid destination.
 */
enum MisxStatus misx_moon_moser_bound(size_t n, char **out);

/**
 * The tree bound `2^(n-alpha-1) (+1 when 2 alpha = n)`, as a decimal
 * string.
 *
 * # Safety
 * `out` must be a valid destination.
 */
enum MisxStatus misx_tree_bound(size_t n, size_t alpha, char **out);

/**
 * Compares the decimal integer `c` against `phi^m` exactly. Writes -1,
 * 0, or 1.
 *
 * # Safety
 * `c_decimal` must be a valid NUL-terminated string; `ordering_out`
 * must be a valid destination.
 */
enum MisxStatus misx_phi_power_compare(const char *c_decimal, size_t m, int32_t *ordering_out);

/**
 * Runs one exhaustive verifier (`theorem` is one of "1", "2", "3", "4",
 * "cor1", "fig1") and writes its summary counters. Returns Ok even when
 * violations were found; the counters carry the verdict.
 *
 * # Safety
 * `theorem` must be a valid NUL-terminated string; the counter pointers
 * must be valid destinations.
 */
enum MisxStatus misx_verify(const char *theorem,
                            size_t max_n,
                            size_t jobs,
                            size_t *instances_out,
                            size_t *violations_out,
                            size_t *mismatches_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MISX_H */
