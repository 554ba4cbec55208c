#ifndef MINCUT_FFI_H
#define MINCUT_FFI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>
#include <stdbool.h>

/**
 * Which way an orbit of the mincut-graph operator ended.
 */
typedef enum MincutOutcomeKind {
  MINCUT_OUTCOME_KIND_FIXED_POINT = 0,
  MINCUT_OUTCOME_KIND_PERIODIC = 1,
  MINCUT_OUTCOME_KIND_NULL = 2,
  MINCUT_OUTCOME_KIND_UNRESOLVED = 3,
} MincutOutcomeKind;

/**
 * Status codes returned by every fallible call.
 */
typedef enum MincutStatus {
  MINCUT_STATUS_OK = 0,
  MINCUT_STATUS_NULL_POINTER = 1,
  MINCUT_STATUS_INVALID_ARGUMENT = 2,
  MINCUT_STATUS_PARSE = 3,
  MINCUT_STATUS_BUDGET_EXCEEDED = 4,
  MINCUT_STATUS_DISCONNECTED = 5,
  MINCUT_STATUS_OUT_OF_RANGE = 6,
  MINCUT_STATUS_INTERNAL = 99,
} MincutStatus;

/**
 * Opaque handle to an enumerated mincut family.
 */
typedef struct MincutFamily MincutFamily;

/**
 * Opaque graph handle.
 */
typedef struct MincutGraph MincutGraph;

/**
 * Opaque handle to an iteration trace.
 */
typedef struct MincutTrace MincutTrace;

typedef struct MincutClassification {
  size_t lambda;
  size_t min_degree;
  size_t max_degree;
  bool maximally_edge_connected;
  bool super_lambda;
  bool regular;
  bool fixed_point_predicted;
  size_t mincut_count;
  size_t trivial_cut_count;
} MincutClassification;

/**
 * Outcome of [`mincut_iterate`]. `period` is 1 for fixed points and 0
 * when there is no terminal cycle; `steps` counts operator applications.
 */
typedef struct MincutOutcome {
  enum MincutOutcomeKind kind;
  size_t period;
  size_t preperiod;
  size_t steps;
} MincutOutcome;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *mincut_last_error(void);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2m`
 * consecutive endpoints. `edges` may be null when `m` is 0.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values; `out` must be writable.
 */
enum MincutStatus mincut_graph_from_edges(size_t n,
                                          const size_t *edges,
                                          size_t m,
                                          struct MincutGraph **out);

/**
 * Parses one graph6 string.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum MincutStatus mincut_graph_from_graph6(const char *text, struct MincutGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void mincut_graph_free(struct MincutGraph *g);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t mincut_graph_order(const struct MincutGraph *g);

/**
 * Number of edges; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t mincut_graph_size(const struct MincutGraph *g);

/**
 * Whether `u` and `v` are adjacent; false for bad handles or indices.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
bool mincut_graph_has_edge(const struct MincutGraph *g, size_t u, size_t v);

/**
 * Encodes `g` as graph6. Release the string with [`mincut_string_free`].
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum MincutStatus mincut_graph_to_graph6(const struct MincutGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void mincut_string_free(char *s);

/**
 * Edge connectivity λ; 0 for disconnected graphs.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum MincutStatus mincut_edge_connectivity(const struct MincutGraph *g, size_t *out);

/**
 * Enumerates every minimum edge-cut. Graphs with more than `budget`
 * vertices (or more than 64) fail with `MINCUT_STATUS_BUDGET_EXCEEDED`.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum MincutStatus mincut_enumerate(const struct MincutGraph *g,
                                   size_t budget,
                                   struct MincutFamily **out);

/**
 * # Safety
 * `f` must be null or a live family handle.
 */
void mincut_family_free(struct MincutFamily *f);

/**
 * # Safety
 * `f` must be null or a live family handle.
 */
size_t mincut_family_lambda(const struct MincutFamily *f);

/**
 * # Safety
 * `f` must be null or a live family handle.
 */
size_t mincut_family_len(const struct MincutFamily *f);

/**
 * Side of cut `i` that contains vertex 0, as a bitmask over vertices.
 *
 * # Safety
 * `f` must be a live family handle; `out` must be writable.
 */
enum MincutStatus mincut_family_cut_side(const struct MincutFamily *f, size_t i, uint64_t *out);

/**
 * Copies the edges of cut `i` into `buf` as `2λ` endpoints. `cap` is the
 * number of `size_t` slots available and must be at least `2λ`.
 *
 * # Safety
 * `f` must be a live family handle; `buf` must have `cap` writable slots.
 */
enum MincutStatus mincut_family_cut_edges(const struct MincutFamily *f,
                                          size_t i,
                                          size_t *buf,
                                          size_t cap);

/**
 * The mincut graph `X(g)` as a new handle.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum MincutStatus mincut_xgraph(const struct MincutGraph *g,
                                size_t budget,
                                struct MincutGraph **out);

/**
 * # Safety
 * `g` and `h` must be live graph handles; `out` must be writable.
 */
enum MincutStatus mincut_are_isomorphic(const struct MincutGraph *g,
                                        const struct MincutGraph *h,
                                        bool *out);

/**
 * Classifies a connected graph on at least two vertices.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum MincutStatus mincut_classify(const struct MincutGraph *g, struct MincutClassification *out);

/**
 * Iterates `X` from `g` for at most `max_steps` applications with the
 * default enumeration and canonical-labeling budgets.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum MincutStatus mincut_iterate(const struct MincutGraph *g,
                                 size_t max_steps,
                                 struct MincutTrace **out);

/**
 * # Safety
 * `t` must be null or a live trace handle.
 */
void mincut_trace_free(struct MincutTrace *t);

/**
 * # Safety
 * `t` must be a live trace handle; `out` must be writable.
 */
enum MincutStatus mincut_trace_outcome(const struct MincutTrace *t, struct MincutOutcome *out);

/**
 * Number of graphs recorded in the trace, the input included.
 *
 * # Safety
 * `t` must be null or a live trace handle.
 */
size_t mincut_trace_len(const struct MincutTrace *t);

/**
 * Copy of the `i`-th graph of the orbit as a new handle.
 *
 * # Safety
 * `t` must be a live trace handle; `out` must be writable.
 */
enum MincutStatus mincut_trace_graph(const struct MincutTrace *t,
                                     size_t i,
                                     struct MincutGraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MINCUT_FFI_H */
