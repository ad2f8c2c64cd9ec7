#ifndef INDEGRAPH_H
#define INDEGRAPH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Girth or diameter value used when the length is infinite.
#define INDEGRAPH_INFINITE UINT64_MAX

// Result code of every fallible call.
typedef enum IndegraphStatus {
  INDEGRAPH_STATUS_OK = 0,
  INDEGRAPH_STATUS_NULL_POINTER = 1,
  INDEGRAPH_STATUS_INVALID_ARGUMENT = 2,
  INDEGRAPH_STATUS_CAPACITY_EXCEEDED = 3,
  INDEGRAPH_STATUS_OVERFLOW = 4,
  INDEGRAPH_STATUS_INTERNAL = 5,
} IndegraphStatus;

// Report rendering formats.
typedef enum IndegraphFormat {
  INDEGRAPH_FORMAT_MARKDOWN = 0,
  INDEGRAPH_FORMAT_JSON = 1,
  INDEGRAPH_FORMAT_CSV = 2,
} IndegraphFormat;

// Explicit graph on `Z_n`.
typedef struct IndegraphGraph IndegraphGraph;

// Result of an audit sweep.
typedef struct IndegraphReport IndegraphReport;

// Closed-form invariants. Boolean fields are 0 or 1.
typedef struct IndegraphInvariants {
  uint64_t n;
  uint64_t edge_count;
  uint8_t connected;
  uint8_t complete;
  uint8_t star;
  uint8_t bipartite;
  uint8_t hamiltonian;
  // `INDEGRAPH_INFINITE` when acyclic.
  uint64_t girth;
  uint64_t diameter;
  uint64_t clique_number;
  uint64_t chromatic_number;
  uint64_t partite_count;
  uint64_t max_degree;
} IndegraphInvariants;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null if none. The
// pointer is valid until the next failing call on the same thread.
const char *indegraph_last_error(void);

// Library version as a static NUL-terminated string.
const char *indegraph_version(void);

// Closed-form invariants of the graph for `n`; never builds the graph.
//
// # Safety
// `out` must be null or point to writable memory for one `IndegraphInvariants`.
enum IndegraphStatus indegraph_invariants(uint64_t n, struct IndegraphInvariants *out);

// Builds the explicit graph. Fails with `CAPACITY_EXCEEDED` when `n` is
// above `build_limit` (0 selects the default limit).
//
// # Safety
// `out` must be null or point to writable storage for one pointer.
enum IndegraphStatus indegraph_graph_build(uint64_t n,
                                           uint64_t build_limit,
                                           struct IndegraphGraph **out);

// Releases a graph. Null is ignored.
//
// # Safety
// `graph` must be null or a handle from `indegraph_graph_build` not yet freed.
void indegraph_graph_free(struct IndegraphGraph *graph);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `graph` must be null or a live handle.
uint64_t indegraph_graph_vertex_count(const struct IndegraphGraph *graph);

// # Safety
// `graph` must be null or a live handle; `out` must be null or writable.
enum IndegraphStatus indegraph_graph_edge_count(const struct IndegraphGraph *graph, uint64_t *out);

// # Safety
// `graph` must be null or a live handle; `out` must be null or writable.
enum IndegraphStatus indegraph_graph_degree(const struct IndegraphGraph *graph,
                                            uint64_t vertex,
                                            uint64_t *out);

// Writes 1 to `out` if `a` and `b` are adjacent, else 0.
//
// # Safety
// `graph` must be null or a live handle; `out` must be null or writable.
enum IndegraphStatus indegraph_graph_is_adjacent(const struct IndegraphGraph *graph,
                                                 uint64_t a,
                                                 uint64_t b,
                                                 uint8_t *out);

// Audits every statement for each `n` in `[lo, hi]` with default limits,
// falling back to closed forms beyond them. `jobs` = 0 uses one thread.
//
// # Safety
// `out` must be null or point to writable storage for one pointer.
enum IndegraphStatus indegraph_sweep(uint64_t lo,
                                     uint64_t hi,
                                     uint32_t jobs,
                                     struct IndegraphReport **out);

// Releases a report. Null is ignored.
//
// # Safety
// `report` must be null or a handle from `indegraph_sweep` not yet freed.
void indegraph_report_free(struct IndegraphReport *report);

// Number of (n, statement) pairs whose verdict is MISMATCH; 0 for null.
//
// # Safety
// `report` must be null or a live handle.
uint64_t indegraph_report_mismatch_count(const struct IndegraphReport *report);

// First counterexample for a statement id such as `"T2.10"`, written to
// `out`; writes 0 when the statement held throughout.
//
// # Safety
// `report` must be null or a live handle, `theorem` null or NUL-terminated,
// `out` null or writable.
enum IndegraphStatus indegraph_report_first_counterexample(const struct IndegraphReport *report,
                                                           const char *theorem,
                                                           uint64_t *out);

// Renders a report. The string must be released with `indegraph_string_free`.
//
// # Safety
// `report` must be null or a live handle; `out` null or writable.
enum IndegraphStatus indegraph_report_render(const struct IndegraphReport *report,
                                             enum IndegraphFormat format,
                                             char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string from `indegraph_report_render` not yet freed.
void indegraph_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INDEGRAPH_H */
