#ifndef LCP_H
#define LCP_H

/* This file is generated by cbindgen from the lcp-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum LcpStatus {
  LCP_STATUS_OK = 0,
  // A required pointer argument was null.
  LCP_STATUS_NULL_ARGUMENT = 1,
  // Input text was not valid UTF-8.
  LCP_STATUS_INVALID_UTF8 = 2,
  // Input text did not parse as a `p lcp` instance.
  LCP_STATUS_PARSE_ERROR = 3,
  // An argument violates a documented precondition (e.g. a self-loop).
  LCP_STATUS_INVALID_ARGUMENT = 4,
  // The solver refused the instance (e.g. projected tables too large).
  LCP_STATUS_SOLVE_FAILED = 5,
  // The caller's buffer is too small; the required length was written.
  LCP_STATUS_BUFFER_TOO_SMALL = 6,
  // An internal panic was trapped at the boundary.
  LCP_STATUS_PANIC = 7,
} LcpStatus;

// Opaque graph handle.
typedef struct LcpGraph LcpGraph;

// Opaque solve-outcome handle.
typedef struct LcpResult LcpResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version string of the library; static storage, do not free.
const char *lcp_version(void);

// Creates a graph with vertices `1..=n` and no edges.
enum LcpStatus lcp_graph_new(uint32_t n, struct LcpGraph **out);

// Parses a `p lcp` instance from a NUL-terminated string.
//
// # Safety
// `text` must be a valid NUL-terminated string and `out` a valid pointer.
enum LcpStatus lcp_graph_parse(const char *text, struct LcpGraph **out);

// Inserts edge `{u, v}`, creating endpoints as needed. Vertex ids are
// 1-based; self-loops, zero ids, and duplicate edges are rejected.
//
// # Safety
// `g` must be a live handle from this library.
enum LcpStatus lcp_graph_add_edge(struct LcpGraph *g, uint32_t u, uint32_t v);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle from this library.
uint64_t lcp_graph_vertex_count(const struct LcpGraph *g);

// Number of edges, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle from this library.
uint64_t lcp_graph_edge_count(const struct LcpGraph *g);

// Releases a graph handle; null is a no-op.
//
// # Safety
// `g` must be null or an unreleased handle from this library.
void lcp_graph_free(struct LcpGraph *g);

// Decides whether mu(G) >= k; with `want_witness`, Yes results carry a
// certifying coloring retrievable via the witness accessors.
//
// # Safety
// `g` must be a live graph handle and `out` a valid pointer.
enum LcpStatus lcp_solve(const struct LcpGraph *g,
                         uint32_t k,
                         bool want_witness,
                         struct LcpResult **out);

// Computes mu(G) and an optimal coloring.
//
// # Safety
// `g` must be a live graph handle and `out` a valid pointer.
enum LcpStatus lcp_optimize(const struct LcpGraph *g, struct LcpResult **out);

// 1 for Yes, 0 for No, -1 for a null handle.
//
// # Safety
// `r` must be null or a live result handle.
int32_t lcp_result_verdict(const struct LcpResult *r);

// The decision parameter k, or -1 in optimization mode or for null.
//
// # Safety
// `r` must be null or a live result handle.
int64_t lcp_result_k(const struct LcpResult *r);

// The computed mu, or -1 in decision mode or for null.
//
// # Safety
// `r` must be null or a live result handle.
int64_t lcp_result_mu(const struct LcpResult *r);

// Red-edge count of the reported coloring, or -1 when no coloring exists.
//
// # Safety
// `r` must be null or a live result handle.
int64_t lcp_result_red_edges(const struct LcpResult *r);

// Blue-edge count of the reported coloring, or -1 when no coloring exists.
//
// # Safety
// `r` must be null or a live result handle.
int64_t lcp_result_blue_edges(const struct LcpResult *r);

// Which pipeline stage decided (decision mode); borrowed from the result,
// valid until `lcp_result_free`. Null in optimization mode or for null.
//
// # Safety
// `r` must be null or a live result handle.
const char *lcp_result_decided_by(const struct LcpResult *r);

// 1 when the result carries a witness coloring, 0 when not, -1 for null.
//
// # Safety
// `r` must be null or a live result handle.
int32_t lcp_result_has_witness(const struct LcpResult *r);

// Copies the red vertex list into `out` (capacity `cap` entries); the
// required length is always stored in `written`. Returns `BufferTooSmall`
// without copying when `cap` is short — call with `cap = 0` to query.
//
// # Safety
// `r` must be a live result handle, `written` valid, and `out` must point
// to at least `cap` writable entries when `cap > 0`.
enum LcpStatus lcp_result_copy_red(const struct LcpResult *r,
                                   uint32_t *out,
                                   uint64_t cap,
                                   uint64_t *written);

// Blue-side counterpart of `lcp_result_copy_red`.
//
// # Safety
// Same contract as `lcp_result_copy_red`.
enum LcpStatus lcp_result_copy_blue(const struct LcpResult *r,
                                    uint32_t *out,
                                    uint64_t cap,
                                    uint64_t *written);

// Releases a result handle; null is a no-op.
//
// # Safety
// `r` must be null or an unreleased handle from this library.
void lcp_result_free(struct LcpResult *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LCP_H */
