#ifndef EDGE_IDEALS_H
#define EDGE_IDEALS_H

/* This file is generated by cbindgen from the edge-ideals-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every FFI entry point.
typedef enum ei_status {
  // Success.
  EI_STATUS_OK = 0,
  // A required pointer argument was NULL.
  EI_STATUS_NULL_POINTER = 1,
  // Arguments violate a precondition (bad vertex count, loop edge,
  // non-prime characteristic, ...).
  EI_STATUS_INVALID_ARGUMENT = 2,
  // The input text failed to parse.
  EI_STATUS_PARSE_ERROR = 3,
  // The operation is undefined for the input (e.g. the dual of an edgeless
  // graph's edge ideal).
  EI_STATUS_UNSUPPORTED = 4,
  // Internal cross-check failure; never expected.
  EI_STATUS_INTERNAL = 5,
} ei_status;

// Opaque graph handle.
typedef struct ei_graph ei_graph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a graph on `n` vertices from `edge_count` pairs of 1-based
// endpoints laid out as `[i1, j1, i2, j2, ...]`.
//
// # Safety
// `edges` must point to `2 * edge_count` readable `u32`s (may be NULL when
// `edge_count` is 0); `out` must be a valid pointer. The handle must be
// released with [`ei_graph_free`].
enum ei_status ei_graph_create(uint32_t n,
                               const uint32_t *edges,
                               size_t edge_count,
                               struct ei_graph **out);

// # Safety
// `out` must be a valid pointer.
enum ei_status ei_graph_cycle(uint32_t n, struct ei_graph **out);

// # Safety
// `out` must be a valid pointer.
enum ei_status ei_graph_complete(uint32_t n, struct ei_graph **out);

// # Safety
// `out` must be a valid pointer.
enum ei_status ei_graph_path(uint32_t n, struct ei_graph **out);

// Parses the edge-list text format (first non-comment line `n`, then one
// `i j` pair per line; `#` starts a comment).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be a valid pointer.
enum ei_status ei_graph_parse(const char *text, struct ei_graph **out);

// Releases a graph handle. NULL is a no-op.
//
// # Safety
// `g` must have been returned by one of the `ei_graph_*` constructors and
// not freed already.
void ei_graph_free(struct ei_graph *g);

// # Safety
// `g` must be a live handle; `out` must be valid.
enum ei_status ei_graph_vertex_count(const struct ei_graph *g, uint32_t *out);

// # Safety
// `g` must be a live handle; `out` must be valid.
enum ei_status ei_graph_is_chordal(const struct ei_graph *g, bool *out);

// # Safety
// `g` must be a live handle; `out` must be valid.
enum ei_status ei_graph_is_forest(const struct ei_graph *g, bool *out);

// Sequential Cohen-Macaulayness over the field of the given characteristic
// (0 or a prime below 2^31).
//
// # Safety
// `g` must be a live handle; `out` must be valid.
enum ei_status ei_is_scm(const struct ei_graph *g, uint64_t characteristic, bool *out);

// # Safety
// `g` must be a live handle; `out` must be valid.
enum ei_status ei_is_cm(const struct ei_graph *g, uint64_t characteristic, bool *out);

// Unmixedness of the edge ideal; edgeless graphs count as unmixed.
//
// # Safety
// `g` must be a live handle; `out` must be valid.
enum ei_status ei_is_unmixed(const struct ei_graph *g, bool *out);

// Full classification as a JSON object, the same shape the CLI emits.
//
// # Safety
// `g` must be a live handle; `out` must be valid. Free the string with
// [`ei_string_free`].
enum ei_status ei_classify_json(const struct ei_graph *g, uint64_t characteristic, char **out);

// Alexander dual generators as a JSON array of index arrays.
//
// # Safety
// `g` must be a live handle; `out` must be valid. Free the string with
// [`ei_string_free`].
enum ei_status ei_dual_json(const struct ei_graph *g, char **out);

// Betti table of the edge ideal (or its Alexander dual) as JSON
// `{"i":…,"j":…,"beta":…}` triples.
//
// # Safety
// `g` must be a live handle; `out` must be valid. Free the string with
// [`ei_string_free`].
enum ei_status ei_betti_json(const struct ei_graph *g,
                             uint64_t characteristic,
                             bool of_dual,
                             char **out);

// Releases a string returned by this library. NULL is a no-op.
//
// # Safety
// `s` must have been returned by an `ei_*_json` function and not freed
// already.
void ei_string_free(char *s);

// Static description of a status code; never needs freeing.
const char *ei_status_message(enum ei_status status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EDGE_IDEALS_H */
