#ifndef GRAPH_DISCORD_H
#define GRAPH_DISCORD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call.
 */
typedef enum GdStatus {
  GD_STATUS_OK = 0,
  GD_STATUS_NULL_POINTER = 1,
  GD_STATUS_PARSE = 2,
  GD_STATUS_DIMENSION = 3,
  GD_STATUS_EMPTY_GRAPH = 4,
  GD_STATUS_INVALID_ARGUMENT = 5,
  GD_STATUS_INTERNAL = 6,
} GdStatus;

/**
 * Opaque graph handle.
 */
typedef struct GdGraph GdGraph;

/**
 * Opaque cluster labeling handle.
 */
typedef struct GdLabeling GdLabeling;

/**
 * Violation totals and `QD` for one sign.
 */
typedef struct GdQd {
  uint64_t prop2;
  uint64_t prop3;
  uint64_t prop4;
  uint64_t prop5;
  uint64_t qd;
  bool zero_discord;
} GdQd;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *gd_status_message(enum GdStatus status);

/**
 * Message for the most recent failure on this thread; empty after a
 * success. Valid until the next call on the same thread.
 */
const char *gd_last_error(void);

/**
 * Builds a graph from `edge_count` pairs of 1-based endpoints in `edges`
 * and `loop_count` 1-based vertices in `loops`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` values and `loops` to
 * `loop_count` values (either may be null when its count is 0); `out` must
 * be writable.
 */
enum GdStatus gd_graph_new(size_t vertex_count,
                           const uint32_t *edges,
                           size_t edge_count,
                           const uint32_t *loops,
                           size_t loop_count,
                           struct GdGraph **out);

/**
 * Parses an edge-list document. The labeling comes from its header and
 * optional `perm:` line.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `graph_out` and `labeling_out`
 * must be writable.
 */
enum GdStatus gd_graph_from_edge_list(const char *text,
                                      struct GdGraph **graph_out,
                                      struct GdLabeling **labeling_out);

/**
 * Decodes one graph6 line (short form).
 *
 * # Safety
 * `line` must be a NUL-terminated string; `out` must be writable.
 */
enum GdStatus gd_graph_from_graph6(const char *line, struct GdGraph **out);

/**
 * Generates a family member, e.g. `("werner", "d=3")`.
 *
 * # Safety
 * `family` and `params` must be NUL-terminated strings (`params` may be
 * null for none); `graph_out` and `labeling_out` must be writable.
 */
enum GdStatus gd_generate(const char *family,
                          const char *params,
                          struct GdGraph **graph_out,
                          struct GdLabeling **labeling_out);

/**
 * # Safety
 * `graph` must be a live handle or null.
 */
size_t gd_graph_vertex_count(const struct GdGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or null.
 */
size_t gd_graph_edge_count(const struct GdGraph *graph);

/**
 * # Safety
 * `graph` must come from this library and not be used afterwards.
 */
void gd_graph_free(struct GdGraph *graph);

/**
 * Labeling with `m` clusters of `n`. `permutation` lists the `m*n`
 * vertices cluster by cluster, 1-based; null gives the natural labeling.
 *
 * # Safety
 * `permutation` must point to `len` values or be null; `out` must be
 * writable.
 */
enum GdStatus gd_labeling_new(size_t m,
                              size_t n,
                              const uint32_t *permutation,
                              size_t len,
                              struct GdLabeling **out);

/**
 * # Safety
 * `labeling` must come from this library and not be used afterwards.
 */
void gd_labeling_free(struct GdLabeling *labeling);

/**
 * `QD` of `rho_l` (`sign = -1`) or `rho_q` (`sign = +1`).
 *
 * # Safety
 * `graph` and `labeling` must be live handles; `out` must be writable.
 */
enum GdStatus gd_qd(const struct GdGraph *graph,
                    const struct GdLabeling *labeling,
                    int32_t sign,
                    struct GdQd *out);

/**
 * Full report as a JSON document; free with [`gd_string_free`].
 *
 * # Safety
 * `graph` and `labeling` must be live handles; `out` must be writable.
 */
enum GdStatus gd_report_json(const struct GdGraph *graph,
                             const struct GdLabeling *labeling,
                             int32_t sign,
                             char **out);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void gd_string_free(char *s);

/**
 * Discord in bits for a measurement of the slot index in the
 * computational basis.
 *
 * # Safety
 * `graph` and `labeling` must be live handles; `out` must be writable.
 */
enum GdStatus gd_fixed_basis_discord(const struct GdGraph *graph,
                                     const struct GdLabeling *labeling,
                                     int32_t sign,
                                     double *out);

/**
 * Non-normality of a row-major `order x order` 0/1 matrix.
 *
 * # Safety
 * `matrix` must point to `order * order` bytes; `out` must be writable.
 */
enum GdStatus gd_nn(const uint8_t *matrix, size_t order, uint64_t *out);

/**
 * Non-commutativity of two row-major `order x order` 0/1 matrices.
 *
 * # Safety
 * `a` and `b` must each point to `order * order` bytes; `out` must be
 * writable.
 */
enum GdStatus gd_nc1(const uint8_t *a, const uint8_t *b, size_t order, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRAPH_DISCORD_H */
