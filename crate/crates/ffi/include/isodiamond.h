#ifndef ISODIAMOND_H
#define ISODIAMOND_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which construction [`isodiamond_embed`] uses.
 */
typedef enum IsodiamondEmbeddingKind {
  /**
   * Minimum dimension.
   */
  ISODIAMOND_EMBEDDING_KIND_MINIMUM = 0,
  /**
   * One coordinate per relation class.
   */
  ISODIAMOND_EMBEDDING_KIND_DIRECT = 1,
} IsodiamondEmbeddingKind;

/**
 * Result code of every fallible call.
 */
typedef enum IsodiamondStatus {
  ISODIAMOND_STATUS_OK = 0,
  ISODIAMOND_STATUS_NULL_POINTER = 1,
  ISODIAMOND_STATUS_INVALID_UTF8 = 2,
  ISODIAMOND_STATUS_PARSE_ERROR = 3,
  ISODIAMOND_STATUS_INVALID_ARGUMENT = 4,
  ISODIAMOND_STATUS_NOT_EMBEDDABLE = 5,
  ISODIAMOND_STATUS_UNSUPPORTED_DIMENSION = 6,
  ISODIAMOND_STATUS_RESOURCE_LIMIT = 7,
  ISODIAMOND_STATUS_PANIC = 8,
} IsodiamondStatus;

/**
 * Opaque embedding handle.
 */
typedef struct IsodiamondEmbedding IsodiamondEmbedding;

/**
 * Opaque graph handle.
 */
typedef struct IsodiamondGraph IsodiamondGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses the edge-list text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum IsodiamondStatus isodiamond_graph_from_edge_list(const char *text,
                                                      struct IsodiamondGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `pairs` (`2 * edge_count` entries).
 *
 * # Safety
 * `pairs` must point to `2 * edge_count` readable values (or may be null
 * when `edge_count` is 0); `out` must be writable.
 */
enum IsodiamondStatus isodiamond_graph_from_edges(size_t n,
                                                  const size_t *pairs,
                                                  size_t edge_count,
                                                  struct IsodiamondGraph **out);

/**
 * Looks up a named fixture such as `"desargues"`, `"c6"` or `"p5"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum IsodiamondStatus isodiamond_graph_named(const char *name, struct IsodiamondGraph **out);

/**
 * Patch of the `k`-dimensional diamond graph with coordinates in `-r..=r`,
 * refused with `RESOURCE_LIMIT` above `cap` vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum IsodiamondStatus isodiamond_graph_diamond_patch(size_t k,
                                                     size_t r,
                                                     size_t cap,
                                                     struct IsodiamondGraph **out);

/**
 * # Safety
 * `graph` must be null or a handle from this library not yet freed.
 */
void isodiamond_graph_free(struct IsodiamondGraph *graph);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t isodiamond_graph_vertex_count(const struct IsodiamondGraph *graph);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t isodiamond_graph_edge_count(const struct IsodiamondGraph *graph);

/**
 * Writes whether the graph is a partial cube. Disconnected graphs give
 * `INVALID_ARGUMENT`.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum IsodiamondStatus isodiamond_is_partial_cube(const struct IsodiamondGraph *graph, bool *out);

/**
 * Writes whether the graph is an isometric diamond subgraph. When
 * `certificate` is non-null it receives the rejection certificate as JSON,
 * or null for embeddable graphs.
 *
 * # Safety
 * `graph` must be a live handle; `embeddable` must be writable;
 * `certificate` must be null or writable.
 */
enum IsodiamondStatus isodiamond_recognize(const struct IsodiamondGraph *graph,
                                           bool *embeddable,
                                           char **certificate);

/**
 * Writes the minimum diamond dimension, or returns `NOT_EMBEDDABLE`.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum IsodiamondStatus isodiamond_dimension(const struct IsodiamondGraph *graph, size_t *out);

/**
 * Computes and verifies an embedding.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum IsodiamondStatus isodiamond_embed(const struct IsodiamondGraph *graph,
                                       enum IsodiamondEmbeddingKind kind,
                                       struct IsodiamondEmbedding **out);

/**
 * Parses an embedding document `{"dimension": d, "vectors": [...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum IsodiamondStatus isodiamond_embedding_from_json(const char *json,
                                                     struct IsodiamondEmbedding **out);

/**
 * # Safety
 * `embedding` must be null or a handle from this library not yet freed.
 */
void isodiamond_embedding_free(struct IsodiamondEmbedding *embedding);

/**
 * Embedding dimension `d`; vectors have `d + 1` coordinates. 0 for null.
 *
 * # Safety
 * `embedding` must be null or a live handle.
 */
size_t isodiamond_embedding_dimension(const struct IsodiamondEmbedding *embedding);

/**
 * Number of vectors, or 0 for null.
 *
 * # Safety
 * `embedding` must be null or a live handle.
 */
size_t isodiamond_embedding_vertex_count(const struct IsodiamondEmbedding *embedding);

/**
 * Copies the vector of `vertex` into `buf`, which must hold at least
 * `dimension + 1` values.
 *
 * # Safety
 * `embedding` must be a live handle; `buf` must point to `len` writable values.
 */
enum IsodiamondStatus isodiamond_embedding_coords(const struct IsodiamondEmbedding *embedding,
                                                  size_t vertex,
                                                  int64_t *buf,
                                                  size_t len);

/**
 * Serializes an embedding to its JSON document.
 *
 * # Safety
 * `embedding` must be a live handle; `out` must be writable.
 */
enum IsodiamondStatus isodiamond_embedding_to_json(const struct IsodiamondEmbedding *embedding,
                                                   char **out);

/**
 * Writes whether the embedding is valid and isometric for the graph; the
 * first violation, if any, is left in [`isodiamond_last_error`].
 *
 * # Safety
 * `graph` and `embedding` must be live handles; `ok` must be writable.
 */
enum IsodiamondStatus isodiamond_verify(const struct IsodiamondGraph *graph,
                                        const struct IsodiamondEmbedding *embedding,
                                        bool *ok);

/**
 * Renders a dimension-2 embedding as SVG.
 *
 * # Safety
 * `graph` and `embedding` must be live handles; `out` must be writable.
 */
enum IsodiamondStatus isodiamond_to_svg(const struct IsodiamondGraph *graph,
                                        const struct IsodiamondEmbedding *embedding,
                                        double scale,
                                        char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void isodiamond_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. Valid until
 * the next call into the library on this thread.
 */
const char *isodiamond_last_error(void);

/**
 * Static description of a status code.
 */
const char *isodiamond_status_message(enum IsodiamondStatus status);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ISODIAMOND_H */
