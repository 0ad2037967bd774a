#ifndef DSTAR_H
#define DSTAR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result code of every fallible call.
typedef enum DstarStatus {
  DSTAR_STATUS_OK = 0,
  DSTAR_STATUS_NULL_POINTER = 1,
  DSTAR_STATUS_INVALID_UTF8 = 2,
  DSTAR_STATUS_PARSE_ERROR = 3,
  DSTAR_STATUS_INVALID_ARGUMENT = 4,
  DSTAR_STATUS_SIZE_MISMATCH = 5,
  DSTAR_STATUS_BUFFER_TOO_SMALL = 6,
  DSTAR_STATUS_PANIC = 7,
} DstarStatus;

// Opaque rational generating function.
typedef struct DstarGf DstarGf;

// Opaque simple graph.
typedef struct DstarGraph DstarGraph;

// Opaque double-star or frequency triangle.
typedef struct DstarTriangle DstarTriangle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. Valid until
// the next call into the library from the same thread.
const char *dstar_last_error_message(void);

// Release a string returned by this library. NULL is ignored.
void dstar_string_free(char *s);

// Parse the `n <count>` / `u v` edge-list format.
enum DstarStatus dstar_graph_from_edge_list(const char *text, struct DstarGraph **out);

// Parse one graph6 record.
enum DstarStatus dstar_graph_from_graph6(const char *text, struct DstarGraph **out);

// Build a family member from `complete:N`, `path:N`, `cycle:N`, `star:K`
// or `double-star:A,B`.
enum DstarStatus dstar_graph_from_family(const char *spec, struct DstarGraph **out);

// Release a graph. NULL is ignored.
void dstar_graph_free(struct DstarGraph *g);

enum DstarStatus dstar_graph_vertex_count(const struct DstarGraph *g, uintptr_t *out);

enum DstarStatus dstar_graph_edge_count(const struct DstarGraph *g, uintptr_t *out);

enum DstarStatus dstar_graph_isolated_count(const struct DstarGraph *g, uintptr_t *out);

// Copy vertex degrees into `buf`. `*len_out` always receives the vertex
// count; if `buf_len` is smaller, nothing is copied and `BufferTooSmall` is
// returned. `buf` may be NULL when `buf_len` is 0.
enum DstarStatus dstar_graph_degrees(const struct DstarGraph *g,
                                     uintptr_t *buf,
                                     uintptr_t buf_len,
                                     uintptr_t *len_out);

enum DstarStatus dstar_graph_to_graph6(const struct DstarGraph *g, char **out);

enum DstarStatus dstar_star_sequence(const struct DstarGraph *g, struct DstarTriangle **out);

enum DstarStatus dstar_frequency_sequence(const struct DstarGraph *g, struct DstarTriangle **out);

// Frequency triangle to double-star triangle.
enum DstarStatus dstar_star_from_frequency(const struct DstarTriangle *f,
                                           struct DstarTriangle **out);

// Double-star triangle to frequency triangle.
enum DstarStatus dstar_frequency_from_star(const struct DstarTriangle *s,
                                           struct DstarTriangle **out);

// Parse `{ "n": int, "entries": [[a, b, "decimal"], ...] }`.
enum DstarStatus dstar_triangle_from_json(const char *json, struct DstarTriangle **out);

enum DstarStatus dstar_triangle_to_json(const struct DstarTriangle *t, char **out);

// Vertex count the triangle belongs to.
enum DstarStatus dstar_triangle_n(const struct DstarTriangle *t, uintptr_t *out);

// Entry `(a, b)` as a decimal string; swapped or out-of-range indices follow
// the library convention (symmetric lookup, zero outside).
enum DstarStatus dstar_triangle_get(const struct DstarTriangle *t,
                                    uintptr_t a,
                                    uintptr_t b,
                                    char **out);

// Non-zero into `*out` when both triangles hold identical entries.
// Triangles for different vertex counts give `SizeMismatch`.
enum DstarStatus dstar_triangle_equal(const struct DstarTriangle *x,
                                      const struct DstarTriangle *y,
                                      bool *out);

void dstar_triangle_free(struct DstarTriangle *t);

// `M2^(p)` by the edge sum.
enum DstarStatus dstar_m2_direct(const struct DstarGraph *g, uint64_t p, char **out);

// `M2^(p)` from a frequency triangle.
enum DstarStatus dstar_m2_from_frequency(const struct DstarTriangle *f, uint64_t p, char **out);

// `M2^(p)` from a double-star triangle.
enum DstarStatus dstar_m2_from_star(const struct DstarTriangle *s, uint64_t p, char **out);

enum DstarStatus dstar_generating_function(const struct DstarGraph *g, struct DstarGf **out);

// `{ "numerator": ["decimal", ...], "denominator_roots": [c, ...] }`.
enum DstarStatus dstar_gf_to_json(const struct DstarGf *gf, char **out);

// First `terms` series coefficients as a JSON array of decimal strings.
enum DstarStatus dstar_gf_series(const struct DstarGf *gf, uintptr_t terms, char **out);

void dstar_gf_free(struct DstarGf *gf);

// Comtet numbers `[C_{n-1}, i]`, `i = 0..=|C_{n-1}|`, as a JSON array of
// decimal strings.
enum DstarStatus dstar_recurrence_coefficients(uintptr_t n, char **out);

// Run the identity suite on `g`. `*passed` receives the verdict; when
// `report_out` is non-NULL it receives the JSON report.
enum DstarStatus dstar_verify(const struct DstarGraph *g,
                              uint64_t p_max,
                              bool *passed,
                              char **report_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DSTAR_H */
