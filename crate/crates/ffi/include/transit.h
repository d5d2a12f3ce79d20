#ifndef TRANSIT_H
#define TRANSIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TgStatus {
  TG_STATUS_OK = 0,
  TG_STATUS_NULL_POINTER = 1,
  TG_STATUS_INVALID_UTF8 = 2,
  TG_STATUS_INVALID_INPUT = 3,
  TG_STATUS_OUT_OF_RANGE = 4,
  TG_STATUS_AXIOM_VIOLATION = 5,
  TG_STATUS_TOO_LARGE = 6,
  TG_STATUS_DISCONNECTED = 7,
  TG_STATUS_UNKNOWN_ID = 8,
  TG_STATUS_HYPOTHESES_NOT_MET = 9,
  TG_STATUS_INTERNAL = 10,
  TG_STATUS_PANIC = 11,
} TgStatus;

/**
 * Opaque handle to a simple graph.
 */
typedef struct TgGraph TgGraph;

/**
 * Opaque handle to a transit function.
 */
typedef struct TgTransit TgTransit;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *tg_last_error(void);

/**
 * Library version as a static string.
 */
const char *tg_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void tg_string_free(char *s);

/**
 * Parses a transit function from its JSON document.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out_handle` must be writable.
 */
enum TgStatus tg_transit_from_json(const char *json, struct TgTransit **out_handle);

/**
 * # Safety
 * `t` must be null or a handle from this library, not yet freed.
 */
void tg_transit_free(struct TgTransit *t);

/**
 * # Safety
 * `t` must be a live handle and `out_json` writable.
 */
enum TgStatus tg_transit_to_json(const struct TgTransit *t, char **out_json);

/**
 * Size of the ground set.
 *
 * # Safety
 * `t` must be a live handle and `out_n` writable.
 */
enum TgStatus tg_transit_len(const struct TgTransit *t, uintptr_t *out_n);

/**
 * `R(u, v)` as a bitmask over the ground set.
 *
 * # Safety
 * `t` must be a live handle and `out_set` writable.
 */
enum TgStatus tg_transit_get(const struct TgTransit *t,
                             uintptr_t u,
                             uintptr_t v,
                             uint64_t *out_set);

/**
 * Checks one axiom by name (`b1`, `J0`, `(Ch)`, `a'`, ...).
 *
 * # Safety
 * `t` must be a live handle, `axiom` a nul-terminated string and `out_holds`
 * writable.
 */
enum TgStatus tg_check_axiom(const struct TgTransit *t, const char *axiom, bool *out_holds);

/**
 * Every axiom verdict, with witnesses, as a JSON object keyed by axiom.
 *
 * # Safety
 * `t` must be a live handle and `out_json` writable.
 */
enum TgStatus tg_axiom_profile_json(const struct TgTransit *t, char **out_json);

/**
 * Convex hull of the bitmask `set`.
 *
 * # Safety
 * `t` must be a live handle and `out_set` writable.
 */
enum TgStatus tg_hull(const struct TgTransit *t, uint64_t set, uint64_t *out_set);

/**
 * Whether the R-convexity is a convex geometry.
 *
 * # Safety
 * `t` must be a live handle and `out_is_geometry` writable.
 */
enum TgStatus tg_is_convex_geometry(const struct TgTransit *t, bool *out_is_geometry);

/**
 * The full geometry certificate as JSON.
 *
 * # Safety
 * `t` must be a live handle and `out_json` writable.
 */
enum TgStatus tg_geometry_json(const struct TgTransit *t, char **out_json);

/**
 * Parses a graph from graph6 or an adjacency JSON document.
 *
 * # Safety
 * `src` must be a nul-terminated string; `out_handle` must be writable.
 */
enum TgStatus tg_graph_parse(const char *src, struct TgGraph **out_handle);

/**
 * # Safety
 * `g` must be null or a handle from this library, not yet freed.
 */
void tg_graph_free(struct TgGraph *g);

/**
 * Number of vertices.
 *
 * # Safety
 * `g` must be a live handle and `out_n` writable.
 */
enum TgStatus tg_graph_len(const struct TgGraph *g, uintptr_t *out_n);

/**
 * Builds a graph transit function by model name: `I`, `J`, `m3`, `A`, `T`,
 * `WT`, `P3` or `C` (case-insensitive).
 *
 * # Safety
 * `g` must be a live handle, `model` a nul-terminated string and
 * `out_handle` writable.
 */
enum TgStatus tg_build(const struct TgGraph *g, const char *model, struct TgTransit **out_handle);

/**
 * Class membership by name (`chordal`, `ptolemaic`, `block_graph`, ...).
 *
 * # Safety
 * `g` must be a live handle, `class` a nul-terminated string and
 * `out_member` writable.
 */
enum TgStatus tg_recognize(const struct TgGraph *g, const char *class_, bool *out_member);

/**
 * Runs one registered claim over all objects up to `n_max` (0 picks the
 * claim's default) and reports the counts as JSON.
 *
 * # Safety
 * `theorem` must be a nul-terminated string and `out_json` writable.
 */
enum TgStatus tg_verify_theorem_json(const char *theorem, uintptr_t n_max, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRANSIT_H */
