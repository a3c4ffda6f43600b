#ifndef NARAYANA_H
#define NARAYANA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NarayanaStatus {
  NARAYANA_STATUS_OK = 0,
  NARAYANA_STATUS_NULL_POINTER = 1,
  NARAYANA_STATUS_INVALID_ARGUMENT = 2,
  NARAYANA_STATUS_OUT_OF_RANGE = 3,
  NARAYANA_STATUS_INTERNAL = 4,
  NARAYANA_STATUS_VERIFY_FAILED = 5,
} NarayanaStatus;

/**
 * Values accepted by the `strategy` argument of [`narayana_compute`].
 */
typedef enum NarayanaStrategy {
  NARAYANA_STRATEGY_NAIVE = 0,
  NARAYANA_STRATEGY_MATRIX = 1,
  NARAYANA_STRATEGY_THIRDS = 2,
} NarayanaStrategy;

/**
 * Values accepted by the `format` argument of [`narayana_table_render`].
 */
typedef enum NarayanaTableFormat {
  NARAYANA_TABLE_FORMAT_TEXT = 0,
  NARAYANA_TABLE_FORMAT_CSV = 1,
  NARAYANA_TABLE_FORMAT_JSON = 2,
} NarayanaTableFormat;

/**
 * Opaque evaluation engine.
 */
typedef struct NarayanaEngine NarayanaEngine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates an engine whose memo serves `|m| <= index_cap`; 0 selects the
 * default cap.
 */
struct NarayanaEngine *narayana_engine_new(uint64_t index_cap);

/**
 * # Safety
 * `engine` must be null or a handle from [`narayana_engine_new`] that has not
 * been freed.
 */
void narayana_engine_free(struct NarayanaEngine *engine);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void narayana_string_free(char *s);

/**
 * Message for the last failing call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *narayana_last_error(void);

/**
 * `N_m` through `strategy` (a [`NarayanaStrategy`] value).
 *
 * # Safety
 * `engine` must be a live handle; `out` must be valid for a pointer write.
 */
enum NarayanaStatus narayana_compute(struct NarayanaEngine *engine,
                                     int64_t m,
                                     uint32_t strategy,
                                     char **out);

/**
 * `(p_a, q_a)`.
 *
 * # Safety
 * `engine` must be a live handle; `p_out` and `q_out` must be valid for
 * pointer writes.
 */
enum NarayanaStatus narayana_coefficients(struct NarayanaEngine *engine,
                                          int64_t a,
                                          char **p_out,
                                          char **q_out);

/**
 * Column `b` and the triple with `N_m = alpha N_{2a+b} + beta N_{a+b} + gamma N_b`.
 *
 * # Safety
 * `engine` must be a live handle; every output pointer must be valid for a
 * write.
 */
enum NarayanaStatus narayana_reduce(struct NarayanaEngine *engine,
                                    int64_t m,
                                    int64_t a,
                                    int64_t *b_out,
                                    char **alpha_out,
                                    char **beta_out,
                                    char **gamma_out);

/**
 * `P_{N,m}` and `Q_{N,m}`.
 *
 * # Safety
 * `engine` must be a live handle; `p_out` and `q_out` must be valid for
 * pointer writes.
 */
enum NarayanaStatus narayana_mirror(struct NarayanaEngine *engine,
                                    int64_t m,
                                    char **p_out,
                                    char **q_out);

/**
 * `sum_{k=0..r} N_{ak+b}`.
 *
 * # Safety
 * `engine` must be a live handle; `out` must be valid for a pointer write.
 */
enum NarayanaStatus narayana_partial_sum(struct NarayanaEngine *engine,
                                         int64_t a,
                                         int64_t b,
                                         int64_t r,
                                         char **out);

/**
 * The `a`-column table rendered as text, CSV or JSON (a
 * [`NarayanaTableFormat`] value).
 *
 * # Safety
 * `engine` must be a live handle; `out` must be valid for a pointer write.
 */
enum NarayanaStatus narayana_table_render(struct NarayanaEngine *engine,
                                          int64_t a,
                                          int64_t rows,
                                          uint32_t format,
                                          char **out);

/**
 * Runs every identity checker and writes the report array as JSON.
 * Returns [`NarayanaStatus::VerifyFailed`] when any identity has failures;
 * the JSON is written either way.
 *
 * # Safety
 * `json_out` must be valid for a pointer write; `failures_out` may be null.
 */
enum NarayanaStatus narayana_verify_all_json(int64_t m_lo,
                                             int64_t m_hi,
                                             int64_t a_lo,
                                             int64_t a_hi,
                                             int64_t r_lo,
                                             int64_t r_hi,
                                             char **json_out,
                                             uint64_t *failures_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NARAYANA_H */
