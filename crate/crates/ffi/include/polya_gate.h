#ifndef POLYA_GATE_H
#define POLYA_GATE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum PgStatus {
  PG_STATUS_OK = 0,
  PG_STATUS_NULL_POINTER = 1,
  PG_STATUS_INVALID_UTF8 = 2,
  /**
   * A rational or parameter string did not parse, or a parameter is out
   * of range.
   */
  PG_STATUS_INVALID_INPUT = 3,
  /**
   * Threshold endpoints do not bracket a sign change.
   */
  PG_STATUS_BAD_BRACKET = 4,
  /**
   * A pivot vanished identically.
   */
  PG_STATUS_DEGENERATE = 5,
  /**
   * Any other library error.
   */
  PG_STATUS_FAILED = 6,
  /**
   * A Rust panic was caught at the boundary.
   */
  PG_STATUS_PANIC = 7,
} PgStatus;

/**
 * Verdict kind of a [`PgVerdict`].
 */
typedef enum PgVerdictKind {
  PG_VERDICT_KIND_STIELTJES_UP_TO = 0,
  PG_VERDICT_KIND_FIRST_NEGATIVE_ALPHA = 1,
  PG_VERDICT_KIND_DEGENERATE = 2,
} PgVerdictKind;

/**
 * Opaque threshold bracket.
 */
typedef struct PgThreshold PgThreshold;

/**
 * Opaque sign-test report.
 */
typedef struct PgVerdict PgVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *pg_last_error(void);

/**
 * Library version as a static string.
 */
const char *pg_version(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void pg_string_free(char *s);

/**
 * Sign test of `pFq` with parameters like `"3/2;1,60"` through `depth`.
 *
 * # Safety
 * `params` must be a NUL-terminated string; `out` must be writable.
 */
enum PgStatus pg_check(const char *params, uint32_t depth, struct PgVerdict **out);

/**
 * # Safety
 * `v` must be a live handle from [`pg_check`].
 */
enum PgVerdictKind pg_verdict_kind(const struct PgVerdict *v);

/**
 * Index of the failing coefficient, or the certified depth for
 * `STIELTJES_UP_TO`.
 *
 * # Safety
 * `v` must be a live handle from [`pg_check`].
 */
uint32_t pg_verdict_index(const struct PgVerdict *v);

/**
 * The negative coefficient as a rational string, or NULL for other kinds.
 *
 * # Safety
 * `v` must be a live handle from [`pg_check`].
 */
char *pg_verdict_alpha(const struct PgVerdict *v);

/**
 * JSON rendering `{"kind","depth","k"?,"alpha"?,"s0"}`.
 *
 * # Safety
 * `v` must be a live handle from [`pg_check`].
 */
char *pg_verdict_json(const struct PgVerdict *v);

/**
 * # Safety
 * `v` must come from [`pg_check`] and not have been freed. NULL is ignored.
 */
void pg_verdict_free(struct PgVerdict *v);

/**
 * Exact sign of `alpha_n` for `1F2(b1 + gamma; b1, b2)`, written to
 * `sign_out` as -1, 0 or 1.
 *
 * # Safety
 * String arguments must be NUL-terminated; `sign_out` must be writable.
 */
enum PgStatus pg_alpha_sign(const char *b1,
                            const char *gamma,
                            const char *b2,
                            uint32_t n,
                            int8_t *sign_out);

/**
 * Bisection in `b2` for the sign change of `alpha_n` inside `[lo, hi]`.
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` must be writable.
 */
enum PgStatus pg_threshold(const char *b1,
                           const char *gamma,
                           uint32_t n,
                           const char *lo,
                           const char *hi,
                           const char *precision,
                           struct PgThreshold **out);

/**
 * Lower bracket end, where `alpha_n >= 0`.
 *
 * # Safety
 * `t` must be a live handle from [`pg_threshold`].
 */
char *pg_threshold_lo(const struct PgThreshold *t);

/**
 * Upper bracket end, where `alpha_n < 0`.
 *
 * # Safety
 * `t` must be a live handle from [`pg_threshold`].
 */
char *pg_threshold_hi(const struct PgThreshold *t);

/**
 * JSON rendering `{"b1","gamma","n","lo","hi","width"}`.
 *
 * # Safety
 * `t` must be a live handle from [`pg_threshold`].
 */
char *pg_threshold_json(const struct PgThreshold *t);

/**
 * # Safety
 * `t` must come from [`pg_threshold`] and not have been freed. NULL is
 * ignored.
 */
void pg_threshold_free(struct PgThreshold *t);

/**
 * Leading-coefficient check of the `alpha_n` numerator in `b2`. Writes 1
 * to `matches_out` when the check passes and, if `json_out` is not NULL,
 * the full row as a JSON string.
 *
 * # Safety
 * String arguments must be NUL-terminated; `matches_out` must be writable.
 */
enum PgStatus pg_symbolic_check(uint32_t n,
                                const char *gamma,
                                const char *b1,
                                int32_t *matches_out,
                                char **json_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYA_GATE_H */
