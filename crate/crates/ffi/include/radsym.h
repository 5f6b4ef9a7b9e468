#ifndef RADSYM_H
#define RADSYM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes returned by every fallible function.
 */
typedef enum RadsymStatus {
  RADSYM_STATUS_OK = 0,
  RADSYM_STATUS_NULL_POINTER = 1,
  RADSYM_STATUS_INVALID_UTF8 = 2,
  RADSYM_STATUS_INVALID_ARGUMENT = 3,
  RADSYM_STATUS_UNKNOWN_NAME = 4,
  RADSYM_STATUS_ALGEBRA_ERROR = 5,
  RADSYM_STATUS_NUMERIC_ERROR = 6,
  RADSYM_STATUS_PANIC = 7,
} RadsymStatus;

/**
 * An exact operator in canonical form.
 */
typedef struct RadsymOperator RadsymOperator;

/**
 * A physical system: oscillator, hydrogen or generalized power law.
 */
typedef struct RadsymSystem RadsymSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty after a
 * successful call. Valid until the next call on the same thread.
 */
const char *radsym_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void radsym_string_free(char *s);

/**
 * Creates the oscillator (`"ho"`) or hydrogen (`"ha"`) system.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum RadsymStatus radsym_system_new(const char *name, struct RadsymSystem **out);

/**
 * Creates the generalized system from rational strings such as `"3/2"`.
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` must be writable.
 */
enum RadsymStatus radsym_system_generalized(const char *zeta,
                                            const char *a,
                                            const char *b,
                                            struct RadsymSystem **out);

/**
 * # Safety
 * `sys` must come from this library and not have been freed. Null is ignored.
 */
void radsym_system_free(struct RadsymSystem *sys);

/**
 * Builds a named operator (`"H"`, `"D+n"`, `"a1dag"`, ...) with the
 * system's parameters substituted.
 *
 * # Safety
 * `sys` must be a live handle, `name` NUL-terminated, `out` writable.
 */
enum RadsymStatus radsym_operator_build(const struct RadsymSystem *sys,
                                        const char *name,
                                        struct RadsymOperator **out);

/**
 * # Safety
 * `op` must come from this library and not have been freed. Null is ignored.
 */
void radsym_operator_free(struct RadsymOperator *op);

/**
 * `a + b`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` writable.
 */
enum RadsymStatus radsym_operator_add(const struct RadsymOperator *a,
                                      const struct RadsymOperator *b,
                                      struct RadsymOperator **out);

/**
 * `a − b`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` writable.
 */
enum RadsymStatus radsym_operator_sub(const struct RadsymOperator *a,
                                      const struct RadsymOperator *b,
                                      struct RadsymOperator **out);

/**
 * `a ∘ b`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` writable.
 */
enum RadsymStatus radsym_operator_compose(const struct RadsymOperator *a,
                                          const struct RadsymOperator *b,
                                          struct RadsymOperator **out);

/**
 * `[a, b]`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` writable.
 */
enum RadsymStatus radsym_operator_commutator(const struct RadsymOperator *a,
                                             const struct RadsymOperator *b,
                                             struct RadsymOperator **out);

/**
 * Multiplies by a rational string such as `"-1/2"`.
 *
 * # Safety
 * `op` must be a live handle, `factor` NUL-terminated, `out` writable.
 */
enum RadsymStatus radsym_operator_scale(const struct RadsymOperator *op,
                                        const char *factor,
                                        struct RadsymOperator **out);

/**
 * Writes whether the operator is identically zero.
 *
 * # Safety
 * `op` must be a live handle; `out` writable.
 */
enum RadsymStatus radsym_operator_is_zero(const struct RadsymOperator *op, bool *out);

/**
 * Human-readable form of the operator.
 *
 * # Safety
 * `op` must be a live handle; `out` writable.
 */
enum RadsymStatus radsym_operator_to_string(const struct RadsymOperator *op, char **out);

/**
 * Canonical JSON serialization of the operator.
 *
 * # Safety
 * `op` must be a live handle; `out` writable.
 */
enum RadsymStatus radsym_operator_to_json(const struct RadsymOperator *op, char **out);

/**
 * JSON array of registered identity ids with descriptions.
 *
 * # Safety
 * `out` must be writable.
 */
enum RadsymStatus radsym_identity_list(char **out);

/**
 * Runs one registered identity. `pass` receives the verdict (true for
 * reported-only identities); `report_json`, if non-null, the full report.
 *
 * # Safety
 * `id` must be NUL-terminated; `pass` writable; `report_json` null or writable.
 */
enum RadsymStatus radsym_verify_identity(const char *id, bool *pass, char **report_json);

/**
 * Applies a ladder operator to the `(n, m)` eigenstate on the reference
 * grid and reports overlap and proportionality constant as JSON.
 *
 * # Safety
 * `sys` must be a live handle, `name` NUL-terminated, `pass` writable,
 * `report_json` null or writable.
 */
enum RadsymStatus radsym_ladder_check(const struct RadsymSystem *sys,
                                      const char *name,
                                      int64_t n,
                                      int64_t m,
                                      bool *pass,
                                      char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RADSYM_H */
