#ifndef MORPHCHECK_H
#define MORPHCHECK_H

/* Generated with cbindgen:0.27.0 */

/* Generated by cbindgen from crates/ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MorphcheckCharMode {
  MORPHCHECK_CHAR_MODE_ZERO = 0,
  MORPHCHECK_CHAR_MODE_POSITIVE = 1,
} MorphcheckCharMode;

typedef enum MorphcheckOverall {
  MORPHCHECK_OVERALL_EXTENSION_HOLDS = 0,
  MORPHCHECK_OVERALL_NO_MORPHISM = 1,
  MORPHCHECK_OVERALL_UNDETERMINED = 2,
} MorphcheckOverall;

/**
 * Result codes.
 */
typedef enum MorphcheckStatus {
  MORPHCHECK_STATUS_OK = 0,
  MORPHCHECK_STATUS_NULL_POINTER = 1,
  MORPHCHECK_STATUS_INVALID_ARGUMENT = 2,
  MORPHCHECK_STATUS_INDEX_OUT_OF_RANGE = 3,
  MORPHCHECK_STATUS_PANIC = 4,
} MorphcheckStatus;

typedef enum MorphcheckVerdictStatus {
  MORPHCHECK_VERDICT_STATUS_EXCLUDED = 0,
  MORPHCHECK_VERDICT_STATUS_EXTENSION_FORCED = 1,
  MORPHCHECK_VERDICT_STATUS_SURVIVES = 2,
} MorphcheckVerdictStatus;

/**
 * Opaque classification of `(n, d, e)`.
 */
typedef struct MorphcheckCaseReport MorphcheckCaseReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *morphcheck_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void morphcheck_string_free(char *s);

/**
 * `deg c_{n-1}(Ω¹_X(2m))` for a degree-`d` hypersurface in `Pⁿ`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum MorphcheckStatus morphcheck_c_top_x(uint32_t n, uint32_t d, uint32_t m, char **out);

/**
 * `deg f^* c_{n-1}(Ω¹_Y(2))`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum MorphcheckStatus morphcheck_c_top_pullback_y(uint32_t n,
                                                  uint32_t d,
                                                  uint32_t e,
                                                  uint32_t m,
                                                  char **out);

/**
 * Both sides of the Hurwitz inequality. `lhs` and `rhs` may be NULL when
 * only `holds` is wanted.
 *
 * # Safety
 * Non-null pointers must be valid for writes.
 */
enum MorphcheckStatus morphcheck_hurwitz_check(uint32_t n,
                                               uint32_t d,
                                               uint32_t e,
                                               uint32_t m,
                                               char **lhs,
                                               char **rhs,
                                               bool *holds);

/**
 * Largest admissible polynomial degree `M` and the relaxed threshold `m0`.
 *
 * # Safety
 * Both pointers must be valid for writes.
 */
enum MorphcheckStatus morphcheck_max_poly_degree(uint32_t n,
                                                 uint32_t d,
                                                 uint32_t e,
                                                 uint32_t *max_degree,
                                                 uint32_t *relaxed_threshold);

/**
 * Degree of `c_top(Ω¹_X(t))` for the complete intersection of multidegree
 * `degrees[0..len]` in `Pⁿ`.
 *
 * # Safety
 * `degrees` must point to `len` readable values; `out` must be writable.
 */
enum MorphcheckStatus morphcheck_twisted_top_chern(uint32_t n,
                                                   const uint32_t *degrees,
                                                   size_t len,
                                                   int64_t twist,
                                                   char **out);

/**
 * Classifies `(n, d, e)`; the handle must be released with
 * [`morphcheck_case_report_free`].
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum MorphcheckStatus morphcheck_classify_case(uint32_t n,
                                               uint32_t d,
                                               uint32_t e,
                                               enum MorphcheckCharMode mode,
                                               bool strict,
                                               struct MorphcheckCaseReport **out);

/**
 * # Safety
 * `report` must come from [`morphcheck_classify_case`] and not be freed yet.
 */
void morphcheck_case_report_free(struct MorphcheckCaseReport *report);

/**
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
enum MorphcheckStatus morphcheck_case_report_overall(const struct MorphcheckCaseReport *report,
                                                     enum MorphcheckOverall *out);

/**
 * `M`, which is also the number of verdicts in the report.
 *
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
enum MorphcheckStatus morphcheck_case_report_max_degree(const struct MorphcheckCaseReport *report,
                                                        uint32_t *out);

/**
 * Status of the verdict for polynomial degree `m` (1-based, `m <= M`).
 *
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
enum MorphcheckStatus morphcheck_case_report_verdict_status(const struct MorphcheckCaseReport *report,
                                                            uint32_t m,
                                                            enum MorphcheckVerdictStatus *out);

/**
 * The report in the CLI's JSON schema.
 *
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
enum MorphcheckStatus morphcheck_case_report_to_json(const struct MorphcheckCaseReport *report,
                                                     char **out);

/**
 * Regenerates the built-in `P^4` tables; `passed` receives the verdict.
 *
 * # Safety
 * `passed` must be writable.
 */
enum MorphcheckStatus morphcheck_verify_paper_tables(bool *passed);

/**
 * Copies the library version into a caller-owned string.
 *
 * # Safety
 * `out` must be writable.
 */
enum MorphcheckStatus morphcheck_version(char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MORPHCHECK_H */
