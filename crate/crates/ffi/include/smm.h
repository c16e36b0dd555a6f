#ifndef SMM_H
#define SMM_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SmmPresentation {
  SMM_PRESENTATION_MU_DELTA = 0,
  SMM_PRESENTATION_GAMMA = 1,
} SmmPresentation;

typedef enum SmmStatus {
  SMM_STATUS_OK = 0,
  /**
   * A check found violations or a derivation was rejected.
   */
  SMM_STATUS_CHECK_FAILED = 1,
  /**
   * The prover ran out of budget.
   */
  SMM_STATUS_UNKNOWN = 2,
  SMM_STATUS_NULL_POINTER = 3,
  SMM_STATUS_INVALID_UTF8 = 4,
  SMM_STATUS_PARSE = 5,
  SMM_STATUS_INVALID_INPUT = 6,
  SMM_STATUS_OUT_OF_RANGE = 7,
  SMM_STATUS_PANIC = 8,
} SmmStatus;

/**
 * A validated instance.
 */
typedef struct SmmInstance SmmInstance;

/**
 * The result of an enumeration.
 */
typedef struct SmmInstanceList SmmInstanceList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or null. Valid until
 * the next call into this library from the same thread.
 */
const char *smm_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void smm_string_free(char *s);

/**
 * Parses and validates instance JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum SmmStatus smm_instance_from_json(const char *json, struct SmmInstance **out);

/**
 * # Safety
 * `inst` must be a live handle; `out` must be writable.
 */
enum SmmStatus smm_instance_to_json(const struct SmmInstance *inst, char **out);

/**
 * # Safety
 * `inst` must be null or a live handle, which becomes invalid.
 */
void smm_instance_free(struct SmmInstance *inst);

/**
 * Carrier size, or 0 for a null handle.
 *
 * # Safety
 * `inst` must be null or a live handle.
 */
size_t smm_instance_size(const struct SmmInstance *inst);

/**
 * Counts violated axioms; `SMM_STATUS_CHECK_FAILED` when there are any.
 *
 * # Safety
 * `inst` must be a live handle; `violations` must be writable.
 */
enum SmmStatus smm_instance_check(const struct SmmInstance *inst,
                                  enum SmmPresentation presentation,
                                  size_t *violations);

/**
 * # Safety
 * `inst` must be a live handle; `out` must be writable.
 */
enum SmmStatus smm_instance_is_trivial(const struct SmmInstance *inst, bool *out);

/**
 * Runs every check family and writes the per-family results as JSON.
 *
 * # Safety
 * `inst` must be a live handle; `out` must be writable.
 */
enum SmmStatus smm_instance_suite_json(const struct SmmInstance *inst, char **out);

/**
 * Every SMM on monoids of size `1..=max`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SmmStatus smm_enumerate(size_t max, struct SmmInstanceList **out);

/**
 * Length of a list, or 0 for a null handle.
 *
 * # Safety
 * `list` must be null or a live handle.
 */
size_t smm_list_len(const struct SmmInstanceList *list);

/**
 * Copies entry `index` into a new instance handle.
 *
 * # Safety
 * `list` must be a live handle; `out` must be writable.
 */
enum SmmStatus smm_list_get(const struct SmmInstanceList *list,
                            size_t index,
                            struct SmmInstance **out);

/**
 * # Safety
 * `list` must be null or a live handle, which becomes invalid.
 */
void smm_list_free(struct SmmInstanceList *list);

/**
 * Searches for a derivation of `lhs = rhs`. On success `derivation` gets
 * the derivation text; on `SMM_STATUS_UNKNOWN` it is set to null.
 *
 * # Safety
 * `lhs` and `rhs` must be NUL-terminated strings; `derivation` must be writable.
 */
enum SmmStatus smm_prove(const char *lhs,
                         const char *rhs,
                         size_t max_depth,
                         size_t max_states,
                         char **derivation);

/**
 * Replays derivation text; `SMM_STATUS_CHECK_FAILED` when a step fails.
 *
 * # Safety
 * `text` must be a NUL-terminated string.
 */
enum SmmStatus smm_verify(const char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SMM_H */
