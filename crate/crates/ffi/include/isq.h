#ifndef ISQ_H
#define ISQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum {
  ISQ_STATUS_OK = 0,
  ISQ_STATUS_NULL_POINTER = 1,
  ISQ_STATUS_INVALID_INPUT = 2,
  ISQ_STATUS_PARSE = 3,
  ISQ_STATUS_UNKNOWN_ELEMENT = 4,
  ISQ_STATUS_NOT_INVERSE_SEMIGROUP = 5,
  ISQ_STATUS_NOT_NORMAL = 6,
  ISQ_STATUS_NOT_INDUCTIVE = 7,
  ISQ_STATUS_SIZE_LIMIT = 8,
  ISQ_STATUS_FAILED = 9,
  ISQ_STATUS_PANIC = 10,
} IsqStatus;

/**
 * A quotient ordered groupoid `S⫽N`.
 */
typedef struct IsqQuotient IsqQuotient;

/**
 * A finite inverse semigroup.
 */
typedef struct IsqSemigroup IsqSemigroup;

/**
 * A subset of a semigroup's elements.
 */
typedef struct IsqSubset IsqSubset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *isq_version(void);

/**
 * Message for the last failed call on this thread. Valid until the next
 * failing call on the same thread.
 */
const char *isq_last_error(void);

/**
 * Free a string returned by the library.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void isq_string_free(char *s);

/**
 * Parse semigroup JSON (`pbij` or `table` kind).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
IsqStatus isq_semigroup_from_json(const char *json, IsqSemigroup **out);

/**
 * The symmetric inverse monoid of degree `n` (1 to 5).
 *
 * # Safety
 * `out` must be writable.
 */
IsqStatus isq_semigroup_symmetric(size_t n, IsqSemigroup **out);

/**
 * The six-element example inside `I_4`.
 *
 * # Safety
 * `out` must be writable.
 */
IsqStatus isq_semigroup_example_s6(IsqSemigroup **out);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void isq_semigroup_free(IsqSemigroup *s);

/**
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
IsqStatus isq_semigroup_size(const IsqSemigroup *s, size_t *out);

/**
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
IsqStatus isq_semigroup_mul(const IsqSemigroup *s, size_t a, size_t b, size_t *out);

/**
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
IsqStatus isq_semigroup_inv(const IsqSemigroup *s, size_t a, size_t *out);

/**
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
IsqStatus isq_semigroup_is_idempotent(const IsqSemigroup *s, size_t a, bool *out);

/**
 * Semigroup JSON; free with [`isq_string_free`].
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
IsqStatus isq_semigroup_to_json(const IsqSemigroup *s, char **out);

/**
 * Subset of `s` from `len` element ids.
 *
 * # Safety
 * `s` must be a live handle, `ids` must point to `len` values (or be null
 * with `len == 0`), and `out` must be writable.
 */
IsqStatus isq_subset_new(const IsqSemigroup *s, const size_t *ids, size_t len, IsqSubset **out);

/**
 * The whole semigroup as a subset.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
IsqStatus isq_subset_full(const IsqSemigroup *s, IsqSubset **out);

/**
 * The idempotents of `s`.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
IsqStatus isq_subset_idempotents(const IsqSemigroup *s, IsqSubset **out);

/**
 * # Safety
 * `n` must come from this library and not have been freed.
 */
void isq_subset_free(IsqSubset *n);

/**
 * # Safety
 * Handles must be live; `out` must be writable.
 */
IsqStatus isq_is_normal(const IsqSemigroup *s, const IsqSubset *n, bool *out);

/**
 * Every normal inverse subsemigroup as JSON
 * `{"members":[[ids],..],"inclusions":[[i,j],..]}`.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
IsqStatus isq_enumerate_normal_json(const IsqSemigroup *s, char **out);

/**
 * `x ≤_N t`.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
IsqStatus isq_leq_n(const IsqSemigroup *s, const IsqSubset *n, size_t x, size_t t, bool *out);

/**
 * Whether `≃_N` is a congruence.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
IsqStatus isq_is_simeq_congruence(const IsqSemigroup *s, const IsqSubset *n, bool *out);

/**
 * Build `S⫽N`. Fails with `NOT_NORMAL` if `n` is not normal.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
IsqStatus isq_quotient_build(const IsqSemigroup *s, const IsqSubset *n, IsqQuotient **out);

/**
 * # Safety
 * `q` must come from this library and not have been freed.
 */
void isq_quotient_free(IsqQuotient *q);

/**
 * # Safety
 * `q` must be a live handle; `out` must be writable.
 */
IsqStatus isq_quotient_num_classes(const IsqQuotient *q, size_t *out);

/**
 * Groupoid element (class index) containing semigroup element `x`.
 *
 * # Safety
 * `q` must be a live handle; `out` must be writable.
 */
IsqStatus isq_quotient_class_of(const IsqQuotient *q, size_t x, size_t *out);

/**
 * Composite of classes `c` and `d`. `defined` is false (and `out` left
 * untouched) when the range of `c` is not the domain of `d`.
 *
 * # Safety
 * `q` must be a live handle; `out` and `defined` must be writable.
 */
IsqStatus isq_quotient_compose(const IsqQuotient *q,
                               size_t c,
                               size_t d,
                               size_t *out,
                               bool *defined);

/**
 * Class order `c ≤ d`.
 *
 * # Safety
 * `q` must be a live handle; `out` must be writable.
 */
IsqStatus isq_quotient_leq(const IsqQuotient *q, size_t c, size_t d, bool *out);

/**
 * # Safety
 * `q` must be a live handle; `out` must be writable.
 */
IsqStatus isq_quotient_is_inductive(const IsqQuotient *q, bool *out);

/**
 * Ordered groupoid JSON with classes and witnesses.
 *
 * # Safety
 * `q` must be a live handle; `out` must be writable.
 */
IsqStatus isq_quotient_to_json(const IsqQuotient *q, char **out);

/**
 * Run every worked example and property suite. `passed` is set to the
 * overall verdict; the status is `OK` even when a check fails.
 *
 * # Safety
 * `passed` must be writable.
 */
IsqStatus isq_run_paper_suite(uint64_t seed, bool *passed);

/**
 * Set the size cap for exhaustive algorithms; 0 restores the default.
 */
void isq_set_max_elements(size_t limit);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ISQ_H */
