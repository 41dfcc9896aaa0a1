/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef COVSERIES_H
#define COVSERIES_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum CsFormat {
  CS_FORMAT_PLAIN = 0,
  CS_FORMAT_LATEX = 1,
  CS_FORMAT_JSON = 2,
} CsFormat;

typedef enum CsMethod {
  CS_METHOD_SPRINGER = 0,
  CS_METHOD_DP = 1,
  CS_METHOD_GF = 2,
} CsMethod;

/**
 * Result code of every `cs_*` call.
 */
typedef enum CsStatus {
  CS_STATUS_OK = 0,
  CS_STATUS_NULL_POINTER = 1,
  CS_STATUS_INVALID_UTF8 = 2,
  CS_STATUS_DEGREE_OUT_OF_RANGE = 3,
  CS_STATUS_PARSE_ERROR = 4,
  CS_STATUS_INVALID_ARGUMENT = 5,
  CS_STATUS_PANIC = 6,
} CsStatus;

/**
 * Opaque handle to a rational function with `(1 - z^k)` denominator factors.
 */
typedef struct CsRational CsRational;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing why the last fallible call on this thread failed, or
 * NULL if it succeeded. Valid until the next such call on the same thread.
 */
const char *cs_last_error(void);

/**
 * Largest form degree accepted by [`cs_poincare_series`] and [`cs_dims_json`].
 */
uint32_t cs_max_degree(void);

/**
 * Computes `P_d(z)` in normalized form.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum CsStatus cs_poincare_series(uint32_t d, struct CsRational **out);

/**
 * Parses plain text such as `(1+z^3)/((1-z)(1-z^2)(1-z^4))`.
 *
 * # Safety
 * `text` must be NUL-terminated; `out` must be valid for writing one pointer.
 */
enum CsStatus cs_rational_parse(const char *text, struct CsRational **out);

/**
 * Reads the JSON produced by [`cs_rational_render`] with [`CsFormat::Json`].
 * `d_out` may be NULL.
 *
 * # Safety
 * `json` must be NUL-terminated; `out` must be valid for writing one pointer
 * and `d_out`, if non-null, for one `uint32_t`.
 */
enum CsStatus cs_rational_from_json(const char *json, uint32_t *d_out, struct CsRational **out);

/**
 * Renders `r` in a [`CsFormat`]. `d` is only used by the JSON format, which
 * records it.
 *
 * # Safety
 * `r` must be a live handle; `out` must be valid for writing one pointer.
 */
enum CsStatus cs_rational_render(const struct CsRational *r,
                                 uint32_t format,
                                 uint32_t d,
                                 char **out);

/**
 * Sets `*out` to whether `a` and `b` are the same rational function.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be valid for writing.
 */
enum CsStatus cs_rational_equals(const struct CsRational *a, const struct CsRational *b, bool *out);

/**
 * Power-series coefficients of `r` through `z^order` as a JSON array of
 * integers, e.g. `[1,1,2,3]`.
 *
 * # Safety
 * `r` must be a live handle; `out` must be valid for writing one pointer.
 */
enum CsStatus cs_rational_expand_json(const struct CsRational *r, size_t order, char **out);

/**
 * Dimension table, computed by a [`CsMethod`], for `n = 0..=n_max` as `{"d":..,"method":..,"dims":[..]}`.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum CsStatus cs_dims_json(uint32_t d,
                           size_t n_max,
                           uint32_t method,
                           char **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `r` must be NULL or a handle not yet freed.
 */
void cs_rational_free(struct CsRational *r);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void cs_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COVSERIES_H */
