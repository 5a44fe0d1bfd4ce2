#ifndef FIBROOK_H
#define FIBROOK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FibrookStatus {
  FIBROOK_STATUS_OK = 0,
  FIBROOK_STATUS_NULL_POINTER = 1,
  FIBROOK_STATUS_INVALID_UTF8 = 2,
  FIBROOK_STATUS_PARSE_ERROR = 3,
  FIBROOK_STATUS_INVALID_ARGUMENT = 4,
  FIBROOK_STATUS_NOT_FERRERS = 5,
  FIBROOK_STATUS_OUT_OF_RANGE = 6,
  FIBROOK_STATUS_PANIC = 7,
} FibrookStatus;

/**
 * Opaque polynomial in `p`, `q`, `r` with integer coefficients.
 */
typedef struct FibrookPoly FibrookPoly;

/**
 * Opaque coefficient triangle.
 */
typedef struct FibrookTriangle FibrookTriangle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failed call on this thread, or an empty
 * string. Valid until the next call into the library on the same thread.
 */
const char *fibrook_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void fibrook_string_free(char *s);

/**
 * # Safety
 * `p` must be null or a handle returned by this library, not yet freed.
 */
void fibrook_poly_free(struct FibrookPoly *p);

/**
 * # Safety
 * `t` must be null or a handle returned by this library, not yet freed.
 */
void fibrook_triangle_free(struct FibrookTriangle *t);

/**
 * Weight polynomial of all tilings of height `n`. `family` is `"F"` or
 * `"P"`.
 *
 * # Safety
 * `family` must be a nul-terminated string; `out` must be writable.
 */
enum FibrookStatus fibrook_weight_poly(const char *family, uint32_t n, struct FibrookPoly **out);

/**
 * Canonical text form such as `"p*q^4 + q^6"`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum FibrookStatus fibrook_poly_to_string(const struct FibrookPoly *p, char **out);

/**
 * Value at integer `(q, p, r)` as a decimal string.
 *
 * # Safety
 * `poly` must be a live handle; `out` must be writable.
 */
enum FibrookStatus fibrook_poly_eval(const struct FibrookPoly *poly,
                                     int64_t q,
                                     int64_t p,
                                     int64_t r,
                                     char **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum FibrookStatus fibrook_poly_equal(const struct FibrookPoly *a,
                                      const struct FibrookPoly *b,
                                      bool *out);

/**
 * Builds a triangle by recursion. `kind` is one of `cf`, `sf`, `Sf`, `Lf`,
 * `cp`, `sp`, `Sp` (case-sensitive).
 *
 * # Safety
 * `kind` must be a nul-terminated string; `out` must be writable.
 */
enum FibrookStatus fibrook_triangle_build(const char *kind,
                                          size_t n_max,
                                          struct FibrookTriangle **out);

/**
 * # Safety
 * `t` must be a live handle.
 */
size_t fibrook_triangle_n_max(const struct FibrookTriangle *t);

/**
 * Copies entry `(n, k)` into a new polynomial handle.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum FibrookStatus fibrook_triangle_entry(const struct FibrookTriangle *t,
                                          size_t n,
                                          size_t k,
                                          struct FibrookPoly **out);

/**
 * `{"kind": ..., "N": ..., "entries": [[...], ...]}`.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum FibrookStatus fibrook_triangle_json(const struct FibrookTriangle *t, char **out);

/**
 * `fT_k(B)` for a board such as `"F(2,3,4)"`.
 *
 * # Safety
 * `board` and `family` must be nul-terminated strings; `out` must be
 * writable.
 */
enum FibrookStatus fibrook_board_file_poly(const char *board,
                                           const char *family,
                                           size_t k,
                                           struct FibrookPoly **out);

/**
 * `rT_k(B)`; the board must be Ferrers.
 *
 * # Safety
 * As for [`fibrook_board_file_poly`].
 */
enum FibrookStatus fibrook_board_rook_poly(const char *board,
                                           const char *family,
                                           size_t k,
                                           struct FibrookPoly **out);

/**
 * Runs a verification suite (`recursion-vs-enumeration`, `products`,
 * `inverse`, `involution`, `identities` or `all`). `passed` is set to false
 * when any check fails; the JSON report goes to `report`.
 *
 * # Safety
 * `suite` must be a nul-terminated string; `passed` and `report` must be
 * writable.
 */
enum FibrookStatus fibrook_verify(const char *suite, bool quick, bool *passed, char **report);

/**
 * Regenerates a bundled sequence. `values` receives the comma-separated
 * terms; `matches` is 1 for an exact match, 0 when the fixture only omits
 * terms, -1 on a mismatch.
 *
 * # Safety
 * `name` must be a nul-terminated string; `values` and `matches` must be
 * writable.
 */
enum FibrookStatus fibrook_sequence(const char *name, char **values, int32_t *matches);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIBROOK_H */
