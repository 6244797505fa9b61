#ifndef CHARVAR_H
#define CHARVAR_H

/* Generated by cbindgen from the charvar-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum CharvarStatus {
  CHARVAR_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  CHARVAR_STATUS_NULL_POINTER = 1,
  /**
   * An input string was not valid UTF-8.
   */
  CHARVAR_STATUS_INVALID_UTF8 = 2,
  /**
   * An argument was out of its documented range.
   */
  CHARVAR_STATUS_INVALID_ARGUMENT = 3,
  /**
   * Malformed monomial or generator text.
   */
  CHARVAR_STATUS_SYNTAX_ERROR = 4,
  /**
   * A `b` or `gamma` index beyond the genus bound.
   */
  CHARVAR_STATUS_INDEX_OUT_OF_RANGE = 5,
  CHARVAR_STATUS_GENUS_OUT_OF_RANGE = 6,
  CHARVAR_STATUS_DEGREE_OUT_OF_RANGE = 7,
  /**
   * Engine bug: Poincaré duality guarantees a partner exists.
   */
  CHARVAR_STATUS_NO_DUAL_FOUND = 8,
  /**
   * Numerical guard tripped in the representation-variety suite.
   */
  CHARVAR_STATUS_NUMERICAL_ERROR = 9,
  /**
   * A panic was caught at the boundary.
   */
  CHARVAR_STATUS_INTERNAL_PANIC = 10,
} CharvarStatus;

/**
 * Integer values accepted wherever a sign convention is expected.
 */
typedef enum CharvarSignConvention {
  CHARVAR_SIGN_CONVENTION_CONSISTENT = 0,
  CHARVAR_SIGN_CONVENTION_PAPER_LITERAL = 1,
} CharvarSignConvention;

/**
 * Opaque Gram-matrix handle: the exact pairing matrix between the
 * canonical monomial bases of two complementary degrees, plus its rank
 * and a basis of its radical.
 */
typedef struct CharvarGram CharvarGram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of the underlying engine, as a static string. Do not free.
 */
const char *charvar_version(void);

/**
 * Frees a string returned by any `charvar_*` call. NULL is ignored.
 *
 * # Safety
 * `s` must have been returned by this library and not freed before.
 */
void charvar_string_free(char *s);

/**
 * Pairs monomial text against the fundamental class at the given genus.
 * On success writes the exact value in machine form `p/q`.
 *
 * # Safety
 * `monomial` must be a NUL-terminated string, `out_value` a valid
 * pointer.
 */
enum CharvarStatus charvar_pair_eval(uint32_t genus,
                                     uint32_t sign_convention_raw,
                                     const char *monomial,
                                     char **out_value);

/**
 * Writes the full pairing table as a JSON object
 * `{genus, sign_convention, rows: [{m, n, p, value}]}`.
 *
 * # Safety
 * `out_json` must be a valid pointer.
 */
enum CharvarStatus charvar_table_json(uint32_t genus,
                                      uint32_t sign_convention_raw,
                                      char **out_json);

/**
 * Writes the dual partner of a generator (`"f"`, `"a"` or `"b<k>"`) and
 * its pairing vector as JSON.
 *
 * # Safety
 * `generator` must be a NUL-terminated string, `out_json` a valid
 * pointer.
 */
enum CharvarStatus charvar_dual_json(uint32_t genus,
                                     uint32_t sign_convention_raw,
                                     const char *generator,
                                     char **out_json);

/**
 * Runs the `a^g = 0` vanishing check. Writes the JSON report and the
 * violation count (0 means the check passed).
 *
 * # Safety
 * `out_json` and `out_violations` must be valid pointers.
 */
enum CharvarStatus charvar_newstead_json(uint32_t genus,
                                         uint32_t sign_convention_raw,
                                         char **out_json,
                                         uint64_t *out_violations);

/**
 * Runs the numerical representation-variety suite over `samples` seeded
 * fiber points. Writes the JSON report and the count of violated
 * expectations (0 means everything passed `tol` and the rank checks).
 *
 * # Safety
 * `out_json` and `out_failures` must be valid pointers.
 */
enum CharvarStatus charvar_verify_rep_json(uint32_t genus,
                                           uint32_t samples,
                                           uint64_t seed,
                                           double tol,
                                           char **out_json,
                                           uint64_t *out_failures);

/**
 * Builds the Gram matrix of the given degree. On success the handle
 * must be released with [`charvar_gram_free`].
 *
 * # Safety
 * `out_handle` must be a valid pointer.
 */
enum CharvarStatus charvar_gram_new(uint32_t genus,
                                    uint32_t degree,
                                    uint32_t sign_convention_raw,
                                    struct CharvarGram **out_handle);

/**
 * Releases a Gram handle. NULL is ignored.
 *
 * # Safety
 * `handle` must come from [`charvar_gram_new`] and not be freed twice.
 */
void charvar_gram_free(struct CharvarGram *handle);

/**
 * Number of rows; 0 on NULL.
 *
 * # Safety
 * `handle` must be NULL or a live Gram handle.
 */
uint64_t charvar_gram_nrows(const struct CharvarGram *handle);

/**
 * Number of columns; 0 on NULL.
 *
 * # Safety
 * `handle` must be NULL or a live Gram handle.
 */
uint64_t charvar_gram_ncols(const struct CharvarGram *handle);

/**
 * Exact rank over the rationals; 0 on NULL.
 *
 * # Safety
 * `handle` must be NULL or a live Gram handle.
 */
uint64_t charvar_gram_rank(const struct CharvarGram *handle);

/**
 * Dimension of the radical (rows minus rank); 0 on NULL.
 *
 * # Safety
 * `handle` must be NULL or a live Gram handle.
 */
uint64_t charvar_gram_radical_len(const struct CharvarGram *handle);

/**
 * Label of row `index` in canonical monomial text.
 *
 * # Safety
 * `handle` must be a live Gram handle, `out_label` a valid pointer.
 */
enum CharvarStatus charvar_gram_row_label(const struct CharvarGram *handle,
                                          uint64_t index,
                                          char **out_label);

/**
 * Label of column `index` in canonical monomial text.
 *
 * # Safety
 * `handle` must be a live Gram handle, `out_label` a valid pointer.
 */
enum CharvarStatus charvar_gram_col_label(const struct CharvarGram *handle,
                                          uint64_t index,
                                          char **out_label);

/**
 * Entry `(row, col)` in machine form `p/q`.
 *
 * # Safety
 * `handle` must be a live Gram handle, `out_value` a valid pointer.
 */
enum CharvarStatus charvar_gram_entry(const struct CharvarGram *handle,
                                      uint64_t row,
                                      uint64_t col,
                                      char **out_value);

/**
 * Radical basis element `index`, rendered as a rational combination of
 * row monomials.
 *
 * # Safety
 * `handle` must be a live Gram handle, `out_class` a valid pointer.
 */
enum CharvarStatus charvar_gram_radical_class(const struct CharvarGram *handle,
                                              uint64_t index,
                                              char **out_class);

/**
 * Whole matrix as the JSON object
 * `{genus, degree, rows, cols, entries}`.
 *
 * # Safety
 * `handle` must be a live Gram handle, `out_json` a valid pointer.
 */
enum CharvarStatus charvar_gram_to_json(const struct CharvarGram *handle, char **out_json);

/**
 * Whole matrix as CSV with row/column monomial labels and `p/q`
 * entries.
 *
 * # Safety
 * `handle` must be a live Gram handle, `out_csv` a valid pointer.
 */
enum CharvarStatus charvar_gram_to_csv(const struct CharvarGram *handle, char **out_csv);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHARVAR_H */
