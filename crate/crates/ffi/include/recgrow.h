#ifndef RECGROW_H
#define RECGROW_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RecgrowStatus {
  RECGROW_STATUS_OK = 0,
  /**
   * A checked inequality failed.
   */
  RECGROW_STATUS_VIOLATION = 1,
  RECGROW_STATUS_INVALID_INPUT = 2,
  RECGROW_STATUS_DEGENERATE = 3,
  /**
   * Raise the precision and retry.
   */
  RECGROW_STATUS_PRECISION = 4,
  RECGROW_STATUS_NULL_POINTER = 5,
  RECGROW_STATUS_INTERNAL = 6,
} RecgrowStatus;

/**
 * An integer linear recurrence over `Q` with certified roots.
 */
typedef struct RecgrowIntRecurrence RecgrowIntRecurrence;

/**
 * A power sum sequence over `Q(x)`.
 */
typedef struct RecgrowSpec RecgrowSpec;

/**
 * Summary of a bound scan.
 */
typedef struct RecgrowVerifySummary {
  uint64_t rows;
  uint64_t violations;
  uint64_t zero_rows;
  /**
   * -1 when the last row fails.
   */
  int64_t n0_observed;
  int64_t c_tilde;
  int64_t upper_constant;
  int64_t min_mu_alpha;
} RecgrowVerifySummary;

typedef struct RecgrowSandwich {
  bool ok;
  bool cancellation_ok;
} RecgrowSandwich;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *recgrow_last_error(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void recgrow_string_free(char *s);

/**
 * Library version, statically allocated.
 */
const char *recgrow_version(void);

/**
 * Parses a sequence document; `json` selects JSON over TOML.
 *
 * # Safety
 * `doc` must be a nul-terminated string and `out` a valid pointer.
 */
enum RecgrowStatus recgrow_spec_parse(const char *doc, bool json, struct RecgrowSpec **out);

/**
 * # Safety
 * `spec` must come from [`recgrow_spec_parse`] or be null.
 */
void recgrow_spec_free(struct RecgrowSpec *spec);

/**
 * Number of terms `t`.
 *
 * # Safety
 * `spec` must be a live handle and `out` a valid pointer.
 */
enum RecgrowStatus recgrow_spec_len(const struct RecgrowSpec *spec, size_t *out);

/**
 * Serializes the spec back to a document.
 *
 * # Safety
 * `spec` must be a live handle and `out` a valid pointer.
 */
enum RecgrowStatus recgrow_spec_serialize(const struct RecgrowSpec *spec, bool json, char **out);

/**
 * Bound constants at `mu` (`inf`, `point:<q>`, `factor:<poly>`) as JSON.
 *
 * # Safety
 * `spec` must be a live handle, `mu` a string and `out` a valid pointer.
 */
enum RecgrowStatus recgrow_spec_constants_json(const struct RecgrowSpec *spec,
                                               const char *mu,
                                               char **out);

/**
 * Scans `n = 0..=n_max`; returns [`RecgrowStatus::Violation`] when a
 * proven bound fails. `csv_out` may be null; otherwise it receives the
 * CSV report.
 *
 * # Safety
 * `spec` must be a live handle, `mu` a string, `summary` a valid pointer
 * and `csv_out` valid or null.
 */
enum RecgrowStatus recgrow_spec_verify(const struct RecgrowSpec *spec,
                                       const char *mu,
                                       uint64_t n_max,
                                       struct RecgrowVerifySummary *summary,
                                       char **csv_out);

/**
 * Builds an integer recurrence from a monic characteristic polynomial
 * (ascending coefficients, `order + 1` of them) and `order` initial terms.
 *
 * # Safety
 * Arrays must hold the stated number of elements; `out` must be valid.
 */
enum RecgrowStatus recgrow_int_recurrence_new(const int64_t *char_coeffs,
                                              size_t n_coeffs,
                                              const int64_t *initial_terms,
                                              size_t n_initial,
                                              uint32_t precision_bits,
                                              struct RecgrowIntRecurrence **out);

/**
 * # Safety
 * `rec` must come from [`recgrow_int_recurrence_new`] or be null.
 */
void recgrow_int_recurrence_free(struct RecgrowIntRecurrence *rec);

/**
 * `G_n` as a decimal string.
 *
 * # Safety
 * `rec` must be a live handle and `out` a valid pointer.
 */
enum RecgrowStatus recgrow_int_recurrence_term(const struct RecgrowIntRecurrence *rec,
                                               uint64_t n,
                                               char **out);

/**
 * Number of distinct characteristic roots actually used by the sequence.
 *
 * # Safety
 * `rec` must be a live handle and `out` a valid pointer.
 */
enum RecgrowStatus recgrow_int_recurrence_root_count(const struct RecgrowIntRecurrence *rec,
                                                     size_t *out);

/**
 * Sets `*nondegenerate`; when false, `*i`, `*j` (0-based) and `*order`
 * describe a root-of-unity ratio.
 *
 * # Safety
 * `rec` must be a live handle and the outputs valid pointers.
 */
enum RecgrowStatus recgrow_int_recurrence_nondegenerate(const struct RecgrowIntRecurrence *rec,
                                                        bool *nondegenerate,
                                                        size_t *i,
                                                        size_t *j,
                                                        uint64_t *order);

/**
 * Least `n0` such that `|G_n| >= (max |alpha|)^{n (1 - eps)}` is certified
 * for all `n0 <= n <= n_max`; `-1` when the last row fails.
 *
 * # Safety
 * `rec` must be a live handle and `min_n` a valid pointer.
 */
enum RecgrowStatus recgrow_epsilon_min_n(const struct RecgrowIntRecurrence *rec,
                                         int64_t eps_num,
                                         int64_t eps_den,
                                         uint64_t n_max,
                                         uint32_t precision_bits,
                                         int64_t *min_n);

/**
 * `(7 k^a)^{8 k^a}` as a decimal string.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum RecgrowStatus recgrow_schmidt_log_bound(uint64_t k, uint32_t a, char **out);

/**
 * Product sandwich for integer `f` at `r`; `product_out` receives
 * `|f(r)|` in decimal and may be null.
 *
 * # Safety
 * `f` must hold `n_coeffs` elements, `out` must be valid and
 * `product_out` valid or null.
 */
enum RecgrowStatus recgrow_product_sandwich(const int64_t *f,
                                            size_t n_coeffs,
                                            int64_t r,
                                            struct RecgrowSandwich *out,
                                            char **product_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RECGROW_H */
