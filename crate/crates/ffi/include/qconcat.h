#ifndef QCONCAT_H
#define QCONCAT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Asymptotic bound selector for [`qc_bound_delta`].
 */
typedef enum QcBound {
  QC_BOUND_GV = 0,
  QC_BOUND_ZYABLOV = 1,
  QC_BOUND_GCQ = 2,
  QC_BOUND_BZ = 3,
  QC_BOUND_KTV = 4,
} QcBound;

/**
 * Result code of every fallible call.
 */
typedef enum QcStatus {
  QC_STATUS_OK = 0,
  QC_STATUS_NULL_POINTER = 1,
  QC_STATUS_INVALID_ARGUMENT = 2,
  QC_STATUS_BUDGET_EXCEEDED = 3,
  QC_STATUS_UNSUPPORTED = 4,
  QC_STATUS_DECODE_FAILURE = 5,
  QC_STATUS_PARSE = 6,
  QC_STATUS_INTERNAL = 7,
  QC_STATUS_PANIC = 8,
  QC_STATUS_BUFFER_TOO_SMALL = 9,
} QcStatus;

/**
 * A stabilizer code. Quantum Reed-Solomon codes keep their algebraic
 * structure so they decode algebraically when used as outer codes.
 */
typedef struct QcCode QcCode;

/**
 * A concatenated code together with its two-stage decoder.
 */
typedef struct QcConcat QcConcat;

/**
 * Code parameters `[[n, k]]` with the certified distance lower bound.
 */
typedef struct QcParams {
  size_t n;
  size_t k;
  uint32_t d_lower;
} QcParams;

/**
 * Monte Carlo summary; the interval is a 95% Wilson interval.
 */
typedef struct QcSimStats {
  uint64_t trials;
  uint64_t failures;
  double rate;
  double ci_low;
  double ci_high;
} QcSimStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Length in bytes, including the terminating NUL, of the calling thread's
 * last error message. Returns 1 when there is no error.
 */
size_t qc_last_error_length(void);

/**
 * Copy the calling thread's last error message into `buf` as a
 * NUL-terminated string.
 *
 * # Safety
 * `buf` must point to at least `len` writable bytes.
 */
enum QcStatus qc_last_error_message(char *buf, size_t len);

/**
 * Library version as a static NUL-terminated string.
 */
const char *qc_version(void);

/**
 * The [[5,1,3]] code.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum QcStatus qc_code_five_qubit(struct QcCode **out);

/**
 * The [[7,1,3]] Steane code.
 *
 * # Safety
 * As for [`qc_code_five_qubit`].
 */
enum QcStatus qc_code_steane(struct QcCode **out);

/**
 * The [[m,m,1]] code with no stabilizers.
 *
 * # Safety
 * As for [`qc_code_five_qubit`].
 */
enum QcStatus qc_code_trivial(size_t m, struct QcCode **out);

/**
 * Quantum Reed-Solomon code `[[m(2^m−1), m(2^m−1−2k)]]`.
 *
 * # Safety
 * As for [`qc_code_five_qubit`].
 */
enum QcStatus qc_code_qrs(size_t m, size_t k, struct QcCode **out);

/**
 * A stabilizer code from generator-matrix text: a line `n dim`, then
 * `dim` rows of `2n` bits.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` as for
 * [`qc_code_five_qubit`].
 */
enum QcStatus qc_code_from_generators(const char *text, struct QcCode **out);

/**
 * Release a code handle. Null is ignored.
 *
 * # Safety
 * `code` must be null or a handle not yet freed.
 */
void qc_code_free(struct QcCode *code);

/**
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum QcStatus qc_code_params(const struct QcCode *code, struct QcParams *out);

/**
 * Exact minimum distance by exhaustive enumeration, refused when more
 * than `budget` vectors would be visited (`0` selects the default).
 *
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum QcStatus qc_code_min_distance(const struct QcCode *code, uint64_t budget, uint32_t *out);

/**
 * Concatenate `outer` with `inner` and prepare the decoder. The outer code
 * is read in blocks of `k(inner)` qubits. Neither input is consumed.
 *
 * # Safety
 * `outer` and `inner` must be live handles; `out` writable.
 */
enum QcStatus qc_concat_new(const struct QcCode *outer,
                            const struct QcCode *inner,
                            struct QcConcat **out);

/**
 * Release a concatenated-code handle. Null is ignored.
 *
 * # Safety
 * `cc` must be null or a handle not yet freed.
 */
void qc_concat_free(struct QcConcat *cc);

/**
 * # Safety
 * `cc` must be a live handle and `out` writable.
 */
enum QcStatus qc_concat_params(const struct QcConcat *cc, struct QcParams *out);

/**
 * Number of errors the decoder is guaranteed to correct.
 *
 * # Safety
 * `cc` must be a live handle and `out` writable.
 */
enum QcStatus qc_concat_radius(const struct QcConcat *cc, size_t *out);

/**
 * Decode a Pauli error given as a string over `IXYZ` of length `n`.
 * `success` receives whether the residual is a stabilizer.
 *
 * # Safety
 * `cc` must be a live handle, `pauli` NUL-terminated and `success`
 * writable.
 */
enum QcStatus qc_concat_decode_pauli(const struct QcConcat *cc, const char *pauli, bool *success);

/**
 * Monte Carlo logical failure rate under depolarizing noise of strength
 * `p`. Results depend only on `(code, p, trials, seed)`; `threads = 0`
 * uses the global pool.
 *
 * # Safety
 * `cc` must be a live handle and `out` writable.
 */
enum QcStatus qc_concat_simulate(const struct QcConcat *cc,
                                 double p,
                                 uint64_t trials,
                                 uint64_t seed,
                                 size_t threads,
                                 struct QcSimStats *out);

/**
 * Relative distance of a bound at `rate`. `s` is the order for
 * [`QcBound::Gcq`] and is ignored otherwise. [`QcBound::Ktv`] needs an
 * inner code table (`n k d` per line); pass null for the other kinds.
 *
 * # Safety
 * `table` must be null or NUL-terminated; `out` writable.
 */
enum QcStatus qc_bound_delta(enum QcBound kind,
                             double rate,
                             size_t s,
                             const char *table,
                             double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCONCAT_H */
