#ifndef BETHE_SYMM_H
#define BETHE_SYMM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes of every fallible call.
 */
typedef enum BsStatus {
  BS_STATUS_OK = 0,
  BS_STATUS_NULL_POINTER = 1,
  BS_STATUS_INVALID_UTF8 = 2,
  BS_STATUS_PARSE = 3,
  BS_STATUS_DIVISION_BY_ZERO = 4,
  BS_STATUS_SINGULAR_POINT = 5,
  BS_STATUS_NOT_DIVISIBLE = 6,
  BS_STATUS_CAP_EXCEEDED = 7,
  BS_STATUS_SHAPE_MISMATCH = 8,
  BS_STATUS_INVALID_ARGUMENT = 9,
  BS_STATUS_SAMPLING_EXHAUSTED = 10,
  BS_STATUS_PANIC = 11,
} BsStatus;

typedef enum BsOp {
  BS_OP_ADD = 0,
  BS_OP_SUB = 1,
  BS_OP_MUL = 2,
  BS_OP_DIV = 3,
} BsOp;

/*
 Reports of one suite run.
 */
typedef struct BsSuite BsSuite;

/*
 An exact rational function.
 */
typedef struct BsValue BsValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or null. The pointer
 stays valid until the next failing call on the same thread.
 */
const char *bs_last_error(void);

/*
 Releases a string returned by this library.

 # Safety
 `s` must come from this library and not be freed twice.
 */
void bs_string_free(char *s);

/*
 Parses an exact rational (`-3/2`) or a variable name (`u1`, `beta`).

 # Safety
 `text` must be a NUL-terminated string and `out` writable.
 */
enum BsStatus bs_value_parse(const char *text_ptr, struct BsValue **out);

/*
 # Safety
 `v` must come from this library and not be freed twice.
 */
void bs_value_free(struct BsValue *v);

/*
 Canonical text of a value; release with `bs_string_free`.

 # Safety
 `v` must be a live handle.
 */
char *bs_value_to_string(const struct BsValue *v);

/*
 `*out = a op b`.

 # Safety
 `a`, `b` must be live handles and `out` writable.
 */
enum BsStatus bs_value_binary(enum BsOp op,
                              const struct BsValue *a,
                              const struct BsValue *b,
                              struct BsValue **out);

/*
 Nonzero when the two values are equal as rational functions.

 # Safety
 `a`, `b` must be live handles.
 */
int32_t bs_value_equal(const struct BsValue *a, const struct BsValue *b);

/*
 Schur polynomial s_λ(z_1..z_N); λ is zero-padded to N parts.

 # Safety
 Arrays must hold the stated number of elements; `out` writable.
 */
enum BsStatus bs_schur(const size_t *parts,
                       size_t nparts,
                       const struct BsValue *const *vars,
                       size_t nvars,
                       struct BsValue **out);

/*
 β-Grothendieck polynomial G_λ(z_1..z_N; β).

 # Safety
 As for `bs_schur`; `beta` must be a live handle.
 */
enum BsStatus bs_grothendieck(const size_t *parts,
                              size_t nparts,
                              const struct BsValue *const *vars,
                              size_t nvars,
                              const struct BsValue *beta,
                              struct BsValue **out);

/*
 Felderhof wavefunction in determinant form. `sites` lists particle
 positions (`holes == 0`) or hole positions (`holes != 0`), 1-based.

 # Safety
 Arrays must hold the stated number of elements; handles live.
 */
enum BsStatus bs_felderhof_wavefunction(size_t m,
                                        const size_t *sites,
                                        size_t nsites,
                                        const struct BsValue *const *spectral,
                                        size_t nspectral,
                                        const struct BsValue *p,
                                        const struct BsValue *q,
                                        int32_t holes,
                                        struct BsValue **out);

/*
 Felderhof domain wall partition function by lattice contraction;
 `spectral[0]` acts on the vacuum first.

 # Safety
 Arrays must hold the stated number of elements; handles live.
 */
enum BsStatus bs_felderhof_dwbp(const struct BsValue *const *spectral,
                                size_t nspectral,
                                const struct BsValue *p,
                                const struct BsValue *q,
                                struct BsValue **out);

/*
 Runs the verification tasks matching `filter` at `profile` ("smoke",
 "standard" or "deep").

 # Safety
 Strings NUL-terminated; `out` writable.
 */
enum BsStatus bs_verify(const char *filter,
                        const char *profile,
                        uint64_t seed,
                        struct BsSuite **out);

/*
 Number of task reports in a suite result.

 # Safety
 `s` must be a live handle.
 */
size_t bs_suite_len(const struct BsSuite *s);

/*
 Nonzero when every task passed.

 # Safety
 `s` must be a live handle.
 */
int32_t bs_suite_passed(const struct BsSuite *s);

/*
 JSON array of the reports; release with `bs_string_free`.

 # Safety
 `s` must be a live handle.
 */
char *bs_suite_json(const struct BsSuite *s);

/*
 # Safety
 `s` must come from `bs_verify` and not be freed twice.
 */
void bs_suite_free(struct BsSuite *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BETHE_SYMM_H */
