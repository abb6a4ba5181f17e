#ifndef SCCODES_H
#define SCCODES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every call.
typedef enum ScStatus {
  SC_STATUS_OK = 0,
  SC_STATUS_INVALID_ARGUMENT = 1,
  SC_STATUS_PARSE = 2,
  SC_STATUS_BUDGET_EXCEEDED = 3,
  // An exact computation produced a non-integer or failed a divisibility check.
  SC_STATUS_INTEGRALITY = 4,
  SC_STATUS_UNSUPPORTED = 5,
  SC_STATUS_NULL_POINTER = 6,
  SC_STATUS_PANIC = 7,
} ScStatus;

// Which specialization to compute.
typedef enum ScKind {
  SC_KIND_EXTENDED = 0,
  SC_KIND_COMPLETE = 1,
  SC_KIND_HAMMING = 2,
} ScKind;

// Opaque weight enumerator.
typedef struct ScEnumerator ScEnumerator;

// Opaque code specification.
typedef struct ScSpec ScSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or NULL. The pointer stays
// valid until the next failing call on this thread; do not free it.
const char *sc_last_error_message(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void sc_string_free(char *s);

// Parses a CodeSpec JSON document.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum ScStatus sc_spec_from_json(const char *json, struct ScSpec **out);

// Builds `T^{(variant)}_{a1,a2}(n, r)`; `variant` is one of gt, ge, lt, le
// (NULL means gt).
//
// # Safety
// `variant` must be NULL or NUL-terminated; `out` must be writable.
enum ScStatus sc_spec_tenengolts(size_t n,
                                 uint32_t r,
                                 uint64_t a1,
                                 uint64_t a2,
                                 const char *variant,
                                 struct ScSpec **out);

// Serializes a spec to JSON.
//
// # Safety
// `spec` must be a live handle; `out` must be writable.
enum ScStatus sc_spec_to_json(const struct ScSpec *spec, char **out);

// # Safety
// `spec` must be NULL or a handle from this library, freed at most once.
void sc_spec_free(struct ScSpec *spec);

// Tests membership of the word `symbols[0..len]`.
//
// # Safety
// `spec` must be live, `symbols` must point to `len` values, `out` writable.
enum ScStatus sc_spec_is_member(const struct ScSpec *spec,
                                const uint32_t *symbols,
                                size_t len,
                                bool *out);

// Computes the enumerator of `spec`. A `budget` of 0 means the default.
//
// # Safety
// `spec` must be live; `out` must be writable.
enum ScStatus sc_enumerator_compute(const struct ScSpec *spec,
                                    enum ScKind kind,
                                    uint64_t budget_words,
                                    struct ScEnumerator **out);

// Hamming enumerator of `sum h_j x_j = a (mod m)` over `[r]^n`.
//
// # Safety
// `h` must point to `n` values; `out` must be writable.
enum ScStatus sc_lc_hamming(size_t n,
                            uint64_t m,
                            uint32_t r,
                            const int64_t *h,
                            int64_t a,
                            struct ScEnumerator **out);

// Canonical polynomial text, e.g. `1 + 2*w^2 + 2*w^3`.
//
// # Safety
// `e` must be live; `out` must be writable.
enum ScStatus sc_enumerator_to_text(const struct ScEnumerator *e, char **out);

// Enumerator JSON document.
//
// # Safety
// `e` must be live; `out` must be writable.
enum ScStatus sc_enumerator_to_json(const struct ScEnumerator *e, char **out);

// Number of codewords as a decimal string.
//
// # Safety
// `e` must be live; `out` must be writable.
enum ScStatus sc_enumerator_cardinality(const struct ScEnumerator *e, char **out);

// # Safety
// `e` must be NULL or a handle from this library, freed at most once.
void sc_enumerator_free(struct ScEnumerator *e);

// `|T^{(variant)}_{a1,a2}(n, r)|` as a decimal string.
//
// # Safety
// `variant` must be NULL or NUL-terminated; `out` must be writable.
enum ScStatus sc_tenengolts_cardinality(size_t n,
                                        uint32_t r,
                                        uint64_t a1,
                                        uint64_t a2,
                                        const char *variant,
                                        char **out);

// Checks the MacWilliams identity for the kernel of `matrix` (rows
// separated by `;`, entries by `,`) over `Z_r`. `report` receives the JSON
// report and may be NULL. A rank-deficient matrix is not an error; it
// reports `verified = false` with `"right": null`.
//
// # Safety
// `matrix` must be NUL-terminated; `verified` must be writable.
enum ScStatus sc_macwilliams_verify(uint32_t r,
                                    const char *matrix,
                                    uint64_t budget_words,
                                    bool *verified,
                                    char **report);

// Ramanujan's sum `c_d(a)`.
//
// # Safety
// `out` must be writable.
enum ScStatus sc_ramanujan_sum(int64_t d, int64_t a, int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCCODES_H */
