/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef DUALBRAID_H
#define DUALBRAID_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code of every fallible call.
typedef enum DbStatus {
  DB_STATUS_OK = 0,
  DB_STATUS_NULL_POINTER = 1,
  DB_STATUS_INVALID_UTF8 = 2,
  DB_STATUS_PARSE = 3,
  DB_STATUS_INVALID_ARGUMENT = 4,
  DB_STATUS_STRAND_MISMATCH = 5,
  DB_STATUS_BOUND_EXCEEDED = 6,
  DB_STATUS_OUT_OF_RANGE = 7,
  DB_STATUS_INTERNAL = 8,
  DB_STATUS_PANIC = 9,
} DbStatus;

// Periodic type reported by [`db_classify`].
typedef enum DbPeriodicKind {
  DB_PERIODIC_KIND_DELTA_TYPE = 0,
  DB_PERIODIC_KIND_EPSILON_TYPE = 1,
  DB_PERIODIC_KIND_CENTRAL = 2,
  DB_PERIODIC_KIND_NON_PERIODIC = 3,
} DbPeriodicKind;

// A braid in left normal form.
typedef struct DbBraid DbBraid;

// A canonically sorted super summit set of `ε^d`.
typedef struct DbTable DbTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread; empty if none. Valid until
// the next failing call on the same thread.
const char *db_last_error(void);

// Static description of a status code.
const char *db_status_name(enum DbStatus status);

// Parses `text` as a braid word on `n` strands and normalizes it.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum DbStatus db_braid_parse(uint32_t n, const char *text, struct DbBraid **out);

// `δ^k` on `n` strands.
//
// # Safety
// `out` must be writable.
enum DbStatus db_braid_delta_power(uint32_t n, int64_t k, struct DbBraid **out);

// `ε^k` on `n` strands.
//
// # Safety
// `out` must be writable.
enum DbStatus db_braid_epsilon_power(uint32_t n, int64_t k, struct DbBraid **out);

// Releases a braid; null is ignored.
//
// # Safety
// `b` must come from this library and not be used afterwards.
void db_braid_free(struct DbBraid *b);

// # Safety
// `b` must be a valid braid; `out` must be writable.
enum DbStatus db_braid_clone(const struct DbBraid *b, struct DbBraid **out);

// `a · b`.
//
// # Safety
// `a`, `b` must be valid braids; `out` must be writable.
enum DbStatus db_braid_multiply(const struct DbBraid *a,
                                const struct DbBraid *b,
                                struct DbBraid **out);

// # Safety
// `b` must be a valid braid; `out` must be writable.
enum DbStatus db_braid_inverse(const struct DbBraid *b, struct DbBraid **out);

// `g⁻¹ · b · g`.
//
// # Safety
// `b`, `g` must be valid braids; `out` must be writable.
enum DbStatus db_braid_conjugate(const struct DbBraid *b,
                                 const struct DbBraid *g,
                                 struct DbBraid **out);

// # Safety
// `a`, `b` must be valid braids; `out` must be writable.
enum DbStatus db_braid_equal(const struct DbBraid *a, const struct DbBraid *b, bool *out);

// Strand count, infimum and canonical length.
//
// # Safety
// `b` must be a valid braid; each out-pointer may be null to skip it.
enum DbStatus db_braid_shape(const struct DbBraid *b, uint32_t *n, int64_t *inf, size_t *len);

// Text form `d^r · [..] · …`; release with [`db_string_free`].
//
// # Safety
// `b` must be a valid braid; `out` must be writable.
enum DbStatus db_braid_to_string(const struct DbBraid *b, char **out);

// JSON form `{"n":…,"inf":…,"factors":[…]}`; release with [`db_string_free`].
//
// # Safety
// `b` must be a valid braid; `out` must be writable.
enum DbStatus db_braid_to_json(const struct DbBraid *b, char **out);

// # Safety
// `s` must come from this library and not be used afterwards.
void db_string_free(char *s);

// Periodic type and its power (0 for non-periodic).
//
// # Safety
// `b` must be a valid braid; `kind` and `m` must be writable.
enum DbStatus db_classify(const struct DbBraid *b, enum DbPeriodicKind *kind, int64_t *m);

// Searches `γ` with `γ⁻¹ b γ = ε^k`. On success `*conjugate` tells whether
// one exists and `*gamma` receives it (null otherwise; the reason is then
// in [`db_last_error`]).
//
// # Safety
// `b` must be a valid braid; `conjugate` and `gamma` must be writable.
enum DbStatus db_solve_csp(const struct DbBraid *b,
                           int64_t k,
                           bool *conjugate,
                           struct DbBraid **gamma);

// As [`db_solve_csp`] with target `δ^k`.
//
// # Safety
// As [`db_solve_csp`].
enum DbStatus db_solve_csp_delta(const struct DbBraid *b,
                                 int64_t k,
                                 bool *conjugate,
                                 struct DbBraid **gamma);

// Size of the super summit set of `ε^d` in `B_n`.
//
// # Safety
// `out` must be writable.
enum DbStatus db_count_sss(uint32_t n, uint32_t d, uint64_t *out);

// Number of multichains of length `r` in the noncrossing partitions of `d` points.
//
// # Safety
// `out` must be writable.
enum DbStatus db_zeta(uint64_t d, uint64_t r, uint64_t *out);

// Whether `b` lies in the super summit set of `ε^d` in `B_n`.
//
// # Safety
// `b` must be a valid braid; `out` must be writable.
enum DbStatus db_verify_membership(const struct DbBraid *b, uint32_t n, uint32_t d, bool *out);

// # Safety
// `out` must be writable.
enum DbStatus db_sss_enumerate(uint32_t n, uint32_t d, struct DbTable **out);

// # Safety
// `t` must be a valid table; `out` must be writable.
enum DbStatus db_table_len(const struct DbTable *t, size_t *out);

// Copy of the `i`-th element in canonical order.
//
// # Safety
// `t` must be a valid table; `out` must be writable.
enum DbStatus db_table_get(const struct DbTable *t, size_t i, struct DbBraid **out);

// # Safety
// `t` must come from this library and not be used afterwards.
void db_table_free(struct DbTable *t);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DUALBRAID_H */
