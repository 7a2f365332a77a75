/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef TRANSLATABLE_H
#define TRANSLATABLE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. `TT_STATUS_OK` is zero; everything else is an error.
typedef enum TtStatus {
  TT_STATUS_OK = 0,
  TT_STATUS_NULL_POINTER = 1,
  TT_STATUS_INVALID_UTF8 = 2,
  // Bad order, step, entry, index, length or ordering.
  TT_STATUS_INVALID_ARGUMENT = 3,
  TT_STATUS_PARSE = 4,
  TT_STATUS_PRECONDITION = 5,
  TT_STATUS_CONSTRUCTION_IMPOSSIBLE = 6,
  TT_STATUS_RESOURCE_LIMIT = 7,
  TT_STATUS_UNKNOWN_PROPERTY = 8,
  TT_STATUS_UNKNOWN_THEOREM = 9,
  TT_STATUS_INVARIANT = 10,
  // The output buffer is too small; the required length was still written.
  TT_STATUS_BUFFER_TOO_SMALL = 11,
  TT_STATUS_PANIC = 12,
} TtStatus;

// Serialization formats for [`tt_table_to_string`].
typedef enum TtFormat {
  TT_FORMAT_JSON = 0,
  TT_FORMAT_TEXT = 1,
} TtFormat;

// A k-sequence: order `n`, step `k` and the first row `a_1..a_n`.
typedef struct TtSequence TtSequence;

// A Cayley table on `1..=n`.
typedef struct TtTable TtTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL. The pointer is
// valid until the next library call on the same thread.
const char *tt_last_error(void);

// Builds a k-sequence from `n` entries in `1..=n`.
//
// # Safety
// `entries` must point to `n` readable values; `out` must be writable.
enum TtStatus tt_sequence_new(size_t n, size_t k, const size_t *entries, struct TtSequence **out);

// The sequence of the idempotent k-translatable groupoid of order `n`.
// Fails with `TT_STATUS_CONSTRUCTION_IMPOSSIBLE` when `gcd(k-1, n) > 1`.
//
// # Safety
// `out` must be writable.
enum TtStatus tt_idempotent_sequence(size_t n, size_t k, struct TtSequence **out);

// Copies the first row of `seq` into `entries`, which holds `cap` values.
// `len` receives the order even when the buffer is too small.
//
// # Safety
// `seq` must be a live handle; `entries` must hold `cap` values; `len` must be writable.
enum TtStatus tt_sequence_values(const struct TtSequence *seq,
                                 size_t *entries,
                                 size_t cap,
                                 size_t *len);

// Whether the sequence's table is associative, decided from the sequence alone.
//
// # Safety
// `seq` must be a live handle; `out` must be writable.
enum TtStatus tt_semigroup_criterion(const struct TtSequence *seq, bool *out);

// # Safety
// `seq` must be NULL or a handle not yet freed.
void tt_sequence_free(struct TtSequence *seq);

// The table `i·j = a_[k - ki + j]` of a sequence.
//
// # Safety
// `seq` must be a live handle; `out` must be writable.
enum TtStatus tt_table_from_sequence(const struct TtSequence *seq, struct TtTable **out);

// Builds a table from `n*n` entries in row-major order.
//
// # Safety
// `entries` must point to `n*n` readable values; `out` must be writable.
enum TtStatus tt_table_from_rows(size_t n, const size_t *entries, struct TtTable **out);

// Parses a table in JSON (`{"n":..,"table":[[..],..]}`) or whitespace text;
// the format is recognized from the input.
//
// # Safety
// `input` must be a nul-terminated string; `out` must be writable.
enum TtStatus tt_table_parse(const char *input, struct TtTable **out);

// Serializes a table. Release `out` with [`tt_string_free`].
//
// # Safety
// `table` must be a live handle; `out` must be writable.
enum TtStatus tt_table_to_string(const struct TtTable *table, enum TtFormat format, char **out);

// Order of a table, or 0 for NULL.
//
// # Safety
// `table` must be NULL or a live handle.
size_t tt_table_order(const struct TtTable *table);

// The product `i·j`, both in `1..=n`.
//
// # Safety
// `table` must be a live handle; `out` must be writable.
enum TtStatus tt_table_entry(const struct TtTable *table, size_t i, size_t j, size_t *out);

// Every step `k` for which the table is k-translatable, ascending.
// `len` receives the count even when the buffer is too small.
//
// # Safety
// `table` must be a live handle; `ks` must hold `cap` values; `len` must be writable.
enum TtStatus tt_detect(const struct TtTable *table, size_t *ks, size_t cap, size_t *len);

// Checks a named property such as `"associative"` or `"left-cancellative"`.
// A refutation is a successful call with `out` set to false.
//
// # Safety
// `table` must be a live handle; `property` a nul-terminated string; `out` writable.
enum TtStatus tt_check(const struct TtTable *table, const char *property, bool *out);

// # Safety
// `table` must be NULL or a handle not yet freed.
void tt_table_free(struct TtTable *table);

// Runs a verification campaign. `max_n` of 0 selects the campaign default and
// `jobs` of 0 means one worker. `passed` is false when any case failed;
// `report` receives one JSON line per case (release with [`tt_string_free`]).
//
// # Safety
// `theorem` must be a nul-terminated string; `passed` and `report` writable.
enum TtStatus tt_verify(const char *theorem,
                        size_t max_n,
                        size_t jobs,
                        bool *passed,
                        char **report);

// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void tt_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRANSLATABLE_H */
