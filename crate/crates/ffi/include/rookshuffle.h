#ifndef ROOKSHUFFLE_H
#define ROOKSHUFFLE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum RksStatus {
  RKS_STATUS_OK = 0,
  RKS_STATUS_NULL_POINTER = 1,
  RKS_STATUS_INVALID_UTF8 = 2,
  RKS_STATUS_PARSE_ERROR = 3,
  RKS_STATUS_GUARD_VIOLATION = 4,
  RKS_STATUS_INVALID_ARGUMENT = 5,
  RKS_STATUS_INTERNAL_ERROR = 6,
} RksStatus;

// A parsed board or adjacency-condition file.
typedef struct RksBoard RksBoard;

// A deck: how many cards carry each value.
typedef struct RksDeck RksDeck;

// A polynomial with arbitrary-precision integer coefficients.
typedef struct RksPolynomial RksPolynomial;

// Outcome of a Monte Carlo run.
typedef struct RksSimulation {
  uint64_t trials;
  uint64_t successes;
  double estimate;
  double std_error;
  uint64_t seed;
} RksSimulation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string; do not free.
const char *rks_version(void);

// Message for the most recent failure on this thread, or NULL after a
// successful call. Valid until the next call into the library.
const char *rks_last_error(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void rks_string_free(char *s);

// Parses "13x4", "4,4,4" or a single count.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be writable.
enum RksStatus rks_deck_parse(const char *spec, struct RksDeck **out);

// Builds a deck from `len` per-value counts.
//
// # Safety
// `counts` must point to `len` readable values; `out` must be writable.
enum RksStatus rks_deck_from_counts(const size_t *counts, size_t len, struct RksDeck **out);

// # Safety
// `deck` must be NULL or a handle from this library not yet freed.
void rks_deck_free(struct RksDeck *deck);

// Total number of cards in the deck, or 0 for NULL.
//
// # Safety
// `deck` must be NULL or a live handle.
size_t rks_deck_cards(const struct RksDeck *deck);

// Number of orderings with no two equal values adjacent, as decimal digits.
//
// # Safety
// `deck` must be a live handle; `out` must be writable.
enum RksStatus rks_deck_perfect_shuffle_count(const struct RksDeck *deck, char **out);

// Number of orderings where no card lands on a position of its own value.
//
// # Safety
// `deck` must be a live handle; `out` must be writable.
enum RksStatus rks_deck_generalized_derangement_count(const struct RksDeck *deck, char **out);

// Full probability report as JSON, with `digits` decimal places.
//
// # Safety
// `deck` must be a live handle; `out` must be writable.
enum RksStatus rks_deck_report_json(const struct RksDeck *deck, size_t digits, char **out);

// Distribution of the number of equal-value adjacencies, as JSON.
//
// # Safety
// `deck` must be a live handle; `out` must be writable.
enum RksStatus rks_deck_adjacency_distribution_json(const struct RksDeck *deck, char **out);

// The same distribution by exhaustive enumeration; small decks only.
//
// # Safety
// `deck` must be a live handle; `out` must be writable.
enum RksStatus rks_deck_bruteforce_distribution_json(const struct RksDeck *deck, char **out);

// Monte Carlo estimate. `threads == 0` uses the default pool; the result
// is the same either way.
//
// # Safety
// `deck` must be a live handle; `out` must be writable.
enum RksStatus rks_simulate(const struct RksDeck *deck,
                            uint64_t trials,
                            uint64_t seed,
                            size_t threads,
                            struct RksSimulation *out);

// Rook polynomial of the complete n x n board.
//
// # Safety
// `out` must be writable.
enum RksStatus rks_poly_full_board(uint64_t n, struct RksPolynomial **out);

// Generalized rook polynomial of all adjacencies among n cards.
//
// # Safety
// `out` must be writable.
enum RksStatus rks_poly_full_adjacency(uint64_t n, struct RksPolynomial **out);

// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum RksStatus rks_poly_mul(const struct RksPolynomial *a,
                            const struct RksPolynomial *b,
                            struct RksPolynomial **out);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum RksStatus rks_poly_pow(const struct RksPolynomial *p,
                            uint32_t exponent,
                            struct RksPolynomial **out);

// Degree of the polynomial, or -1 for zero (and for NULL).
//
// # Safety
// `p` must be NULL or a live handle.
int64_t rks_poly_degree(const struct RksPolynomial *p);

// Coefficient of x^k as decimal digits.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum RksStatus rks_poly_coeff(const struct RksPolynomial *p, size_t k, char **out);

// Image of the polynomial under x^k -> k!.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum RksStatus rks_poly_phi(const struct RksPolynomial *p, char **out);

// Human-readable form, highest power first, e.g. "x^2 - 4x + 2".
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum RksStatus rks_poly_to_string(const struct RksPolynomial *p, char **out);

// # Safety
// `p` must be NULL or a handle from this library not yet freed.
void rks_poly_free(struct RksPolynomial *p);

// Parses a board file ("n" header then "i j" cells) or an adjacency file
// ("adjacency n" header then "i j" pairs).
//
// # Safety
// `source` must be a NUL-terminated string; `out` must be writable.
enum RksStatus rks_board_parse(const char *source, struct RksBoard **out);

// Rook polynomial of the board, or generalized rook polynomial of the
// adjacency set.
//
// # Safety
// `board` must be a live handle; `out` must be writable.
enum RksStatus rks_board_rook_polynomial(const struct RksBoard *board, struct RksPolynomial **out);

// Hit numbers h_0 .. h_n, space separated.
//
// # Safety
// `board` must be a live handle; `out` must be writable.
enum RksStatus rks_board_hit_numbers(const struct RksBoard *board, char **out);

// # Safety
// `board` must be NULL or a handle from this library not yet freed.
void rks_board_free(struct RksBoard *board);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ROOKSHUFFLE_H */
