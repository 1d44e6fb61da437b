#ifndef BOOKX_H
#define BOOKX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BxStatus {
  BX_STATUS_OK = 0,
  BX_STATUS_NULL_POINTER = 1,
  BX_STATUS_INVALID_UTF8 = 2,
  BX_STATUS_SYNTAX_ERROR = 3,
  BX_STATUS_DIVISION_BY_ZERO = 4,
  BX_STATUS_NEGATIVE_RADICAND = 5,
  BX_STATUS_NOT_REPRESENTABLE = 6,
  BX_STATUS_DOMAIN_ERROR = 7,
  BX_STATUS_INVALID_PAIR = 8,
  BX_STATUS_PANIC = 99,
} BxStatus;

typedef enum BxOp {
  BX_OP_ADD = 0,
  BX_OP_SUB = 1,
  BX_OP_MUL = 2,
  BX_OP_DIV = 3,
} BxOp;

typedef enum BxClass {
  BX_CLASS_RATIONAL_LENGTH = 0,
  BX_CLASS_RATIONAL_POWER_ONLY = 1,
  BX_CLASS_MEDIAL = 2,
  BX_CLASS_SIMPLE_RANK = 3,
  BX_CLASS_BINOMIAL = 4,
  BX_CLASS_APOTOME = 5,
  BX_CLASS_UNCLASSIFIED = 6,
} BxClass;

typedef enum BxProposition {
  BX_PROPOSITION_X17 = 17,
  BX_PROPOSITION_X21 = 21,
  BX_PROPOSITION_X54 = 54,
  BX_PROPOSITION_X115 = 115,
} BxProposition;

// Opaque exact value.
typedef struct BxValue BxValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *bx_last_error_message(void);

// Parses and normalizes an expression such as `"sqrt(2 + sqrt(3))"`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum BxStatus bx_value_parse(const char *text, struct BxValue **out);

// The rational `num / den`.
//
// # Safety
// `out` must be a valid pointer.
enum BxStatus bx_value_from_ratio(int64_t num, int64_t den, struct BxValue **out);

// # Safety
// `v` must come from this library and not be freed twice. NULL is ignored.
void bx_value_free(struct BxValue *v);

// # Safety
// `s` must come from this library and not be freed twice. NULL is ignored.
void bx_string_free(char *s);

// Canonical form as a parseable expression string.
//
// # Safety
// `v` must be a live handle and `out` a valid pointer.
enum BxStatus bx_value_to_string(const struct BxValue *v, char **out);

// Decimal rounded to `digits` significant digits.
//
// # Safety
// `v` must be a live handle and `out` a valid pointer.
enum BxStatus bx_value_to_decimal(const struct BxValue *v, uint32_t digits, char **out);

// Exact equality.
//
// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum BxStatus bx_value_equal(const struct BxValue *a, const struct BxValue *b, bool *out);

// `a op b`, exactly.
//
// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum BxStatus bx_arith(const struct BxValue *a,
                       const struct BxValue *b,
                       enum BxOp op,
                       struct BxValue **out);

// Exact square root.
//
// # Safety
// `v` must be a live handle and `out` a valid pointer.
enum BxStatus bx_sqrt(const struct BxValue *v, struct BxValue **out);

// Commensurability in length, or in square when `power` is true.
//
// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum BxStatus bx_commensurable(const struct BxValue *a,
                               const struct BxValue *b,
                               bool power,
                               bool *out);

// Book X class of a positive value. `detail` receives the rank for simple
// values and the species (1–6) for binomials and apotomes, 0 otherwise.
//
// # Safety
// `v` must be a live handle; `class_out` and `detail` valid pointers.
enum BxStatus bx_classify(const struct BxValue *v, enum BxClass *class_out, uint32_t *detail);

// Rank of a positive single-term value.
//
// # Safety
// `v` must be a live handle and `out` a valid pointer.
enum BxStatus bx_rank(const struct BxValue *v, uint32_t *out);

// Binomial (or apotome) of species `species` built from `n = n_num / n_den`.
//
// # Safety
// `out` must be a valid pointer.
enum BxStatus bx_gen_binomial(uint8_t species,
                              int64_t n_num,
                              int64_t n_den,
                              bool apotome,
                              struct BxValue **out);

// Seeded check of a proposition; `passed` receives the number of passing
// trials.
//
// # Safety
// `passed` must be a valid pointer.
enum BxStatus bx_verify(enum BxProposition prop, uint32_t trials, uint64_t seed, uint32_t *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BOOKX_H */
