#ifndef QTANGENT_H
#define QTANGENT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  QT_STATUS_OK = 0,
  QT_STATUS_NULL_POINTER = 1,
  QT_STATUS_INVALID_UTF8 = 2,
  QT_STATUS_SYNTAX = 3,
  QT_STATUS_MIXED_ALGEBRA = 4,
  QT_STATUS_UNKNOWN_FIXTURE = 5,
  QT_STATUS_SCHEMA = 6,
  QT_STATUS_COMPUTATION = 7,
  QT_STATUS_PANIC = 8,
} QtStatus;

/**
 * A calculus fixture with its derived model.
 */
typedef struct QtModel QtModel;

/**
 * Element of the coordinate algebra O(SL_q(2)).
 */
typedef struct QtOElement QtOElement;

/**
 * Element of the dual algebra U.
 */
typedef struct QtUElement QtUElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *qt_last_error(void);

/**
 * # Safety
 * `s` must come from this library or be NULL.
 */
void qt_string_free(char *s);

/**
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
QtStatus qt_u_parse(const char *src, QtUElement **out);

/**
 * # Safety
 * `x` comes from this library or is NULL.
 */
void qt_u_free(QtUElement *x);

/**
 * Canonical text of `x`.
 *
 * # Safety
 * Pointers are valid.
 */
QtStatus qt_u_to_string(const QtUElement *x, char **out);

/**
 * # Safety
 * Pointers are valid.
 */
QtStatus qt_u_mul(const QtUElement *a, const QtUElement *b, QtUElement **out);

/**
 * # Safety
 * Pointers are valid.
 */
QtStatus qt_u_equal(const QtUElement *a, const QtUElement *b, bool *out);

/**
 * Coproduct of `x` as text.
 *
 * # Safety
 * Pointers are valid.
 */
QtStatus qt_u_coproduct(const QtUElement *x, char **out);

/**
 * Lower bound for the dimension of a right coideal containing `x`.
 *
 * # Safety
 * Pointers are valid.
 */
QtStatus qt_coideal_bound(const QtUElement *x, size_t *out);

/**
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
QtStatus qt_o_parse(const char *src, QtOElement **out);

/**
 * # Safety
 * `x` comes from this library or is NULL.
 */
void qt_o_free(QtOElement *x);

/**
 * # Safety
 * Pointers are valid.
 */
QtStatus qt_o_to_string(const QtOElement *x, char **out);

/**
 * `⟨u, o⟩` as canonical scalar text.
 *
 * # Safety
 * Pointers are valid.
 */
QtStatus qt_pair(const QtUElement *u, const QtOElement *o, char **out);

/**
 * Builds the model of a built-in calculus fixture (`calc3`, `3`, `item9`).
 *
 * # Safety
 * `name` is a NUL-terminated string; `out` is writable.
 */
QtStatus qt_model_build(const char *name, QtModel **out);

/**
 * # Safety
 * `m` comes from this library or is NULL.
 */
void qt_model_free(QtModel *m);

/**
 * Dimensions of Γ^∧0 … Γ^∧4.
 *
 * # Safety
 * `out` points to five writable `size_t`.
 */
QtStatus qt_model_exterior_dims(const QtModel *m, size_t *out);

/**
 * Cohomology dimensions h0 … h3 twisted by the spin `two_lambda / 2`
 * representation.
 *
 * # Safety
 * `out` points to four writable `size_t`.
 */
QtStatus qt_model_cohomology(const QtModel *m, uint32_t two_lambda, size_t *out);

/**
 * Runs the full verification suite on a built-in fixture.
 *
 * # Safety
 * `name` is a NUL-terminated string; `passed` is writable.
 */
QtStatus qt_verify(const char *name, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QTANGENT_H */
