#ifndef ZETAIX_H
#define ZETAIX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ZetaixStatus {
  ZETAIX_STATUS_OK = 0,
  ZETAIX_STATUS_NULL_POINTER = 1,
  ZETAIX_STATUS_DOMAIN = 2,
  ZETAIX_STATUS_POLE = 3,
  ZETAIX_STATUS_ACCURACY = 4,
  ZETAIX_STATUS_SINGULARITY = 5,
  ZETAIX_STATUS_USE_OTHER_PATH = 6,
  ZETAIX_STATUS_SNAP_REFUSED = 7,
  ZETAIX_STATUS_STENCIL_CROSSES_POLE = 8,
  ZETAIX_STATUS_WIDEN_ORDER = 9,
  ZETAIX_STATUS_INVALID_CONFIG = 10,
  ZETAIX_STATUS_PANIC = 99,
} ZetaixStatus;

/**
 * Which formula produced a value; `None` for oracle results.
 */
typedef enum ZetaixPath {
  ZETAIX_PATH_NONE = 0,
  ZETAIX_PATH_GENERIC_LEFT = 1,
  ZETAIX_PATH_GENERIC_RIGHT = 2,
  ZETAIX_PATH_NEG_EVEN = 3,
  ZETAIX_PATH_NEG_ODD = 4,
  ZETAIX_PATH_POS_EVEN = 5,
  ZETAIX_PATH_POS_ODD = 6,
} ZetaixPath;

/**
 * Opaque evaluation settings.
 */
typedef struct ZetaixConfig ZetaixConfig;

typedef struct ZetaixResult {
  double re;
  double im;
  double error_estimate;
  enum ZetaixPath path;
} ZetaixResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * New handle holding the default settings. Free with [`zetaix_config_free`].
 */
struct ZetaixConfig *zetaix_config_new(void);

/**
 * Releases a handle from [`zetaix_config_new`]. Null is ignored.
 *
 * # Safety
 * `cfg` must be null or a live handle not freed before.
 */
void zetaix_config_free(struct ZetaixConfig *cfg);

/**
 * Sets the relative series tolerance; rejected values leave the handle unchanged.
 *
 * # Safety
 * `cfg` must be null or a live handle.
 */
enum ZetaixStatus zetaix_config_set_tol(struct ZetaixConfig *cfg, double tol_rel);

/**
 * # Safety
 * `cfg` must be null or a live handle.
 */
enum ZetaixStatus zetaix_config_set_term_cap(struct ZetaixConfig *cfg, size_t term_cap);

/**
 * # Safety
 * `cfg` must be null or a live handle.
 */
enum ZetaixStatus zetaix_config_set_integer_snap(struct ZetaixConfig *cfg, double snap);

/**
 * # Safety
 * `cfg` must be null or a live handle.
 */
enum ZetaixStatus zetaix_config_set_pole_guard(struct ZetaixConfig *cfg, double guard_radius);

/**
 * ζ_H(s, ix) for `deriv` = 0, ∂_s ζ_H(s, ix) for `deriv` = 1.
 *
 * # Safety
 * `cfg` must be null or a live handle; `out` must point to a ZetaixResult.
 */
enum ZetaixStatus zetaix_evaluate(const struct ZetaixConfig *cfg,
                                  double s,
                                  double x,
                                  uint8_t deriv,
                                  struct ZetaixResult *out);

/**
 * Independent high-precision reference for ζ_H(s, ix) or its s-derivative,
 * with default oracle settings. Much slower than [`zetaix_evaluate`].
 *
 * # Safety
 * `out` must point to a ZetaixResult.
 */
enum ZetaixStatus zetaix_oracle(double s, double x, uint8_t deriv, struct ZetaixResult *out);

/**
 * d^order/dσ^order ζ_R(σ), order ∈ {0, 1, 2}.
 *
 * # Safety
 * `cfg` must be null or a live handle; `out` must point to a double.
 */
enum ZetaixStatus zetaix_riemann_zeta(const struct ZetaixConfig *cfg,
                                      uint8_t order,
                                      double sigma,
                                      double *out);

/**
 * Li_{−n}(w) for real w > 0, w ≠ 1.
 *
 * # Safety
 * `out` must point to a double.
 */
enum ZetaixStatus zetaix_polylog_neg_int(uint32_t n, double w, double *out);

/**
 * Copy of the message from the last failing call on this thread, or null.
 * Free with [`zetaix_string_free`].
 */
char *zetaix_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a pointer from [`zetaix_last_error_message`] not freed before.
 */
void zetaix_string_free(char *s);

/**
 * Library version as a static NUL-terminated string.
 */
const char *zetaix_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZETAIX_H */
