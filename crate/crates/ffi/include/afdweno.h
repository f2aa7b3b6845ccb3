/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef AFDWENO_H
#define AFDWENO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>
#include <stddef.h>

/**
 * Result codes. Zero is success.
 */
typedef enum AfdStatus {
  AFD_STATUS_OK = 0,
  AFD_STATUS_NULL_POINTER = 1,
  AFD_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A state left the admissible set.
   */
  AFD_STATUS_DOMAIN = 3,
  /**
   * A non-finite value was produced.
   */
  AFD_STATUS_NUMERICAL = 4,
  AFD_STATUS_IO = 5,
  AFD_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * A Rust panic was caught at the boundary.
   */
  AFD_STATUS_INTERNAL = 7,
} AfdStatus;

/**
 * Opaque simulation handle.
 */
typedef struct AfdSimulation AfdSimulation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library from the same thread.
 */
const char *afd_last_error_message(void);

/**
 * Writes the flux-correction coefficients c2, c4, c6, c8 of `order`
 * (3, 5, 7 or 9) into `out`, which must hold 4 doubles. Unused trailing
 * coefficients are zero.
 *
 * # Safety
 * `out` must point to 4 writable doubles.
 */
enum AfdStatus afd_correction_coefficients(uint32_t order, double *out);

/**
 * Creates a simulation of a registered problem with its default scheme
 * settings. `order` 0 and `nx` 0 keep the problem defaults; `ny` 0 means
 * square for 2D problems.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum AfdStatus afd_simulation_new(const char *name,
                                  uint32_t order,
                                  uintptr_t nx,
                                  uintptr_t ny,
                                  struct AfdSimulation **out);

/**
 * Releases a simulation. Null is ignored.
 *
 * # Safety
 * `sim` must come from [`afd_simulation_new`] and not be used afterwards.
 */
void afd_simulation_free(struct AfdSimulation *sim);

/**
 * Takes one time step. `dt` receives the step size, zero once the final
 * time is reached. `dt` may be null.
 *
 * # Safety
 * `sim` must be a live handle; `dt` null or writable.
 */
enum AfdStatus afd_simulation_step(struct AfdSimulation *sim, double *dt);

/**
 * Steps until the problem's final time.
 *
 * # Safety
 * `sim` must be a live handle.
 */
enum AfdStatus afd_simulation_run(struct AfdSimulation *sim);

/**
 * Current time, step count and final time. Any output may be null.
 *
 * # Safety
 * `sim` must be a live handle; outputs null or writable.
 */
enum AfdStatus afd_simulation_time(struct AfdSimulation *sim,
                                   double *t,
                                   uintptr_t *steps,
                                   double *t_end);

/**
 * Interior zone counts and number of primitive variables per zone.
 *
 * # Safety
 * `sim` must be a live handle; outputs null or writable.
 */
enum AfdStatus afd_simulation_shape(struct AfdSimulation *sim,
                                    uintptr_t *nx,
                                    uintptr_t *ny,
                                    uintptr_t *nvar);

/**
 * Copies primitive variables of all interior zones into `buf`, zone by zone
 * with x fastest and `nvar` values per zone. `len` is the capacity of `buf`
 * in doubles.
 *
 * # Safety
 * `sim` must be a live handle; `buf` must hold `len` writable doubles.
 */
enum AfdStatus afd_simulation_primitives(struct AfdSimulation *sim, double *buf, uintptr_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AFDWENO_H */
