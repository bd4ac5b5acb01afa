/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef XSOLVABLE_H
#define XSOLVABLE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Values accepted for the `case_tag` argument of [`xs_system_new`].
typedef enum XsCase {
  XS_CASE_L1 = 0,
  XS_CASE_L2 = 1,
  XS_CASE_J1 = 2,
  XS_CASE_J2 = 3,
  XS_CASE_EXT_J = 4,
} XsCase;

// Result code of every fallible call.
typedef enum XsStatus {
  XS_STATUS_OK = 0,
  XS_STATUS_NULL_POINTER = 1,
  XS_STATUS_INVALID_ARGUMENT = 2,
  // The parameters violate an admissibility bound of the chosen case.
  XS_STATUS_PARAMETER_CONSTRAINT = 3,
  // The deforming function has a zero inside the physical domain.
  XS_STATUS_DEFORMING_FUNCTION_ZERO = 4,
  // A numerical routine failed to converge or produced non-finite values.
  XS_STATUS_NUMERICAL = 5,
  XS_STATUS_BUFFER_TOO_SMALL = 6,
  XS_STATUS_INTERNAL = 7,
} XsStatus;

// Opaque handle to a built system.
typedef struct XsSystem XsSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds and verifies a system. `beta_*` are ignored for the Laguerre
// cases. On success `*out` receives a handle owned by the caller.
//
// # Safety
// `out` must be a valid pointer to writable storage for one pointer.
enum XsStatus xs_system_new(int32_t case_tag,
                            uint32_t ell,
                            int64_t alpha_num,
                            int64_t alpha_den,
                            int64_t beta_num,
                            int64_t beta_den,
                            struct XsSystem **out);

// Releases a handle. Null is accepted.
//
// # Safety
// `sys` must be null or a handle from [`xs_system_new`] not yet freed.
void xs_system_free(struct XsSystem *sys);

// Energy of physical level `level` as a double.
//
// # Safety
// `sys` must be a live handle and `out` writable.
enum XsStatus xs_system_energy(const struct XsSystem *sys, uint32_t level, double *out);

// Exact energy of physical level `level` as `"p/q"`.
//
// # Safety
// `sys` must be a live handle; see the module notes for `buf`/`needed`.
enum XsStatus xs_system_energy_string(const struct XsSystem *sys,
                                      uint32_t level,
                                      char *buf,
                                      size_t len,
                                      size_t *needed);

// Coefficients of `P_{ℓ,n}` in ascending powers as doubles. `*count`
// receives the number of coefficients; `out` may be null to query it.
//
// # Safety
// `sys` must be a live handle, `count` writable, `out` null or `cap`
// writable doubles.
enum XsStatus xs_system_poly_coeffs(const struct XsSystem *sys,
                                    uint32_t n,
                                    double *out,
                                    size_t cap,
                                    size_t *count);

// Exact coefficients of `P_{ℓ,n}` as a comma-separated list of `"p/q"`,
// ascending powers.
//
// # Safety
// As for [`xs_system_energy_string`].
enum XsStatus xs_system_poly_string(const struct XsSystem *sys,
                                    uint32_t n,
                                    char *buf,
                                    size_t len,
                                    size_t *needed);

// The potential at a physical-domain point `x`.
//
// # Safety
// `sys` must be a live handle and `out` writable.
enum XsStatus xs_system_potential(const struct XsSystem *sys, double x, double *out);

// Unnormalized eigenfunction of physical level `level` at `x`.
//
// # Safety
// `sys` must be a live handle and `out` writable.
enum XsStatus xs_system_wavefunction(const struct XsSystem *sys,
                                     uint32_t level,
                                     double x,
                                     double *out);

// Sets `*is_zero` to whether `P_{ℓ,n}` solves the constraint equation
// exactly.
//
// # Safety
// `sys` must be a live handle and `is_zero` writable.
enum XsStatus xs_system_residual_is_zero(const struct XsSystem *sys, uint32_t n, bool *is_zero);

// Largest normalized off-diagonal entry of the Gram matrix of levels
// `0..size`.
//
// # Safety
// `sys` must be a live handle and `out` writable.
enum XsStatus xs_system_gram_max_off_diagonal(const struct XsSystem *sys,
                                              uint32_t size,
                                              double *out);

// Lowest `k` finite-difference eigenvalues on the default window with
// `points` interior nodes (0 keeps the default). `errors`, if not null,
// receives the relative error of each level against the closed form
// (absolute for a zero level).
//
// # Safety
// `sys` must be a live handle, `eigenvalues` `k` writable doubles, and
// `errors` null or `k` writable doubles.
enum XsStatus xs_system_spectrum(const struct XsSystem *sys,
                                 uint32_t k,
                                 size_t points,
                                 double *eigenvalues,
                                 double *errors);

// Message of the last failure on this thread, or an empty string. The
// pointer stays valid until the next failing call on the same thread.
const char *xs_last_error_message(void);

// Library version, a static NUL-terminated string.
const char *xs_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* XSOLVABLE_H */
