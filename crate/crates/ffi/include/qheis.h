/* C interface for the qheis library: sub-Riemannian geodesics on the
 * 7-dimensional quaternionic Heisenberg group.
 *
 * Generated by cbindgen from crates/ffi; do not edit by hand. */

#ifndef QHEIS_H
#define QHEIS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum {
  QH_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  QH_STATUS_NULL_POINTER = 1,
  /**
   * An argument was out of range (negative time, non-unit rotation,
   * zero axis, bad tolerance, ...).
   */
  QH_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The operation needs non-degenerate parameters (C > 0).
   */
  QH_STATUS_DEGENERATE = 3,
} QhStatus;

/**
 * Opaque handle to one geodesic parameter set.
 */
typedef struct QhGeodesic QhGeodesic;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Build a geodesic from the initial covector `h0[4]` and the vertical
 * constants `c567[3]`. Vanishing vertical constants are accepted and
 * flagged degenerate (straight-line geodesic).
 *
 * # Safety
 * `h0` must point to 4 doubles, `c567` to 3; `out` receives an owned handle.
 */
QhStatus qh_geodesic_from_covector(const double *h0, const double *c567, QhGeodesic **out);

/**
 * Build a geodesic from the solution constants `c1234[4]`, `c567[3]` of
 * the vertical system. Fails with `DEGENERATE` when C5, C6, C7 all vanish.
 *
 * # Safety
 * `c1234` must point to 4 doubles, `c567` to 3; `out` receives an owned handle.
 */
QhStatus qh_geodesic_from_constants(const double *c1234, const double *c567, QhGeodesic **out);

/**
 * Release a handle obtained from any constructor. Null is a no-op.
 *
 * # Safety
 * `gp` must be a handle returned by this library, released at most once.
 */
void qh_geodesic_free(QhGeodesic *gp);

/**
 * # Safety
 * `gp` must be a live handle; `out` must be a valid pointer.
 */
QhStatus qh_geodesic_is_degenerate(const QhGeodesic *gp, bool *out);

/**
 * Derived invariants: frequency C, squared speed D, the circle vectors
 * `u[4]`, `v[4]` and the vertical direction `w[3]`.
 *
 * # Safety
 * `gp` must be a live handle; output pointers must be valid for the
 * stated element counts.
 */
QhStatus qh_geodesic_invariants(const QhGeodesic *gp,
                                double *frequency,
                                double *speed_sq,
                                double *u,
                                double *v,
                                double *w);

/**
 * Geodesic point at time `t`, written as 7 coordinates.
 *
 * # Safety
 * `gp` must be a live handle; `coords` must point to 7 doubles.
 */
QhStatus qh_geodesic_point(const QhGeodesic *gp, double t, double *coords);

/**
 * Horizontal covector (= controls) at time `t`, written as `h[4]`.
 *
 * # Safety
 * `gp` must be a live handle; `h` must point to 4 doubles.
 */
QhStatus qh_geodesic_covector(const QhGeodesic *gp, double t, double *h);

/**
 * Energy of the restriction to `[0, t_final]` (fails for negative times).
 *
 * # Safety
 * `gp` must be a live handle; `out` must be a valid pointer.
 */
QhStatus qh_geodesic_energy(const QhGeodesic *gp, double t_final, double *out);

/**
 * Maxwell time `2 pi / C` (fails with `DEGENERATE` for straight lines).
 *
 * # Safety
 * `gp` must be a live handle; `out` must be a valid pointer.
 */
QhStatus qh_geodesic_maxwell_time(const QhGeodesic *gp, double *out);

/**
 * Cut time (coincides with the Maxwell and first conjugate times).
 *
 * # Safety
 * `gp` must be a live handle; `out` must be a valid pointer.
 */
QhStatus qh_geodesic_cut_time(const QhGeodesic *gp, double *out);

/**
 * The Maxwell point, written as 7 coordinates.
 *
 * # Safety
 * `gp` must be a live handle; `coords` must point to 7 doubles.
 */
QhStatus qh_geodesic_maxwell_point(const QhGeodesic *gp, double *coords);

/**
 * Quotient curve at time `t`: the invariant `|b|^2` and the vertical
 * components `a[3]`.
 *
 * # Safety
 * `gp` must be a live handle; `b_sq` must be valid, `a` must point to 3
 * doubles.
 */
QhStatus qh_geodesic_quotient(const QhGeodesic *gp, double t, double *b_sq, double *a);

/**
 * Apply a rotation pair `(c[4], d[4])` of unit quaternions to the
 * geodesic data, producing a new handle.
 *
 * # Safety
 * `gp` must be a live handle; `c`, `d` must point to 4 doubles each;
 * `out` receives an owned handle.
 */
QhStatus qh_geodesic_rotate(const QhGeodesic *gp,
                            const double *c,
                            const double *d,
                            QhGeodesic **out);

/**
 * Rotate the parameters into the representative plane (u along the first
 * axis). Writes the applied left-isoclinic unit quaternion to `d[4]` and
 * returns the canonical handle.
 *
 * # Safety
 * `gp` must be a live handle; `d` must point to 4 doubles; `out`
 * receives an owned handle.
 */
QhStatus qh_geodesic_canonicalize(const QhGeodesic *gp, double *d, QhGeodesic **out);

/**
 * Maximum deviation between the closed forms and a fixed-step RK4
 * integration of the extremal system over `[0, t_final]`.
 *
 * # Safety
 * `gp` must be a live handle; `out` must be a valid pointer.
 */
QhStatus qh_geodesic_max_deviation(const QhGeodesic *gp,
                                   double t_final,
                                   uint64_t steps,
                                   double *out);

/**
 * Group multiplication on coordinate arrays.
 *
 * # Safety
 * `g`, `h` and `out` must point to 7 doubles each.
 */
QhStatus qh_group_multiply(const double *g, const double *h, double *out);

/**
 * Group inverse on coordinate arrays.
 *
 * # Safety
 * `g` and `out` must point to 7 doubles each.
 */
QhStatus qh_group_inverse(const double *g, double *out);

/**
 * The point action of a rotation pair: `b |-> d b conj(c)`,
 * `a |-> c a conj(c)`.
 *
 * # Safety
 * `c`, `d` must point to 4 doubles, `p` and `out` to 7 each.
 */
QhStatus qh_rotate_point(const double *c, const double *d, const double *p, double *out);

/**
 * The quotient Jacobian in expanded form (rescaled time `tau = C t`).
 */
double qh_jacobian_expanded(double tau);

/**
 * The quotient Jacobian in factored form.
 */
double qh_jacobian_factored(double tau);

/**
 * The inner factor `tau sin tau + 2 cos tau - 2`.
 */
double qh_jacobian_inner_factor(double tau);

/**
 * Isolate the first positive zero of the Jacobian (it equals `2 pi`).
 *
 * # Safety
 * `root` must be a valid pointer.
 */
QhStatus qh_first_conjugate_tau(double tolerance, double *root);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QHEIS_H */
