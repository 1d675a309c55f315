//! C ABI for the qheis library.
//!
//! Geodesic parameter sets live behind the opaque [`QhGeodesic`] handle;
//! every function returns a [`QhStatus`] (outputs through pointers) except
//! the pure scalar Jacobian evaluations. Group elements cross the boundary
//! as length-7 coordinate arrays in the order `(a2, a3, a4, b1, b2, b3, b4)`,
//! quaternions as length-4 arrays `(1, I, J, K)`.
//!
//! Handles returned through `out` parameters are owned by the caller and
//! must be released with [`qh_geodesic_free`].

use qheis_core::error::Error;
use qheis_core::geodesic::GeodesicParams;
use qheis_core::group::GroupElement;
use qheis_core::quaternion::Quaternion;
use qheis_core::{cut_locus, integrator, symmetry};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QhStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was out of range (negative time, non-unit rotation,
    /// zero axis, bad tolerance, ...).
    InvalidArgument = 2,
    /// The operation needs non-degenerate parameters (C > 0).
    Degenerate = 3,
}

impl From<Error> for QhStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::Degenerate => QhStatus::Degenerate,
            _ => QhStatus::InvalidArgument,
        }
    }
}

/// Opaque handle to one geodesic parameter set.
pub struct QhGeodesic {
    inner: GeodesicParams,
}

unsafe fn read_array<const N: usize>(ptr: *const f64) -> Option<[f64; N]> {
    if ptr.is_null() {
        return None;
    }
    let mut out = [0.0; N];
    unsafe { std::ptr::copy_nonoverlapping(ptr, out.as_mut_ptr(), N) };
    Some(out)
}

unsafe fn write_array<const N: usize>(ptr: *mut f64, values: [f64; N]) -> bool {
    if ptr.is_null() {
        return false;
    }
    unsafe { std::ptr::copy_nonoverlapping(values.as_ptr(), ptr, N) };
    true
}

unsafe fn handle<'a>(ptr: *const QhGeodesic) -> Option<&'a GeodesicParams> {
    unsafe { ptr.as_ref() }.map(|h| &h.inner)
}

fn export(gp: GeodesicParams, out: *mut *mut QhGeodesic) -> QhStatus {
    if out.is_null() {
        return QhStatus::NullPointer;
    }
    let boxed = Box::new(QhGeodesic { inner: gp });
    unsafe { *out = Box::into_raw(boxed) };
    QhStatus::Ok
}

/// Build a geodesic from the initial covector `h0[4]` and the vertical
/// constants `c567[3]`. Vanishing vertical constants are accepted and
/// flagged degenerate (straight-line geodesic).
///
/// # Safety
/// `h0` must point to 4 doubles, `c567` to 3; `out` receives an owned handle.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_from_covector(
    h0: *const f64,
    c567: *const f64,
    out: *mut *mut QhGeodesic,
) -> QhStatus {
    let (Some(h0), Some(c567)) = (unsafe { read_array::<4>(h0) }, unsafe { read_array::<3>(c567) })
    else {
        return QhStatus::NullPointer;
    };
    export(GeodesicParams::from_covector(h0, c567), out)
}

/// Build a geodesic from the solution constants `c1234[4]`, `c567[3]` of
/// the vertical system. Fails with `DEGENERATE` when C5, C6, C7 all vanish.
///
/// # Safety
/// `c1234` must point to 4 doubles, `c567` to 3; `out` receives an owned handle.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_from_constants(
    c1234: *const f64,
    c567: *const f64,
    out: *mut *mut QhGeodesic,
) -> QhStatus {
    let (Some(c1234), Some(c567)) =
        (unsafe { read_array::<4>(c1234) }, unsafe { read_array::<3>(c567) })
    else {
        return QhStatus::NullPointer;
    };
    match GeodesicParams::from_solution_constants(c1234, c567) {
        Ok(gp) => export(gp, out),
        Err(e) => e.into(),
    }
}

/// Release a handle obtained from any constructor. Null is a no-op.
///
/// # Safety
/// `gp` must be a handle returned by this library, released at most once.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_free(gp: *mut QhGeodesic) {
    if !gp.is_null() {
        drop(unsafe { Box::from_raw(gp) });
    }
}

/// # Safety
/// `gp` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_is_degenerate(
    gp: *const QhGeodesic,
    out: *mut bool,
) -> QhStatus {
    let Some(params) = (unsafe { handle(gp) }) else {
        return QhStatus::NullPointer;
    };
    if out.is_null() {
        return QhStatus::NullPointer;
    }
    unsafe { *out = params.is_degenerate() };
    QhStatus::Ok
}

/// Derived invariants: frequency C, squared speed D, the circle vectors
/// `u[4]`, `v[4]` and the vertical direction `w[3]`.
///
/// # Safety
/// `gp` must be a live handle; output pointers must be valid for the
/// stated element counts.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_invariants(
    gp: *const QhGeodesic,
    frequency: *mut f64,
    speed_sq: *mut f64,
    u: *mut f64,
    v: *mut f64,
    w: *mut f64,
) -> QhStatus {
    let Some(params) = (unsafe { handle(gp) }) else {
        return QhStatus::NullPointer;
    };
    if frequency.is_null() || speed_sq.is_null() {
        return QhStatus::NullPointer;
    }
    unsafe {
        *frequency = params.frequency();
        *speed_sq = params.speed_sq();
        if !write_array(u, params.u().to_array())
            || !write_array(v, params.v().to_array())
            || !write_array(w, params.w())
        {
            return QhStatus::NullPointer;
        }
    }
    QhStatus::Ok
}

/// Geodesic point at time `t`, written as 7 coordinates.
///
/// # Safety
/// `gp` must be a live handle; `coords` must point to 7 doubles.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_point(
    gp: *const QhGeodesic,
    t: f64,
    coords: *mut f64,
) -> QhStatus {
    let Some(params) = (unsafe { handle(gp) }) else {
        return QhStatus::NullPointer;
    };
    if unsafe { write_array(coords, params.point(t).coords()) } {
        QhStatus::Ok
    } else {
        QhStatus::NullPointer
    }
}

/// Horizontal covector (= controls) at time `t`, written as `h[4]`.
///
/// # Safety
/// `gp` must be a live handle; `h` must point to 4 doubles.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_covector(
    gp: *const QhGeodesic,
    t: f64,
    h: *mut f64,
) -> QhStatus {
    let Some(params) = (unsafe { handle(gp) }) else {
        return QhStatus::NullPointer;
    };
    if unsafe { write_array(h, params.vertical(t)) } {
        QhStatus::Ok
    } else {
        QhStatus::NullPointer
    }
}

/// Energy of the restriction to `[0, t_final]` (fails for negative times).
///
/// # Safety
/// `gp` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_energy(
    gp: *const QhGeodesic,
    t_final: f64,
    out: *mut f64,
) -> QhStatus {
    let Some(params) = (unsafe { handle(gp) }) else {
        return QhStatus::NullPointer;
    };
    if out.is_null() {
        return QhStatus::NullPointer;
    }
    match params.energy(t_final) {
        Ok(e) => {
            unsafe { *out = e };
            QhStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// Maxwell time `2 pi / C` (fails with `DEGENERATE` for straight lines).
///
/// # Safety
/// `gp` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_maxwell_time(
    gp: *const QhGeodesic,
    out: *mut f64,
) -> QhStatus {
    let Some(params) = (unsafe { handle(gp) }) else {
        return QhStatus::NullPointer;
    };
    if out.is_null() {
        return QhStatus::NullPointer;
    }
    match cut_locus::maxwell_time(params) {
        Ok(t) => {
            unsafe { *out = t };
            QhStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// Cut time (coincides with the Maxwell and first conjugate times).
///
/// # Safety
/// `gp` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_cut_time(gp: *const QhGeodesic, out: *mut f64) -> QhStatus {
    unsafe { qh_geodesic_maxwell_time(gp, out) }
}

/// The Maxwell point, written as 7 coordinates.
///
/// # Safety
/// `gp` must be a live handle; `coords` must point to 7 doubles.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_maxwell_point(
    gp: *const QhGeodesic,
    coords: *mut f64,
) -> QhStatus {
    let Some(params) = (unsafe { handle(gp) }) else {
        return QhStatus::NullPointer;
    };
    match cut_locus::maxwell_point(params) {
        Ok(p) => {
            if unsafe { write_array(coords, p.coords()) } {
                QhStatus::Ok
            } else {
                QhStatus::NullPointer
            }
        }
        Err(e) => e.into(),
    }
}

/// Quotient curve at time `t`: the invariant `|b|^2` and the vertical
/// components `a[3]`.
///
/// # Safety
/// `gp` must be a live handle; `b_sq` must be valid, `a` must point to 3
/// doubles.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_quotient(
    gp: *const QhGeodesic,
    t: f64,
    b_sq: *mut f64,
    a: *mut f64,
) -> QhStatus {
    let Some(params) = (unsafe { handle(gp) }) else {
        return QhStatus::NullPointer;
    };
    if b_sq.is_null() {
        return QhStatus::NullPointer;
    }
    match params.quotient_curve(t) {
        Ok(q) => {
            unsafe { *b_sq = q.b_sq };
            if unsafe { write_array(a, q.a) } {
                QhStatus::Ok
            } else {
                QhStatus::NullPointer
            }
        }
        Err(e) => e.into(),
    }
}

/// Apply a rotation pair `(c[4], d[4])` of unit quaternions to the
/// geodesic data, producing a new handle.
///
/// # Safety
/// `gp` must be a live handle; `c`, `d` must point to 4 doubles each;
/// `out` receives an owned handle.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_rotate(
    gp: *const QhGeodesic,
    c: *const f64,
    d: *const f64,
    out: *mut *mut QhGeodesic,
) -> QhStatus {
    let Some(params) = (unsafe { handle(gp) }) else {
        return QhStatus::NullPointer;
    };
    let (Some(c), Some(d)) = (unsafe { read_array::<4>(c) }, unsafe { read_array::<4>(d) })
    else {
        return QhStatus::NullPointer;
    };
    let rotation =
        match symmetry::RotationPair::new(Quaternion::from_array(c), Quaternion::from_array(d)) {
            Ok(r) => r,
            Err(e) => return e.into(),
        };
    match symmetry::act_geodesic(rotation, params) {
        Ok(gp) => export(gp, out),
        Err(e) => e.into(),
    }
}

/// Rotate the parameters into the representative plane (u along the first
/// axis). Writes the applied left-isoclinic unit quaternion to `d[4]` and
/// returns the canonical handle.
///
/// # Safety
/// `gp` must be a live handle; `d` must point to 4 doubles; `out`
/// receives an owned handle.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_canonicalize(
    gp: *const QhGeodesic,
    d: *mut f64,
    out: *mut *mut QhGeodesic,
) -> QhStatus {
    let Some(params) = (unsafe { handle(gp) }) else {
        return QhStatus::NullPointer;
    };
    match symmetry::canonicalize(params) {
        Ok((canonical, rotation)) => {
            if !unsafe { write_array(d, rotation.d().to_array()) } {
                return QhStatus::NullPointer;
            }
            export(canonical, out)
        }
        Err(e) => e.into(),
    }
}

/// Maximum deviation between the closed forms and a fixed-step RK4
/// integration of the extremal system over `[0, t_final]`.
///
/// # Safety
/// `gp` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qh_geodesic_max_deviation(
    gp: *const QhGeodesic,
    t_final: f64,
    steps: u64,
    out: *mut f64,
) -> QhStatus {
    let Some(params) = (unsafe { handle(gp) }) else {
        return QhStatus::NullPointer;
    };
    if out.is_null() {
        return QhStatus::NullPointer;
    }
    match integrator::max_deviation(params, t_final, steps as usize) {
        Ok(d) => {
            unsafe { *out = d };
            QhStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// Group multiplication on coordinate arrays.
///
/// # Safety
/// `g`, `h` and `out` must point to 7 doubles each.
#[no_mangle]
pub unsafe extern "C" fn qh_group_multiply(
    g: *const f64,
    h: *const f64,
    out: *mut f64,
) -> QhStatus {
    let (Some(g), Some(h)) = (unsafe { read_array::<7>(g) }, unsafe { read_array::<7>(h) })
    else {
        return QhStatus::NullPointer;
    };
    let product = GroupElement::from_coords(g).multiply(GroupElement::from_coords(h));
    if unsafe { write_array(out, product.coords()) } {
        QhStatus::Ok
    } else {
        QhStatus::NullPointer
    }
}

/// Group inverse on coordinate arrays.
///
/// # Safety
/// `g` and `out` must point to 7 doubles each.
#[no_mangle]
pub unsafe extern "C" fn qh_group_inverse(g: *const f64, out: *mut f64) -> QhStatus {
    let Some(g) = (unsafe { read_array::<7>(g) }) else {
        return QhStatus::NullPointer;
    };
    if unsafe { write_array(out, GroupElement::from_coords(g).inverse().coords()) } {
        QhStatus::Ok
    } else {
        QhStatus::NullPointer
    }
}

/// The point action of a rotation pair: `b |-> d b conj(c)`,
/// `a |-> c a conj(c)`.
///
/// # Safety
/// `c`, `d` must point to 4 doubles, `p` and `out` to 7 each.
#[no_mangle]
pub unsafe extern "C" fn qh_rotate_point(
    c: *const f64,
    d: *const f64,
    p: *const f64,
    out: *mut f64,
) -> QhStatus {
    let (Some(c), Some(d), Some(p)) = (
        unsafe { read_array::<4>(c) },
        unsafe { read_array::<4>(d) },
        unsafe { read_array::<7>(p) },
    ) else {
        return QhStatus::NullPointer;
    };
    let rotation =
        match symmetry::RotationPair::new(Quaternion::from_array(c), Quaternion::from_array(d)) {
            Ok(r) => r,
            Err(e) => return e.into(),
        };
    let image = symmetry::act_point(rotation, GroupElement::from_coords(p));
    if unsafe { write_array(out, image.coords()) } {
        QhStatus::Ok
    } else {
        QhStatus::NullPointer
    }
}

/// The quotient Jacobian in expanded form (rescaled time `tau = C t`).
#[no_mangle]
pub extern "C" fn qh_jacobian_expanded(tau: f64) -> f64 {
    cut_locus::jacobian_expanded(tau)
}

/// The quotient Jacobian in factored form.
#[no_mangle]
pub extern "C" fn qh_jacobian_factored(tau: f64) -> f64 {
    cut_locus::jacobian_factored(tau)
}

/// The inner factor `tau sin tau + 2 cos tau - 2`.
#[no_mangle]
pub extern "C" fn qh_jacobian_inner_factor(tau: f64) -> f64 {
    cut_locus::jacobian_inner_factor(tau)
}

/// Isolate the first positive zero of the Jacobian (it equals `2 pi`).
///
/// # Safety
/// `root` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qh_first_conjugate_tau(tolerance: f64, root: *mut f64) -> QhStatus {
    if root.is_null() {
        return QhStatus::NullPointer;
    }
    match cut_locus::first_conjugate_tau(tolerance) {
        Ok(report) => {
            unsafe { *root = report.root };
            QhStatus::Ok
        }
        Err(e) => e.into(),
    }
}
