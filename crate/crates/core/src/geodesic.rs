//! Normal geodesics of the left-invariant optimal control problem, in
//! closed form.
//!
//! The fiber part of the extremal system is `h' = Omega h` for the
//! horizontal covector `h = (h1..h4)`, with `Omega` the antisymmetric
//! matrix built from the constant vertical covector components
//! `(C5, C6, C7)`. Since `Omega^2 = -C^2 Id` (C the length of the
//! vertical constants), solutions are circles
//!
//! ```text
//! h(t) = cos(Ct) u + sin(Ct) v,     u = h(0), v = Omega h(0) / C,
//! ```
//!
//! of radius `sqrt(D)`, `D = |h(0)|^2`. Integrating the base system
//! `b' = h`, `a' = A b` from the origin gives
//!
//! ```text
//! b(t) = (1/C) sin(Ct) u + (1/C)(1 - cos(Ct)) v,
//! a(t) = (1/C^2)(Ct - sin(Ct)) w,        w = -(D/C)(C5, C6, C7).
//! ```
//!
//! `D` is the squared speed: `|b'(t)| = sqrt(D)` for all t, and arc-length
//! parametrization is `D = 1`.

use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::quaternion::Quaternion;
use nalgebra::Matrix4;

/// Relative threshold below which the vertical constants are treated as
/// zero and the geodesic degenerates to a straight line.
pub const DEGENERACY_THRESHOLD: f64 = 1e-12;

/// The antisymmetric coefficient matrix of the vertical subsystem
/// `h' = Omega h`; equals right quaternion multiplication by
/// `C5 I + C6 J + C7 K`, so `Omega^2 = -(C5^2+C6^2+C7^2) Id`.
#[rustfmt::skip]
pub fn omega(c567: [f64; 3]) -> Matrix4<f64> {
    let [c5, c6, c7] = c567;
    Matrix4::new(
        0.0, -c5, -c6, -c7,
        c5,  0.0,  c7, -c6,
        c6, -c7,  0.0,  c5,
        c7,  c6, -c5,  0.0,
    )
}

/// Initial covector data and the derived invariants of one normal geodesic
/// from the origin.
///
/// Invariants maintained by every constructor (non-degenerate case):
/// `u . v = 0`, `|u| = |v| = sqrt(D)`, `w = -(D/C)(C5,C6,C7)`, `h(0) = u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicParams {
    c567: [f64; 3],
    /// C: length of the vertical constants; angular frequency of the
    /// vertical circle and of b(t).
    frequency: f64,
    /// D: squared speed |b'|^2; twice the Hamiltonian level.
    speed_sq: f64,
    u: Quaternion,
    v: Quaternion,
    w: [f64; 3],
    degenerate: bool,
}

impl GeodesicParams {
    /// Primary constructor from the initial covector: `u = h(0)`,
    /// `v = Omega h(0) / C`. A vanishing vertical block (relative to
    /// [`DEGENERACY_THRESHOLD`]) marks the parameters degenerate; the
    /// geodesic is then the straight line `b(t) = t h(0)`.
    pub fn from_covector(h0: [f64; 4], c567: [f64; 3]) -> Self {
        let u = Quaternion::from_array(h0);
        let frequency = (c567[0] * c567[0] + c567[1] * c567[1] + c567[2] * c567[2]).sqrt();
        let speed_sq = u.norm_sq();
        if frequency < DEGENERACY_THRESHOLD * (1.0 + u.norm()) {
            return Self {
                c567,
                frequency: 0.0,
                speed_sq,
                u,
                v: Quaternion::ZERO,
                w: [0.0; 3],
                degenerate: true,
            };
        }
        // Omega h = h * (C5 I + C6 J + C7 K)  (right multiplication)
        let v = (u * Quaternion::from_imag(c567)).scale(1.0 / frequency);
        let s = -speed_sq / frequency;
        Self {
            c567,
            frequency,
            speed_sq,
            u,
            v,
            w: [s * c567[0], s * c567[1], s * c567[2]],
            degenerate: false,
        }
    }

    /// Secondary constructor from the solution constants `C1..C4` of the
    /// vertical system (kept for cross-validation against the covector
    /// route). Branches on `(C5, C6) = 0`:
    ///
    /// - general case: the rational u, v component formulas with
    ///   denominator `C5^2 + C6^2`;
    /// - `(C5, C6) = 0`: `u = (C4, -C2, C1, C3)`, `v = (-C3, C1, C2, C4)`.
    ///
    /// Errors if all of `C5, C6, C7` vanish.
    pub fn from_solution_constants(c1234: [f64; 4], c567: [f64; 3]) -> Result<Self> {
        let [c1, c2, c3, c4] = c1234;
        let [c5, c6, c7] = c567;
        let c = (c5 * c5 + c6 * c6 + c7 * c7).sqrt();
        let scale = 1.0 + (c1 * c1 + c2 * c2 + c3 * c3 + c4 * c4).sqrt();
        if c < DEGENERACY_THRESHOLD * scale {
            return Err(Error::Degenerate);
        }

        let den = c5 * c5 + c6 * c6;
        let (u, v) = if den == 0.0 {
            (
                Quaternion::new(c4, -c2, c1, c3),
                Quaternion::new(-c3, c1, c2, c4),
            )
        } else {
            let u = Quaternion::new(
                (c6 * c7 * c1 + c5 * c * c2 - c5 * c7 * c3 + c6 * c * c4) / den,
                c1,
                c3,
                (c5 * c7 * c1 - c6 * c * c2 + c6 * c7 * c3 + c5 * c * c4) / den,
            );
            let v = Quaternion::new(
                -(c * c5 * c1 - c6 * c7 * c2 + c * c6 * c3 + c4 * c5 * c7) / den,
                c2,
                c4,
                (c * c6 * c1 + c2 * c5 * c7 - c * c5 * c3 + c4 * c6 * c7) / den,
            );
            (u, v)
        };

        let speed_sq = u.norm_sq();
        let s = -speed_sq / c;
        Ok(Self {
            c567,
            frequency: c,
            speed_sq,
            u,
            v,
            w: [s * c5, s * c6, s * c7],
            degenerate: false,
        })
    }

    /// Build a parameter set from already-derived data. Used by the
    /// symmetry action, which rotates `u`, `v` and the vertical constants
    /// while `C` and `D` are exact invariants.
    pub(crate) fn from_parts(
        c567: [f64; 3],
        frequency: f64,
        speed_sq: f64,
        u: Quaternion,
        v: Quaternion,
    ) -> Self {
        let s = -speed_sq / frequency;
        Self {
            c567,
            frequency,
            speed_sq,
            u,
            v,
            w: [s * c567[0], s * c567[1], s * c567[2]],
            degenerate: false,
        }
    }

    pub fn c567(&self) -> [f64; 3] {
        self.c567
    }

    /// C, the length of the vertical constants.
    pub fn frequency(&self) -> f64 {
        self.frequency
    }

    /// D, the squared speed (twice the Hamiltonian level).
    pub fn speed_sq(&self) -> f64 {
        self.speed_sq
    }

    /// The initial horizontal covector `h(0) = u`.
    pub fn h0(&self) -> [f64; 4] {
        self.u.to_array()
    }

    pub fn u(&self) -> Quaternion {
        self.u
    }

    pub fn v(&self) -> Quaternion {
        self.v
    }

    pub fn w(&self) -> [f64; 3] {
        self.w
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// Period `2 pi / C` of the vertical circle, if non-degenerate.
    pub fn period(&self) -> Option<f64> {
        (!self.degenerate).then(|| 2.0 * std::f64::consts::PI / self.frequency)
    }

    /// The horizontal covector (= optimal controls) at time t:
    /// `cos(Ct) u + sin(Ct) v`, constant `h(0)` in the degenerate case.
    pub fn vertical(&self, t: f64) -> [f64; 4] {
        if self.degenerate {
            return self.u.to_array();
        }
        let phase = self.frequency * t;
        (self.u.scale(phase.cos()) + self.v.scale(phase.sin())).to_array()
    }

    /// The geodesic point at time t (closed form); the straight line
    /// `(t h0, 0)` in the degenerate case.
    pub fn point(&self, t: f64) -> GroupElement {
        if self.degenerate {
            return GroupElement::new(self.u.scale(t), [0.0; 3]);
        }
        let c = self.frequency;
        let phase = c * t;
        let b = self.u.scale(phase.sin() / c) + self.v.scale((1.0 - phase.cos()) / c);
        let a_factor = (phase - phase.sin()) / (c * c);
        GroupElement::new(
            b,
            [
                a_factor * self.w[0],
                a_factor * self.w[1],
                a_factor * self.w[2],
            ],
        )
    }

    /// Energy of the restriction to `[0, T]`: since the speed is constant,
    /// `(1/2) int |h|^2 dt = D T / 2`.
    pub fn energy(&self, t_final: f64) -> Result<f64> {
        if t_final < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "energy requires T >= 0, got {t_final}"
            )));
        }
        Ok(0.5 * self.speed_sq * t_final)
    }

    /// The descent of the geodesic to the quotient by the rotations fixing
    /// the vertical block: coordinates `(|b(t)|^2, a2, a3, a4)`.
    pub fn quotient_curve(&self, t: f64) -> Result<QuotientPoint> {
        if self.degenerate {
            return Err(Error::Degenerate);
        }
        let c = self.frequency;
        let b_sq = 2.0 * self.speed_sq / (c * c) * (1.0 - (c * t).cos());
        Ok(QuotientPoint {
            b_sq,
            a: self.point(t).a,
            b_sq_scaled: self.speed_sq * b_sq,
        })
    }
}

/// A point of the quotient curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuotientPoint {
    /// `|b(t)|^2 = (2D/C^2)(1 - cos Ct)`, the rotation-invariant
    /// horizontal coordinate.
    pub b_sq: f64,
    /// Vertical components, identical to those of the geodesic point.
    pub a: [f64; 3],
    /// The same quantity scaled by D, `(2D^2/C^2)(1 - cos Ct)`; kept
    /// alongside because the two normalizations agree only at D = 1.
    pub b_sq_scaled: f64,
}

/// w from the wedge of u and v: components
/// `(w21 + w34, w31 + w42, w23 + w41)` with `w_ij = u_i v_j - u_j v_i`.
/// Equals `-(D/C)(C5, C6, C7)`; kept as the independent cross-check route.
pub fn wedge_w(u: Quaternion, v: Quaternion) -> [f64; 3] {
    let [u1, u2, u3, u4] = u.to_array();
    let [v1, v2, v3, v4] = v.to_array();
    [
        -u1 * v2 + u2 * v1 + u3 * v4 - u4 * v3,
        -u1 * v3 - u2 * v4 + u3 * v1 + u4 * v2,
        -u1 * v4 + u2 * v3 - u3 * v2 + u4 * v1,
    ]
}

/// The arc-length parametrized reference geodesic
/// `a(t) = (sin t - t, 0, 0)`, `b(t) = (sin t, 1 - cos t, 0, 0)`,
/// i.e. `u = (1,0,0,0)`, `v = (0,1,0,0)`, `C = D = 1`, vertical constants
/// `(1, 0, 0)`. The worked orbit formulas of [`crate::symmetry`] act on it.
pub fn reference_params() -> GeodesicParams {
    GeodesicParams::from_covector([1.0, 0.0, 0.0, 0.0], [1.0, 0.0, 0.0])
}
