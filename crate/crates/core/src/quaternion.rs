//! Quaternion arithmetic and the 4x4 real matrix representation.
//!
//! Components are stored in (1, I, J, K) order. The matrix representation
//! sends a quaternion to the matrix of left multiplication acting on
//! component columns, so `to_matrix(p * q) = to_matrix(p) * to_matrix(q)`.
//! This is the algebraic substrate for the group law and every symmetry
//! action in the crate.

use crate::error::{Error, Result};
use nalgebra::Matrix4;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A quaternion `q1 + q2 I + q3 J + q4 K` with real components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
    pub q4: f64,
}

impl Quaternion {
    pub const fn new(q1: f64, q2: f64, q3: f64, q4: f64) -> Self {
        Self { q1, q2, q3, q4 }
    }

    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn from_array(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.q1, self.q2, self.q3, self.q4]
    }

    /// Purely imaginary quaternion from its (I, J, K) components.
    pub const fn from_imag(v: [f64; 3]) -> Self {
        Self::new(0.0, v[0], v[1], v[2])
    }

    /// The (I, J, K) components.
    pub const fn imag(self) -> [f64; 3] {
        [self.q2, self.q3, self.q4]
    }

    pub const fn re(self) -> f64 {
        self.q1
    }

    /// Conjugate `q1 - q2 I - q3 J - q4 K`.
    pub fn conj(self) -> Self {
        Self::new(self.q1, -self.q2, -self.q3, -self.q4)
    }

    /// Imaginary part `q2 I + q3 J + q4 K` (zero real component).
    pub fn im(self) -> Self {
        Self::new(0.0, self.q2, self.q3, self.q4)
    }

    pub fn norm_sq(self) -> f64 {
        self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3 + self.q4 * self.q4
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Euclidean inner product of the component vectors.
    ///
    /// Coincides with `(p.conj() * q).re()`.
    pub fn dot(self, other: Self) -> f64 {
        self.q1 * other.q1 + self.q2 * other.q2 + self.q3 * other.q3 + self.q4 * other.q4
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(s * self.q1, s * self.q2, s * self.q3, s * self.q4)
    }

    /// The left-multiplication matrix: first column (q1, q2, q3, q4),
    /// `q1 * Id` plus an antisymmetric part.
    #[rustfmt::skip]
    pub fn to_matrix(self) -> Matrix4<f64> {
        let Self { q1, q2, q3, q4 } = self;
        Matrix4::new(
            q1, -q2, -q3, -q4,
            q2,  q1, -q4,  q3,
            q3,  q4,  q1, -q2,
            q4, -q3,  q2,  q1,
        )
    }

    /// Exponential of a purely imaginary quaternion:
    /// `cos|w| + sin|w| * w/|w|`, a unit quaternion.
    ///
    /// Rejects input whose real part is not (numerically) zero.
    pub fn exp_imaginary(w: Self) -> Result<Self> {
        if w.q1.abs() > 1e-12 * (1.0 + w.norm()) {
            return Err(Error::NonzeroRealPart(w.q1));
        }
        let angle = w.norm();
        if angle == 0.0 {
            return Ok(Self::ONE);
        }
        let s = angle.sin() / angle;
        Ok(Self::new(
            angle.cos(),
            s * w.q2,
            s * w.q3,
            s * w.q4,
        ))
    }

    pub fn is_unit(self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    /// Hamilton product; agrees with the matrix representation,
    /// `to_matrix(p * q) = to_matrix(p) * to_matrix(q)`.
    fn mul(self, q: Quaternion) -> Quaternion {
        let p = self;
        Quaternion::new(
            p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3 - p.q4 * q.q4,
            p.q2 * q.q1 + p.q1 * q.q2 - p.q4 * q.q3 + p.q3 * q.q4,
            p.q3 * q.q1 + p.q4 * q.q2 + p.q1 * q.q3 - p.q2 * q.q4,
            p.q4 * q.q1 - p.q3 * q.q2 + p.q2 * q.q3 + p.q1 * q.q4,
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.q1 + o.q1, self.q2 + o.q2, self.q3 + o.q3, self.q4 + o.q4)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.q1 - o.q1, self.q2 - o.q2, self.q3 - o.q3, self.q4 - o.q4)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.q1, -self.q2, -self.q3, -self.q4)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}I + {}J + {}K",
            self.q1, self.q2, self.q3, self.q4
        )
    }
}
