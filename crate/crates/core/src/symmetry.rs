//! The symmetry algebra and its finite action.
//!
//! Thirteen polynomial vector fields generate the infinitesimal symmetries:
//! seven right-invariant translations t1..t7 and a six-dimensional
//! stabilizer of the origin splitting as two commuting sp(1) triples,
//! s1..s3 (the `c` block) and s4..s6 (the `d` block).
//!
//! The finite stabilizer action is by a pair of unit quaternions `(c, d)`:
//!
//! ```text
//! b |-> d b conj(c),      a |-> c a conj(c)   (a as imaginary quaternion)
//! ```
//!
//! a group automorphism fixing the origin. On geodesic data it sends
//! `u, v |-> d u conj(c), d v conj(c)` and conjugates the vertical
//! constants by `c`; pure-d rotations fix `w` and the whole vertical part.
//!
//! Sign convention tying the two pictures together: the flow of
//! `q1 s1 + q2 s2 + q3 s3` at parameter `s` is the action with
//! `c = exp_imaginary(-s (q1 I + q2 J + q3 K))`, `d = 1`, and likewise
//! `q4 s4 + q5 s5 + q6 s6` gives `d = exp_imaginary(-s (q4 I + ...))`,
//! `c = 1`. The reference-orbit functions and the finite-difference tests
//! below pin this down.

use crate::error::{Error, Result};
use crate::geodesic::GeodesicParams;
use crate::group::GroupElement;
use crate::quaternion::Quaternion;
use crate::vector_field::{vars::*, PolyVectorField, Polynomial};
use std::fmt;
use std::str::FromStr;

/// Names of the thirteen symmetry generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorName {
    T1, T2, T3, T4, T5, T6, T7,
    S1, S2, S3, S4, S5, S6,
}

impl GeneratorName {
    pub const ALL: [GeneratorName; 13] = [
        Self::T1, Self::T2, Self::T3, Self::T4, Self::T5, Self::T6, Self::T7,
        Self::S1, Self::S2, Self::S3, Self::S4, Self::S5, Self::S6,
    ];

    /// The i-th translation generator, 1-based.
    pub fn translation(i: usize) -> Option<Self> {
        Self::ALL.get(i.wrapping_sub(1)).copied().filter(|_| (1..=7).contains(&i))
    }

    /// The i-th stabilizer generator, 1-based.
    pub fn stabilizer(i: usize) -> Option<Self> {
        (1..=6).contains(&i).then(|| Self::ALL[6 + i])
    }
}

impl fmt::Display for GeneratorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = Self::ALL.iter().position(|n| n == self).unwrap();
        if idx < 7 {
            write!(f, "t{}", idx + 1)
        } else {
            write!(f, "s{}", idx - 6)
        }
    }
}

impl FromStr for GeneratorName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        for name in Self::ALL {
            if name.to_string() == s {
                return Ok(name);
            }
        }
        Err(Error::UnknownGenerator(s.to_string()))
    }
}

/// The exact polynomial field of a named generator.
pub fn generator(name: GeneratorName) -> PolyVectorField {
    use GeneratorName::*;

    fn set(vf: &mut PolyVectorField, i: usize, terms: &[(i64, usize)]) {
        vf.components[i] = Polynomial::linear(terms);
    }
    fn unit(vf: &mut PolyVectorField, i: usize) {
        vf.components[i] = Polynomial::constant(1);
    }

    let mut vf = PolyVectorField::zero();
    match name {
        T1 => unit(&mut vf, A2),
        T2 => unit(&mut vf, A3),
        T3 => unit(&mut vf, A4),
        T4 => {
            unit(&mut vf, B1);
            set(&mut vf, A2, &[(-1, B2)]);
            set(&mut vf, A3, &[(-1, B3)]);
            set(&mut vf, A4, &[(-1, B4)]);
        }
        T5 => {
            unit(&mut vf, B2);
            set(&mut vf, A2, &[(1, B1)]);
            set(&mut vf, A3, &[(-1, B4)]);
            set(&mut vf, A4, &[(1, B3)]);
        }
        T6 => {
            unit(&mut vf, B3);
            set(&mut vf, A2, &[(1, B4)]);
            set(&mut vf, A3, &[(1, B1)]);
            set(&mut vf, A4, &[(-1, B2)]);
        }
        T7 => {
            unit(&mut vf, B4);
            set(&mut vf, A2, &[(-1, B3)]);
            set(&mut vf, A3, &[(1, B2)]);
            set(&mut vf, A4, &[(1, B1)]);
        }
        S1 => {
            set(&mut vf, A3, &[(2, A4)]);
            set(&mut vf, A4, &[(-2, A3)]);
            set(&mut vf, B1, &[(-1, B2)]);
            set(&mut vf, B2, &[(1, B1)]);
            set(&mut vf, B3, &[(1, B4)]);
            set(&mut vf, B4, &[(-1, B3)]);
        }
        S2 => {
            set(&mut vf, A2, &[(-2, A4)]);
            set(&mut vf, A4, &[(2, A2)]);
            set(&mut vf, B1, &[(-1, B3)]);
            set(&mut vf, B2, &[(-1, B4)]);
            set(&mut vf, B3, &[(1, B1)]);
            set(&mut vf, B4, &[(1, B2)]);
        }
        S3 => {
            set(&mut vf, A2, &[(2, A3)]);
            set(&mut vf, A3, &[(-2, A2)]);
            set(&mut vf, B1, &[(-1, B4)]);
            set(&mut vf, B2, &[(1, B3)]);
            set(&mut vf, B3, &[(-1, B2)]);
            set(&mut vf, B4, &[(1, B1)]);
        }
        S4 => {
            set(&mut vf, B1, &[(1, B2)]);
            set(&mut vf, B2, &[(-1, B1)]);
            set(&mut vf, B3, &[(1, B4)]);
            set(&mut vf, B4, &[(-1, B3)]);
        }
        S5 => {
            set(&mut vf, B1, &[(1, B3)]);
            set(&mut vf, B2, &[(-1, B4)]);
            set(&mut vf, B3, &[(-1, B1)]);
            set(&mut vf, B4, &[(1, B2)]);
        }
        S6 => {
            set(&mut vf, B1, &[(1, B4)]);
            set(&mut vf, B2, &[(1, B3)]);
            set(&mut vf, B3, &[(-1, B2)]);
            set(&mut vf, B4, &[(-1, B1)]);
        }
    }
    vf
}

/// Look up a generator by its printed name (`t1`..`t7`, `s1`..`s6`).
pub fn generator_by_name(name: &str) -> Result<PolyVectorField> {
    Ok(generator(name.parse()?))
}

/// A pair of unit quaternions acting on the group; `(c, d)` and `(-c, -d)`
/// act identically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationPair {
    c: Quaternion,
    d: Quaternion,
}

impl RotationPair {
    const UNIT_TOL: f64 = 1e-9;

    pub fn new(c: Quaternion, d: Quaternion) -> Result<Self> {
        if !c.is_unit(Self::UNIT_TOL) {
            return Err(Error::NotUnit(c.norm()));
        }
        if !d.is_unit(Self::UNIT_TOL) {
            return Err(Error::NotUnit(d.norm()));
        }
        Ok(Self { c, d })
    }

    pub fn identity() -> Self {
        Self { c: Quaternion::ONE, d: Quaternion::ONE }
    }

    /// Pure c-rotation (right-isoclinic on the horizontal block, double
    /// rotation on the vertical one).
    pub fn from_c(c: Quaternion) -> Result<Self> {
        Self::new(c, Quaternion::ONE)
    }

    /// Pure d-rotation (left-isoclinic on the horizontal block, identity
    /// on the vertical one).
    pub fn from_d(d: Quaternion) -> Result<Self> {
        Self::new(Quaternion::ONE, d)
    }

    pub fn c(&self) -> Quaternion {
        self.c
    }

    pub fn d(&self) -> Quaternion {
        self.d
    }
}

/// The action on points: `b |-> d b conj(c)`, `a |-> c a conj(c)`.
pub fn act_point(r: RotationPair, p: GroupElement) -> GroupElement {
    let b = r.d * p.b * r.c.conj();
    let a = (r.c * Quaternion::from_imag(p.a) * r.c.conj()).imag();
    GroupElement::new(b, a)
}

/// The action on geodesic data: rotates `u`, `v` by `x |-> d x conj(c)`
/// and the vertical constants by c-conjugation; `C` and `D` are exact
/// invariants and are carried over unchanged.
pub fn act_geodesic(r: RotationPair, gp: &GeodesicParams) -> Result<GeodesicParams> {
    if gp.is_degenerate() {
        return Err(Error::Degenerate);
    }
    let u = r.d * gp.u() * r.c.conj();
    let v = r.d * gp.v() * r.c.conj();
    let c567 = (r.c * Quaternion::from_imag(gp.c567()) * r.c.conj()).imag();
    Ok(GeodesicParams::from_parts(
        c567,
        gp.frequency(),
        gp.speed_sq(),
        u,
        v,
    ))
}

/// Rotate the parameters into the representative plane: a pure d-rotation
/// with `d = conj(u)/|u|` sending `u` to `sqrt(D) e1`; `v` becomes purely
/// imaginary of the same length, and all quotient data (the vertical curve
/// and `|b(t)|^2`) is untouched.
pub fn canonicalize(gp: &GeodesicParams) -> Result<(GeodesicParams, RotationPair)> {
    if gp.is_degenerate() || gp.speed_sq() == 0.0 {
        return Err(Error::Degenerate);
    }
    let d = gp.u().conj().scale(1.0 / gp.u().norm());
    let r = RotationPair::from_d(d)?;
    Ok((act_geodesic(r, gp)?, r))
}

/// Closed-form orbit of the reference geodesic under the one-parameter
/// flow of `q1 s1 + q2 s2 + q3 s3` at parameter `s`, evaluated at time t.
///
/// Agrees with [`act_geodesic`] applied with
/// `c = exp_imaginary(-s (q1 I + q2 J + q3 K))`, `d = 1`.
pub fn orbit_c_reference(q1: f64, q2: f64, q3: f64, s: f64, t: f64) -> Result<GroupElement> {
    let q_sq = q1 * q1 + q2 * q2 + q3 * q3;
    if q_sq == 0.0 {
        return Err(Error::ZeroAxis);
    }
    let q = q_sq.sqrt();
    let ts = t - t.sin();
    let (sin_t, cos_t) = t.sin_cos();
    let (sin_qs, cos_qs) = (q * s).sin_cos();
    let (sin_2qs, cos_2qs) = (2.0 * q * s).sin_cos();

    let a = [
        -ts * ((q3 * q3 + q2 * q2) * cos_2qs + q1 * q1) / q_sq,
        ts * (q1 * q2 * cos_2qs + q3 * q * sin_2qs - q1 * q2) / q_sq,
        -ts * (-q1 * q3 * cos_2qs + q2 * q * sin_2qs + q1 * q3) / q_sq,
    ];
    let b = Quaternion::new(
        (q1 * (cos_t - 1.0) * sin_qs + sin_t * cos_qs * q) / q,
        (-q * (cos_t - 1.0) * cos_qs + sin_qs * sin_t * q1) / q,
        sin_qs * (sin_t * q2 + q3 * cos_t - q3) / q,
        sin_qs * (sin_t * q3 - q2 * cos_t + q2) / q,
    );
    Ok(GroupElement::new(b, a))
}

/// Closed-form orbit of the reference geodesic under the flow of
/// `q4 s4 + q5 s5 + q6 s6` at parameter `s`; the vertical part is fixed.
///
/// Agrees with [`act_geodesic`] applied with
/// `d = exp_imaginary(-s (q4 I + q5 J + q6 K))`, `c = 1`.
pub fn orbit_d_reference(q4: f64, q5: f64, q6: f64, s: f64, t: f64) -> Result<GroupElement> {
    let q_sq = q4 * q4 + q5 * q5 + q6 * q6;
    if q_sq == 0.0 {
        return Err(Error::ZeroAxis);
    }
    let q = q_sq.sqrt();
    let (sin_t, cos_t) = t.sin_cos();
    let (sin_qs, cos_qs) = (q * s).sin_cos();

    let a = [t.sin() - t, 0.0, 0.0];
    let b = Quaternion::new(
        (-q4 * (cos_t - 1.0) * sin_qs + sin_t * cos_qs * q) / q,
        (-q * (cos_t - 1.0) * cos_qs - sin_qs * sin_t * q4) / q,
        -sin_qs * (sin_t * q5 - q6 * cos_t + q6) / q,
        -sin_qs * (q5 * cos_t + sin_t * q6 - q5) / q,
    );
    Ok(GroupElement::new(b, a))
}

/// The rotation pair realizing the flow of `sum q_i s_i` (c-axis part
/// `(q1,q2,q3)`, d-axis part `(q4,q5,q6)`) at parameter `s`.
pub fn flow_rotation(c_axis: [f64; 3], d_axis: [f64; 3], s: f64) -> Result<RotationPair> {
    let c = Quaternion::exp_imaginary(Quaternion::from_imag(c_axis).scale(-s))?;
    let d = Quaternion::exp_imaginary(Quaternion::from_imag(d_axis).scale(-s))?;
    RotationPair::new(c, d)
}
