//! Exact algebra of polynomial-coefficient vector fields on R^7.
//!
//! Coordinates are ordered `(a2, a3, a4, b1, b2, b3, b4)` everywhere in the
//! crate. Coefficients are exact rationals, so "identically zero" in the
//! bracket and symmetry tests is a literal statement, not a tolerance;
//! floats appear only at evaluation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coordinate indices in the fixed variable order.
pub mod vars {
    pub const A2: usize = 0;
    pub const A3: usize = 1;
    pub const A4: usize = 2;
    pub const B1: usize = 3;
    pub const B2: usize = 4;
    pub const B3: usize = 5;
    pub const B4: usize = 6;
}

pub const VAR_NAMES: [&str; 7] = ["a2", "a3", "a4", "b1", "b2", "b3", "b4"];

type Exponents = [u8; 7];

/// Sparse polynomial in the seven coordinates with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, BigRational>,
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        if c != 0 {
            p.terms.insert([0; 7], rational(c));
        }
        p
    }

    /// The coordinate function `x_i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0u8; 7];
        e[i] = 1;
        let mut p = Self::zero();
        p.terms.insert(e, rational(1));
        p
    }

    /// Linear combination of coordinates, `sum c * x_i`.
    pub fn linear(terms: &[(i64, usize)]) -> Self {
        let mut p = Self::zero();
        for &(c, i) in terms {
            p = &p + &(&Self::var(i) * &Self::constant(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    fn insert(&mut self, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Partial derivative with respect to coordinate `i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[i] -= 1;
            out.insert(e2, c * rational(e[i] as i64));
        }
        out
    }

    /// Evaluate at a point (coefficients converted to f64 here and only here).
    pub fn eval(&self, x: &[f64; 7]) -> f64 {
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut m = c.to_f64().expect("rational fits in f64");
            for i in 0..7 {
                for _ in 0..e[i] {
                    m *= x[i];
                }
            }
            acc += m;
        }
        acc
    }

    /// If the polynomial is a constant, return it as an exact rational.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0u8; 7]).cloned(),
            _ => None,
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert(*e, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert(*e, -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            out.terms.insert(*e, -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let mut e = *e1;
                for i in 0..7 {
                    e[i] += e2[i];
                }
                out.insert(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || e.iter().all(|&x| x == 0) {
                factors.push(mag.to_string());
            }
            for i in 0..7 {
                match e[i] {
                    0 => {}
                    1 => factors.push(VAR_NAMES[i].to_string()),
                    k => factors.push(format!("{}^{}", VAR_NAMES[i], k)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

// `is_one` helper for BigRational magnitudes in Display.
trait IsOne {
    fn is_one(&self) -> bool;
}
impl IsOne for BigRational {
    fn is_one(&self) -> bool {
        *self == rational(1)
    }
}

/// A vector field on R^7 with polynomial coefficients, stored in the
/// coordinate order `(a2, a3, a4, b1, b2, b3, b4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVectorField {
    pub components: [Polynomial; 7],
}

impl PolyVectorField {
    pub fn zero() -> Self {
        Self {
            components: std::array::from_fn(|_| Polynomial::zero()),
        }
    }

    pub fn new(components: [Polynomial; 7]) -> Self {
        Self { components }
    }

    /// The coordinate field d/dx_i.
    pub fn coordinate(i: usize) -> Self {
        let mut vf = Self::zero();
        vf.components[i] = Polynomial::constant(1);
        vf
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn eval(&self, x: &[f64; 7]) -> [f64; 7] {
        std::array::from_fn(|i| self.components[i].eval(x))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        let k = Polynomial::constant(c);
        Self::new(std::array::from_fn(|i| &self.components[i] * &k))
    }

    /// Exact Lie bracket `[v, w] = v(w) - w(v)`.
    pub fn bracket(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..7 {
            let mut comp = Polynomial::zero();
            for j in 0..7 {
                comp = &comp + &(&self.components[j] * &other.components[i].partial(j));
                comp = &comp - &(&other.components[j] * &self.components[i].partial(j));
            }
            out.components[i] = comp;
        }
        out
    }
}

impl Add for &PolyVectorField {
    type Output = PolyVectorField;
    fn add(self, o: &PolyVectorField) -> PolyVectorField {
        PolyVectorField::new(std::array::from_fn(|i| &self.components[i] + &o.components[i]))
    }
}

impl Sub for &PolyVectorField {
    type Output = PolyVectorField;
    fn sub(self, o: &PolyVectorField) -> PolyVectorField {
        PolyVectorField::new(std::array::from_fn(|i| &self.components[i] - &o.components[i]))
    }
}

impl fmt::Display for PolyVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (component, name) in self.components.iter().zip(VAR_NAMES) {
            if component.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({component})*d_{name}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Write `vf = sum c_i e_i` in the left-invariant frame; returns the seven
/// coefficient polynomials. The horizontal coefficients are the d/db
/// components; the vertical ones follow by subtracting the frame's
/// b-linear vertical parts.
pub fn frame_decompose(vf: &PolyVectorField) -> [Polynomial; 7] {
    let frame = crate::group::frame_fields();
    let horizontal: [Polynomial; 4] = std::array::from_fn(|i| vf.components[3 + i].clone());

    let mut rest = vf.clone();
    for (i, c) in horizontal.iter().enumerate() {
        for k in 0..7 {
            rest.components[k] = &rest.components[k] - &(c * &frame[i].components[k]);
        }
    }
    // by construction the remaining b-components vanish identically
    for k in 3..7 {
        debug_assert!(rest.components[k].is_zero());
    }

    [
        horizontal[0].clone(),
        horizontal[1].clone(),
        horizontal[2].clone(),
        horizontal[3].clone(),
        rest.components[0].clone(),
        rest.components[1].clone(),
        rest.components[2].clone(),
    ]
}

/// Outcome of the infinitesimal-symmetry test for a vector field `v`:
/// whether `[v, e_i]` stays horizontal for i = 1..4, and whether the
/// horizontal coefficient matrix is antisymmetric (which is the Lie
/// derivative of the metric vanishing, since the frame is orthonormal).
#[derive(Debug, Clone)]
pub struct SymmetryReport {
    pub distribution_preserved: bool,
    pub metric_preserved: bool,
    /// Vertical coefficients of `[v, e_i]`, i = 1..4 (12 polynomials);
    /// all must vanish identically for the distribution to be preserved.
    pub vertical_residuals: Vec<Polynomial>,
    /// Entries of `M + M^T` for the horizontal coefficient matrix
    /// `M[i][j] = <[v, e_i], e_j>` (upper triangle, 10 polynomials).
    pub metric_residuals: Vec<Polynomial>,
}

impl SymmetryReport {
    pub fn residuals_are_zero(&self) -> bool {
        self.vertical_residuals.iter().all(Polynomial::is_zero)
            && self.metric_residuals.iter().all(Polynomial::is_zero)
    }
}

/// Test `L_v g = 0` and `L_v H subset H` by exact polynomial arithmetic.
#[allow(clippy::needless_range_loop)] // triangular double index into m
pub fn is_infinitesimal_symmetry(vf: &PolyVectorField) -> SymmetryReport {
    let frame = crate::group::frame_fields();
    let mut vertical_residuals = Vec::with_capacity(12);
    let mut m: Vec<[Polynomial; 4]> = Vec::with_capacity(4);

    for e in frame.iter().take(4) {
        let coeffs = frame_decompose(&vf.bracket(e));
        vertical_residuals.extend_from_slice(&coeffs[4..7]);
        m.push([
            coeffs[0].clone(),
            coeffs[1].clone(),
            coeffs[2].clone(),
            coeffs[3].clone(),
        ]);
    }

    let distribution_preserved = vertical_residuals.iter().all(Polynomial::is_zero);

    let mut metric_residuals = Vec::with_capacity(10);
    for i in 0..4 {
        for j in i..4 {
            metric_residuals.push(&m[i][j] + &m[j][i]);
        }
    }
    let metric_preserved =
        distribution_preserved && metric_residuals.iter().all(Polynomial::is_zero);

    SymmetryReport {
        distribution_preserved,
        metric_preserved,
        vertical_residuals,
        metric_residuals,
    }
}

#[cfg(test)]
mod tests {
    use super::vars::*;
    use super::*;
    use crate::group::frame_fields;
    use crate::symmetry::{generator, GeneratorName};
    use proptest::prelude::*;

    #[test]
    fn eval_examples() {
        // constant field d/da2
        let da2 = PolyVectorField::coordinate(A2);
        assert_eq!(da2.eval(&[0.3, -1.0, 2.0, 0.1, 0.2, 0.3, 0.4]), [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

        // e1 at b = 0 is purely d/db1
        let frame = frame_fields();
        assert_eq!(frame[0].eval(&[5.0, 6.0, 7.0, 0.0, 0.0, 0.0, 0.0]), [0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]);

        // s4 at b = (1,0,0,0) points along -d/db2
        let s4 = generator(GeneratorName::S4);
        assert_eq!(s4.eval(&[0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]), [0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0]);
    }

    #[test]
    fn frame_brackets_match_structure_table() {
        let frame = frame_fields();
        // [e1, e2] = -2 e5
        let b12 = frame[0].bracket(&frame[1]);
        assert_eq!(b12, frame[4].scale_int(-2));
        // [e2, e3] = 2 e7
        let b23 = frame[1].bracket(&frame[2]);
        assert_eq!(b23, frame[6].scale_int(2));
        // verticals are central
        for i in 0..7 {
            for j in 4..7 {
                assert!(frame[i].bracket(&frame[j]).is_zero());
            }
        }
    }

    #[test]
    fn stabilizer_bracket_relations() {
        let s: Vec<_> = [
            GeneratorName::S1,
            GeneratorName::S2,
            GeneratorName::S3,
            GeneratorName::S4,
            GeneratorName::S5,
            GeneratorName::S6,
        ]
        .iter()
        .map(|&n| generator(n))
        .collect();

        // two sp(1) triples
        assert_eq!(s[0].bracket(&s[1]), s[2].scale_int(2));
        assert_eq!(s[0].bracket(&s[2]), s[1].scale_int(-2));
        assert_eq!(s[1].bracket(&s[2]), s[0].scale_int(2));
        assert_eq!(s[3].bracket(&s[4]), s[5].scale_int(2));
        assert_eq!(s[3].bracket(&s[5]), s[4].scale_int(-2));
        assert_eq!(s[4].bracket(&s[5]), s[3].scale_int(2));
        // the triples commute with each other
        for i in 0..3 {
            for j in 3..6 {
                assert!(s[i].bracket(&s[j]).is_zero(), "[s{}, s{}] != 0", i + 1, j + 1);
            }
        }
    }

    #[test]
    fn translations_commute_with_frame() {
        let frame = frame_fields();
        for i in 1..=7 {
            let t = generator(GeneratorName::translation(i).unwrap());
            for e in &frame {
                assert!(t.bracket(e).is_zero());
            }
        }
    }

    #[test]
    fn frame_decompose_examples() {
        let frame = frame_fields();

        // e3 decomposes trivially
        let c = frame_decompose(&frame[2]);
        for (i, ci) in c.iter().enumerate() {
            if i == 2 {
                assert_eq!(*ci, Polynomial::constant(1));
            } else {
                assert!(ci.is_zero());
            }
        }

        // d/da2 = e5
        let c = frame_decompose(&PolyVectorField::coordinate(A2));
        assert_eq!(c[4], Polynomial::constant(1));
        assert!(c[0].is_zero() && c[5].is_zero() && c[6].is_zero());

        // t4 = e1 - 2 b2 e5 - 2 b3 e6 - 2 b4 e7
        let c = frame_decompose(&generator(GeneratorName::T4));
        assert_eq!(c[0], Polynomial::constant(1));
        assert_eq!(c[4], Polynomial::linear(&[(-2, B2)]));
        assert_eq!(c[5], Polynomial::linear(&[(-2, B3)]));
        assert_eq!(c[6], Polynomial::linear(&[(-2, B4)]));
    }

    #[test]
    fn frame_decompose_reconstructs() {
        // sum c_i e_i must reproduce the field identically as polynomials
        let frame = frame_fields();
        for name in GeneratorName::ALL {
            let vf = generator(name);
            let c = frame_decompose(&vf);
            let mut rebuilt = PolyVectorField::zero();
            for i in 0..7 {
                for k in 0..7 {
                    rebuilt.components[k] =
                        &rebuilt.components[k] + &(&c[i] * &frame[i].components[k]);
                }
            }
            assert_eq!(rebuilt, vf, "reconstruction failed for {name}");
        }
    }

    #[test]
    fn all_thirteen_generators_are_symmetries() {
        for name in GeneratorName::ALL {
            let report = is_infinitesimal_symmetry(&generator(name));
            assert!(report.distribution_preserved, "{name}: distribution");
            assert!(report.metric_preserved, "{name}: metric");
            assert!(report.residuals_are_zero(), "{name}: residuals");
        }
    }

    #[test]
    fn grading_like_field_preserves_distribution_but_not_metric() {
        // b1 d/db1 + ... + b4 d/db4 + 2(a2 d/da2 + a3 d/da3 + a4 d/da4)
        let mut vf = PolyVectorField::zero();
        for (i, v) in [(0, A2), (1, A3), (2, A4)] {
            vf.components[i] = Polynomial::linear(&[(2, v)]);
        }
        for (i, v) in [(3, B1), (4, B2), (5, B3), (6, B4)] {
            vf.components[i] = Polynomial::linear(&[(1, v)]);
        }
        let report = is_infinitesimal_symmetry(&vf);
        assert!(report.distribution_preserved);
        assert!(!report.metric_preserved);
    }

    #[test]
    fn bare_coordinate_field_breaks_distribution() {
        let report = is_infinitesimal_symmetry(&PolyVectorField::coordinate(B1));
        assert!(!report.distribution_preserved);
        // the offending residual is the -1 vertical coefficient from [d/db1, e2]
        assert!(report.vertical_residuals.iter().any(|p| !p.is_zero()));
    }

    #[test]
    fn partial_and_eval_agree() {
        // d/db2 of (b2^2 a3) is 2 b2 a3
        let p = &(&Polynomial::var(B2) * &Polynomial::var(B2)) * &Polynomial::var(A3);
        let d = p.partial(B2);
        let x = [0.0, 3.0, 0.0, 0.0, 0.5, 0.0, 0.0];
        assert_eq!(d.eval(&x), 2.0 * 0.5 * 3.0);
    }

    fn small_field(coeffs: [[i64; 3]; 7]) -> PolyVectorField {
        // each component: c0 + c1*b1 + c2*a2*b2 (degree <= 2 shapes)
        PolyVectorField::new(std::array::from_fn(|i| {
            let [c0, c1, c2] = coeffs[i];
            let mut p = Polynomial::constant(c0);
            p = &p + &Polynomial::linear(&[(c1, B1)]);
            p = &p + &(&(&Polynomial::var(A2) * &Polynomial::var(B2)) * &Polynomial::constant(c2));
            p
        }))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn bracket_is_antisymmetric(
            a in proptest::array::uniform7(proptest::array::uniform3(-3i64..4)),
            b in proptest::array::uniform7(proptest::array::uniform3(-3i64..4)),
        ) {
            let v = small_field(a);
            let w = small_field(b);
            let lhs = v.bracket(&w);
            let rhs = w.bracket(&v);
            prop_assert!((&lhs + &rhs).is_zero());
        }

        #[test]
        fn bracket_satisfies_jacobi(
            a in proptest::array::uniform7(proptest::array::uniform3(-2i64..3)),
            b in proptest::array::uniform7(proptest::array::uniform3(-2i64..3)),
            c in proptest::array::uniform7(proptest::array::uniform3(-2i64..3)),
        ) {
            let u = small_field(a);
            let v = small_field(b);
            let w = small_field(c);
            let total = &(&u.bracket(&v.bracket(&w)) + &v.bracket(&w.bracket(&u)))
                + &w.bracket(&u.bracket(&v));
            prop_assert!(total.is_zero());
        }
    }
}
