//! The 7-dimensional group: elements, the 2-step nilpotent multiplication
//! law, the 12x12 real matrix embedding with exact polynomial exp/log
//! (the oracle for the group law), and the left-invariant frame with its
//! bracket table.
//!
//! An element is a pair `(b, a)` with horizontal block `b` (a quaternion)
//! and vertical block `a` (an imaginary quaternion, components a2, a3, a4).
//! The product is
//!
//! ```text
//! (b, a) . (d, c) = (b + d, a + c - Im(conj(b) d))
//! ```

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::vector_field::{vars, Polynomial, PolyVectorField};
use nalgebra::SMatrix;

/// The 12x12 real realization of the 3x3 quaternionic matrices.
pub type EmbeddingMatrix = SMatrix<f64, 12, 12>;

/// A point of the group, split as horizontal block `b` and vertical
/// block `a = (a2, a3, a4)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GroupElement {
    pub b: Quaternion,
    pub a: [f64; 3],
}

impl GroupElement {
    pub const fn new(b: Quaternion, a: [f64; 3]) -> Self {
        Self { b, a }
    }

    pub const fn identity() -> Self {
        Self::new(Quaternion::ZERO, [0.0; 3])
    }

    /// Build from coordinates in the serialization order `(a2, a3, a4, b1..b4)`.
    pub const fn from_coords(x: [f64; 7]) -> Self {
        Self::new(
            Quaternion::new(x[3], x[4], x[5], x[6]),
            [x[0], x[1], x[2]],
        )
    }

    /// Coordinates in the serialization order `(a2, a3, a4, b1..b4)`.
    pub const fn coords(self) -> [f64; 7] {
        [
            self.a[0], self.a[1], self.a[2],
            self.b.q1, self.b.q2, self.b.q3, self.b.q4,
        ]
    }

    /// Group multiplication `(b+d, a+c - Im(conj(b) d))`.
    pub fn multiply(self, other: Self) -> Self {
        let cross = (self.b.conj() * other.b).imag();
        Self::new(
            self.b + other.b,
            [
                self.a[0] + other.a[0] - cross[0],
                self.a[1] + other.a[1] - cross[1],
                self.a[2] + other.a[2] - cross[2],
            ],
        )
    }

    /// Two-sided inverse `(-b, -a)`; `Im(conj(b) b) = 0` makes this exact.
    pub fn inverse(self) -> Self {
        Self::new(-self.b, [-self.a[0], -self.a[1], -self.a[2]])
    }
}

fn set_block(m: &mut EmbeddingMatrix, row: usize, col: usize, q: Quaternion) {
    let rep = q.to_matrix();
    for i in 0..4 {
        for j in 0..4 {
            m[(4 * row + i, 4 * col + j)] = rep[(i, j)];
        }
    }
}

fn get_block_first_column(m: &EmbeddingMatrix, row: usize, col: usize) -> Quaternion {
    Quaternion::new(
        m[(4 * row, 4 * col)],
        m[(4 * row + 1, 4 * col)],
        m[(4 * row + 2, 4 * col)],
        m[(4 * row + 3, 4 * col)],
    )
}

/// The strictly block-lower-triangular embedding of an element:
/// blocks `(2,1) = b`, `(3,1) = Im(a)`, `(3,2) = -conj(b)`; its cube is zero.
pub fn embed(g: GroupElement) -> EmbeddingMatrix {
    let mut m = EmbeddingMatrix::zeros();
    set_block(&mut m, 1, 0, g.b);
    set_block(&mut m, 2, 0, Quaternion::from_imag(g.a));
    set_block(&mut m, 2, 1, -g.b.conj());
    m
}

/// Matrix exponential of the embedding; exact polynomial `I + X + X^2/2`
/// since `X^3 = 0`.
pub fn matrix_exp(g: GroupElement) -> EmbeddingMatrix {
    let x = embed(g);
    EmbeddingMatrix::identity() + x + x * x * 0.5
}

/// Inverse of `matrix_exp`: the exact polynomial `(M-I) - (M-I)^2/2` for
/// unipotent `M`, read back into group coordinates.
///
/// Rejects input that is not unipotent (detected by `(M-I)^3` away from zero).
pub fn matrix_log(m: &EmbeddingMatrix) -> Result<GroupElement> {
    let n = m - EmbeddingMatrix::identity();
    let n3 = n * n * n;
    let defect = n3.abs().max();
    if defect > 1e-10 {
        return Err(Error::NotUnipotent(defect));
    }
    let x = n - n * n * 0.5;
    let b = get_block_first_column(&x, 1, 0);
    let a = get_block_first_column(&x, 2, 0);
    Ok(GroupElement::new(b, a.imag()))
}

/// The left-invariant frame evaluated at a point, as seven tangent vectors
/// in the coordinate order `(a2, a3, a4, b1..b4)`.
///
/// At the origin the frame is the coordinate basis; the horizontal fields
/// e1..e4 pick up the linear-in-b vertical coefficients
///
/// ```text
/// e1 = d_b1 + b2 d_a2 + b3 d_a3 + b4 d_a4
/// e2 = d_b2 - b1 d_a2 + b4 d_a3 - b3 d_a4
/// e3 = d_b3 - b4 d_a2 - b1 d_a3 + b2 d_a4
/// e4 = d_b4 + b3 d_a2 - b2 d_a3 - b1 d_a4
/// ```
pub fn frame(p: GroupElement) -> [[f64; 7]; 7] {
    let [b1, b2, b3, b4] = p.b.to_array();
    [
        [b2, b3, b4, 1.0, 0.0, 0.0, 0.0],
        [-b1, b4, -b3, 0.0, 1.0, 0.0, 0.0],
        [-b4, -b1, b2, 0.0, 0.0, 1.0, 0.0],
        [b3, -b2, -b1, 0.0, 0.0, 0.0, 1.0],
        [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0],
    ]
}

/// The frame as exact polynomial vector fields (same layout as [`frame`]).
pub fn frame_fields() -> [PolyVectorField; 7] {
    use vars::*;
    let mut e: [PolyVectorField; 7] = std::array::from_fn(|_| PolyVectorField::zero());

    let verticals: [[(i64, usize); 3]; 4] = [
        [(1, B2), (1, B3), (1, B4)],
        [(-1, B1), (1, B4), (-1, B3)],
        [(-1, B4), (-1, B1), (1, B2)],
        [(1, B3), (-1, B2), (-1, B1)],
    ];
    for i in 0..4 {
        e[i].components[B1 + i] = Polynomial::constant(1);
        for (k, &(c, v)) in verticals[i].iter().enumerate() {
            e[i].components[k] = Polynomial::linear(&[(c, v)]);
        }
    }
    for i in 0..3 {
        e[4 + i].components[i] = Polynomial::constant(1);
    }
    e
}

/// One structure relation `[e_lhs, e_rhs] = coefficient * e_target`
/// (1-based frame indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BracketRelation {
    pub lhs: usize,
    pub rhs: usize,
    pub coefficient: i64,
    pub target: usize,
}

/// The six nonzero structure relations of the frame (2-step nilpotent):
/// `[e1,e2] = -2 e5`, `[e1,e3] = -2 e6`, `[e1,e4] = -2 e7`,
/// `[e2,e3] = 2 e7`, `[e2,e4] = -2 e6`, `[e3,e4] = 2 e5`.
pub const STRUCTURE_TABLE: [BracketRelation; 6] = [
    BracketRelation { lhs: 1, rhs: 2, coefficient: -2, target: 5 },
    BracketRelation { lhs: 1, rhs: 3, coefficient: -2, target: 6 },
    BracketRelation { lhs: 1, rhs: 4, coefficient: -2, target: 7 },
    BracketRelation { lhs: 2, rhs: 3, coefficient: 2, target: 7 },
    BracketRelation { lhs: 2, rhs: 4, coefficient: -2, target: 6 },
    BracketRelation { lhs: 3, rhs: 4, coefficient: 2, target: 5 },
];

/// Compute the nonzero frame brackets by exact polynomial arithmetic
/// (not hard-coded; compare against [`STRUCTURE_TABLE`] in tests).
///
/// Panics if a bracket fails to decompose with constant integer
/// coefficients, which cannot happen for the frame.
pub fn bracket_table() -> Vec<BracketRelation> {
    let fields = frame_fields();
    let mut out = Vec::new();
    for i in 0..7 {
        for j in (i + 1)..7 {
            let coeffs = crate::vector_field::frame_decompose(&fields[i].bracket(&fields[j]));
            for (k, c) in coeffs.iter().enumerate() {
                let c = c
                    .as_constant()
                    .expect("frame bracket has constant coefficients");
                if c != num_rational::BigRational::from_integer(0.into()) {
                    use num_traits::ToPrimitive;
                    out.push(BracketRelation {
                        lhs: i + 1,
                        rhs: j + 1,
                        coefficient: c.to_integer().to_i64().expect("small integer"),
                        target: k + 1,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_element(rng: &mut impl Rng) -> GroupElement {
        GroupElement::from_coords(std::array::from_fn(|_| rng.gen_range(-1.5..1.5)))
    }

    fn max_coord_diff(g: GroupElement, h: GroupElement) -> f64 {
        let (x, y) = (g.coords(), h.coords());
        (0..7).map(|i| (x[i] - y[i]).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn identity_and_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let g = random_element(&mut rng);
        assert_eq!(GroupElement::identity().multiply(g), g);
        assert_eq!(g.multiply(GroupElement::identity()), g);
        assert_eq!(GroupElement::identity().inverse(), GroupElement::identity());

        let h = GroupElement::new(Quaternion::new(1.0, 2.0, 0.0, 0.0), [3.0, 0.0, 0.0]);
        assert_eq!(
            h.inverse(),
            GroupElement::new(Quaternion::new(-1.0, -2.0, 0.0, 0.0), [-3.0, 0.0, 0.0])
        );

        for _ in 0..200 {
            let g = random_element(&mut rng);
            assert!(max_coord_diff(g.inverse().multiply(g), GroupElement::identity()) < 1e-14);
            assert!(max_coord_diff(g.multiply(g.inverse()), GroupElement::identity()) < 1e-14);
        }
    }

    #[test]
    fn product_of_basis_elements() {
        // (b = 1, a = 0) . (b = I, a = 0): cross term Im(conj(1) I) = (1,0,0)
        let g = GroupElement::new(Quaternion::ONE, [0.0; 3]);
        let h = GroupElement::new(Quaternion::I, [0.0; 3]);
        let p = g.multiply(h);
        assert_eq!(p.b, Quaternion::new(1.0, 1.0, 0.0, 0.0));
        assert_eq!(p.a, [-1.0, 0.0, 0.0]);
    }

    #[test]
    fn multiply_matches_matrix_exp_log_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..1000 {
            let g = random_element(&mut rng);
            let h = random_element(&mut rng);
            let via_matrices = matrix_log(&(matrix_exp(g) * matrix_exp(h))).unwrap();
            assert!(max_coord_diff(g.multiply(h), via_matrices) < 1e-13);
        }
    }

    #[test]
    fn associativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..1000 {
            let (g, h, k) = (
                random_element(&mut rng),
                random_element(&mut rng),
                random_element(&mut rng),
            );
            let lhs = g.multiply(h).multiply(k);
            let rhs = g.multiply(h.multiply(k));
            assert!(max_coord_diff(lhs, rhs) < 1e-13);
        }
    }

    #[test]
    fn matrix_exp_log_roundtrip() {
        assert_eq!(matrix_exp(GroupElement::identity()), EmbeddingMatrix::identity());
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..1000 {
            let g = random_element(&mut rng);
            let back = matrix_log(&matrix_exp(g)).unwrap();
            assert!(max_coord_diff(g, back) < 1e-13);
        }
    }

    #[test]
    fn matrix_log_rejects_non_unipotent() {
        let m = EmbeddingMatrix::identity() * 2.0;
        assert!(matches!(matrix_log(&m), Err(Error::NotUnipotent(_))));
    }

    #[test]
    fn embedding_cube_is_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..50 {
            let x = embed(random_element(&mut rng));
            assert!((x * x * x).abs().max() < 1e-14);
        }
    }

    #[test]
    fn frame_at_origin_is_coordinate_basis() {
        let f = frame(GroupElement::identity());
        // e1 -> d/db1 (index 3), zero vertical part
        assert_eq!(f[0], [0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
        assert_eq!(f[4], [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn frame_vertical_coefficients() {
        // at b = (0,1,0,0): e1 has a2-component b2 = 1
        let p = GroupElement::new(Quaternion::I, [0.0; 3]);
        let f = frame(p);
        assert_eq!(f[0][0], 1.0);
    }

    #[test]
    fn frame_agrees_with_exact_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let fields = frame_fields();
        for _ in 0..50 {
            let p = random_element(&mut rng);
            let numeric = frame(p);
            for i in 0..7 {
                let exact = fields[i].eval(&p.coords());
                for k in 0..7 {
                    assert!((numeric[i][k] - exact[k]).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn frame_is_left_invariant() {
        // d(L_g) at the origin applied to the coordinate basis, computed by
        // central differences through `multiply`, must reproduce frame(g).
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        let eps = 1e-5;
        for _ in 0..30 {
            let g = random_element(&mut rng);
            let expected = frame(g);
            for dir in 0..7 {
                let mut step = [0.0; 7];
                step[dir] = eps;
                let plus = g.multiply(GroupElement::from_coords(step)).coords();
                step[dir] = -eps;
                let minus = g.multiply(GroupElement::from_coords(step)).coords();
                for k in 0..7 {
                    let d = (plus[k] - minus[k]) / (2.0 * eps);
                    // frame index: e1..e4 are pushed basis b-directions, e5..e7 the a-directions
                    let i = if dir < 3 { 4 + dir } else { dir - 3 };
                    assert!(
                        (d - expected[i][k]).abs() < 1e-7,
                        "dL_g mismatch at dir {dir}, coord {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn computed_bracket_table_matches_hardcoded() {
        let computed = bracket_table();
        assert_eq!(computed.len(), STRUCTURE_TABLE.len());
        for rel in STRUCTURE_TABLE {
            assert!(computed.contains(&rel), "missing {rel:?}");
        }
    }

    #[test]
    fn horizontal_gram_matrix_is_identity_everywhere() {
        // the metric is the b-block Euclidean form, and e1..e4 have
        // coordinate b-parts, so the Gram matrix is identity at every point
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..50 {
            let f = frame(random_element(&mut rng));
            for i in 0..4 {
                for j in 0..4 {
                    let gram: f64 = (3..7).map(|k| f[i][k] * f[j][k]).sum();
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert_eq!(gram, expected);
                }
            }
        }
    }
}
