//! The quaternionic Heisenberg group of dimension 7 and its left-invariant
//! sub-Riemannian structure: group law with a matrix exp/log oracle, exact
//! bracket algebra of polynomial vector fields, the thirteen-dimensional
//! symmetry algebra with its finite rotation action, closed-form normal
//! geodesics, and the Maxwell / first-conjugate / cut-time analysis, all
//! cross-validated against an independent RK4 integration of the extremal
//! system.
//!
//! Coordinates are `(a2, a3, a4, b1, b2, b3, b4)`: a rank-4 horizontal
//! block `b` identified with a quaternion and a 3-dimensional vertical
//! block `a` identified with an imaginary quaternion. The horizontal
//! metric makes the left-invariant fields e1..e4 orthonormal.

pub mod cut_locus;
pub mod error;
pub mod geodesic;
pub mod group;
pub mod integrator;
pub mod io;
pub mod quaternion;
pub mod symmetry;
pub mod vector_field;
pub mod verify;

pub use error::{Error, Result};
pub use geodesic::{GeodesicParams, QuotientPoint};
pub use group::GroupElement;
pub use quaternion::Quaternion;
pub use symmetry::RotationPair;
