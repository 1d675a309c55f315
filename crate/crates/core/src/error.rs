//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `exp_imaginary` received a quaternion with a nonzero real part.
    #[error("quaternion is not purely imaginary (real part {0:e})")]
    NonzeroRealPart(f64),

    /// `matrix_log` received a matrix that is not unipotent.
    #[error("matrix is not unipotent (|(M-I)^3| = {0:e})")]
    NotUnipotent(f64),

    /// Operation requires C > 0 but the parameters are degenerate
    /// (vertical constants all zero; straight-line geodesic).
    #[error("degenerate geodesic parameters: vertical constants vanish")]
    Degenerate,

    /// A rotation axis was zero.
    #[error("rotation axis must be nonzero")]
    ZeroAxis,

    /// A quaternion expected to be unit-norm was not.
    #[error("quaternion must have unit norm (|q| = {0})")]
    NotUnit(f64),

    /// Unknown symmetry generator name.
    #[error("unknown generator `{0}` (expected t1..t7 or s1..s6)")]
    UnknownGenerator(String),

    /// Catch-all for invalid numeric arguments (negative times, zero steps, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Malformed CSV input.
    #[error("csv parse error: {0}")]
    CsvParse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
