use thiserror::Error;

/// Errors produced by quantum-number validation, enumeration, and the
/// numerical oracles. Display output is a single line starting with the
/// rule name so callers can report it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotHalfInteger: 2m = {m2} is even; m must be a half-odd-integer")]
    NotHalfInteger { m2: i64 },

    #[error("OddLambda: lambda = {lambda} is odd and admits no terminating series")]
    OddLambda { lambda: u32 },

    #[error("MagneticOutOfRange: |2m| = {m2_abs} exceeds lambda - 1 = {max2}")]
    MagneticOutOfRange { m2_abs: i64, max2: i64 },

    #[error("EvenLambda: lambda = {lambda} terminates; use the terminating recursion")]
    EvenLambda { lambda: u32 },

    #[error("IntegerEll: 2l = {ell2} is even; integer l has no terminating solutions")]
    IntegerEll { ell2: i64 },

    #[error("BadBound: lambda_max = {lambda_max} is below the smallest block (2)")]
    BadBound { lambda_max: u32 },

    #[error("CutoffTooSmall: nmax = {nmax} is below the minimum basis cutoff {min}")]
    CutoffTooSmall { nmax: usize, min: usize },

    #[error("DegeneracyResolutionFailed: {detail}")]
    DegeneracyResolutionFailed { detail: String },

    #[error("GridTooCoarse: {detail}")]
    GridTooCoarse { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
