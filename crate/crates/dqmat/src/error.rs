//! Error types shared across the crate.

use core::fmt;

/// Errors from dual-number scalar operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualError {
    /// No dual number squares to a nonzero infinitesimal, so its square root
    /// does not exist.
    NotRepresentable,
    /// Square root of a negative dual number.
    NegativeArgument,
    /// Inverse of a non-appreciable (infinitesimal) value.
    Singular,
}

impl fmt::Display for DualError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualError::NotRepresentable => {
                write!(f, "square root of a nonzero infinitesimal does not exist")
            }
            DualError::NegativeArgument => write!(f, "square root of a negative dual number"),
            DualError::Singular => write!(f, "inverse of a non-appreciable value"),
        }
    }
}

impl core::error::Error for DualError {}

/// Errors from vector, matrix, and decomposition operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinAlgError {
    /// Operand shapes are incompatible.
    DimensionMismatch,
    /// The operation requires a square matrix.
    NotSquare,
    /// The matrix is not Hermitian within tolerance.
    NotHermitian,
    /// An iterative solver exceeded its sweep cap.
    ConvergenceFailure,
    /// A spectral gap between distinct clusters is too small for the
    /// requested cluster tolerance; retry with a larger one.
    IllConditionedGap,
    /// Index `k` is outside `1..=m`.
    BadK,
    /// A caller-supplied sequence violates a stated precondition.
    PreconditionViolated,
    /// Vectors and matrices must have at least one entry.
    EmptyInput,
    /// Columns are not right linearly independent.
    RankDeficient,
    /// A quantity expected to be a dual number carries a quaternion
    /// imaginary residue above tolerance.
    NotDualNumber,
}

impl fmt::Display for LinAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinAlgError::DimensionMismatch => write!(f, "operand dimensions do not match"),
            LinAlgError::NotSquare => write!(f, "matrix is not square"),
            LinAlgError::NotHermitian => write!(f, "matrix is not Hermitian within tolerance"),
            LinAlgError::ConvergenceFailure => write!(f, "iteration did not converge"),
            LinAlgError::IllConditionedGap => {
                write!(f, "spectral gap below safe threshold; increase cluster tolerance")
            }
            LinAlgError::BadK => write!(f, "index k out of range"),
            LinAlgError::PreconditionViolated => write!(f, "input violates a precondition"),
            LinAlgError::EmptyInput => write!(f, "empty input"),
            LinAlgError::RankDeficient => write!(f, "columns are not right linearly independent"),
            LinAlgError::NotDualNumber => {
                write!(f, "quaternion imaginary residue above tolerance")
            }
        }
    }
}

impl core::error::Error for LinAlgError {}
