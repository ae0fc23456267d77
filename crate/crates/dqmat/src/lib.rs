//! Dual quaternion linear algebra.
//!
//! A dual quaternion is a pair of quaternions `q = q_st + q_in ε` where the
//! infinitesimal unit satisfies `ε² = 0`. This crate implements the scalar
//! rings (dual numbers, quaternions, dual quaternions), dense vectors and
//! matrices over them, Hermitian eigendecomposition and singular value
//! decomposition of dual quaternion matrices, and checkable forms of the
//! trace and perturbation inequalities those decompositions satisfy
//! (von Neumann and Hoffman-Wielandt type bounds).
//!
//! Eigenvalues and singular values of dual quaternion matrices are dual
//! numbers, ordered lexicographically: standard part first, infinitesimal
//! part as tie-breaker. All decompositions report their factors with a
//! deterministic gauge so repeated runs produce identical output.
//!
//! The crate is `no_std`-compatible (`alloc` is required); enable the `libm`
//! feature instead of `std` on targets without a float runtime.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("dqmat requires either the `std` or the `libm` feature");

extern crate alloc;

mod math;

pub mod complex;
pub mod decomp;
pub mod dual;
pub mod dual_quaternion;
pub mod error;
pub mod inequalities;
pub mod matrix;
pub mod qmatrix;
pub mod quaternion;
pub mod random;
pub mod solvers;

pub use complex::{complex_adjoint, ComplexAdjoint, ComplexMatrix};
pub use decomp::{
    dq_hermitian_eig, dq_svd, eigenvalues, singular_values, spectral_norm, DualSvd, HermEig,
};
pub use dual::DualNumber;
pub use dual_quaternion::DualQuaternion;
pub use error::{DualError, LinAlgError};
pub use inequalities::{compare_tolerant, InequalityReport};
pub use matrix::{DQMatrix, DQVector};
pub use qmatrix::QMatrix;
pub use quaternion::Quaternion;
