//! Checkable forms of the trace and perturbation inequalities satisfied by
//! dual quaternion spectra.
//!
//! Every check evaluates both sides in dual arithmetic and returns an
//! [`InequalityReport`] with the slack `rhs - lhs`. A report never clamps:
//! a violated inequality comes back with `holds = false` for the caller to
//! surface. Comparisons use the tolerant total order below, which absorbs
//! decomposition rounding while keeping the scalar algebra exact.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::decomp::{dq_hermitian_eig, dq_svd};
use crate::dual::DualNumber;
use crate::dual_quaternion::DualQuaternion;
use crate::error::LinAlgError;
use crate::math;
use crate::matrix::{DQMatrix, DQVector};

/// Default relative tolerance on standard parts.
pub const DEFAULT_ETA_ST: f64 = 1e-10;
/// Default relative tolerance on infinitesimal parts.
pub const DEFAULT_ETA_IN: f64 = 1e-8;

/// Floating-point realization of the dual total order: standard parts are
/// compared with relative tolerance `eta_st`, and on a tolerant tie the
/// infinitesimal parts decide with tolerance `eta_in`.
pub fn compare_tolerant(p: DualNumber, q: DualNumber, eta_st: f64, eta_in: f64) -> Ordering {
    let scale_st = math::abs(p.st).max(math::abs(q.st)).max(1.0);
    let ds = p.st - q.st;
    if ds > eta_st * scale_st {
        return Ordering::Greater;
    }
    if ds < -eta_st * scale_st {
        return Ordering::Less;
    }
    let scale_in = math::abs(p.eps).max(math::abs(q.eps)).max(1.0);
    let de = p.eps - q.eps;
    if de > eta_in * scale_in {
        Ordering::Greater
    } else if de < -eta_in * scale_in {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

fn holds_under_tolerant_order(slack: DualNumber) -> bool {
    compare_tolerant(slack, DualNumber::ZERO, DEFAULT_ETA_ST, DEFAULT_ETA_IN) != Ordering::Less
}

/// Outcome of one inequality evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport {
    pub lhs: DualNumber,
    pub rhs: DualNumber,
    /// `rhs - lhs`.
    pub slack: DualNumber,
    /// `slack ≥ 0` under the tolerant total order.
    pub holds: bool,
    /// Whether the theorem's hypothesis was met; when false the sides are
    /// still recorded but `holds` carries no claim.
    pub condition_met: bool,
}

impl InequalityReport {
    fn new(lhs: DualNumber, rhs: DualNumber, condition_met: bool) -> Self {
        let slack = rhs - lhs;
        InequalityReport { lhs, rhs, slack, holds: holds_under_tolerant_order(slack), condition_met }
    }
}

/// Coerce a dual quaternion that should be a dual number, checking the
/// quaternion imaginary residue against `tol`.
pub fn as_dual_number(q: DualQuaternion, tol: f64) -> Result<DualNumber, LinAlgError> {
    if q.st.imag_norm() > tol || q.eps.imag_norm() > tol {
        return Err(LinAlgError::NotDualNumber);
    }
    Ok(DualNumber::new(q.st.re(), q.eps.re()))
}

fn residue_tol(a: &DQMatrix) -> f64 {
    let n = a.frobenius_norm();
    1e-10 * (1.0 + n.st + math::abs(n.eps))
}

fn sorted_desc(values: &[DualNumber]) -> Vec<DualNumber> {
    let mut v = values.to_vec();
    v.sort_by(|a, b| b.compare(*a));
    v
}

/// Weak majorization `z ≺ y`: nonascending prefix sums of `z` bounded by
/// those of `y`, with equal totals.
pub fn weak_majorization_check(z: &[DualNumber], y: &[DualNumber]) -> Result<bool, LinAlgError> {
    if z.len() != y.len() || z.is_empty() {
        return Err(LinAlgError::DimensionMismatch);
    }
    let zs = sorted_desc(z);
    let ys = sorted_desc(y);
    let mut zsum = DualNumber::ZERO;
    let mut ysum = DualNumber::ZERO;
    for i in 0..zs.len() {
        zsum += zs[i];
        ysum += ys[i];
        let cmp = compare_tolerant(zsum, ysum, DEFAULT_ETA_ST, DEFAULT_ETA_IN);
        if i + 1 < zs.len() {
            if cmp == Ordering::Greater {
                return Ok(false);
            }
        } else if cmp != Ordering::Equal {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ordered-sequence dominance: for nonascending `x`, `y` and `z ≺ y`,
/// `Σ xᵢzᵢ ≤ Σ xᵢyᵢ`.
pub fn ordered_product_dominance(
    x: &[DualNumber],
    y: &[DualNumber],
    z: &[DualNumber],
) -> Result<InequalityReport, LinAlgError> {
    if x.len() != y.len() || x.len() != z.len() || x.is_empty() {
        return Err(LinAlgError::DimensionMismatch);
    }
    let nonascending = |v: &[DualNumber]| {
        v.windows(2).all(|w| {
            compare_tolerant(w[0], w[1], DEFAULT_ETA_ST, DEFAULT_ETA_IN) != Ordering::Less
        })
    };
    if !nonascending(x) || !nonascending(y) || !weak_majorization_check(z, y)? {
        return Err(LinAlgError::PreconditionViolated);
    }
    let mut lhs = DualNumber::ZERO;
    let mut rhs = DualNumber::ZERO;
    for i in 0..x.len() {
        lhs += x[i] * z[i];
        rhs += x[i] * y[i];
    }
    Ok(InequalityReport::new(lhs, rhs, true))
}

fn require_hermitian(a: &DQMatrix) -> Result<(), LinAlgError> {
    if !a.is_hermitian(a.default_tol())? {
        return Err(LinAlgError::NotHermitian);
    }
    Ok(())
}

/// Partial-trace bound: the sum of the first `k` diagonal entries of a
/// Hermitian matrix is at most the sum of its `k` largest eigenvalues.
pub fn ky_fan_partial_trace_check(
    a: &DQMatrix,
    k: usize,
) -> Result<InequalityReport, LinAlgError> {
    require_hermitian(a)?;
    if k == 0 || k > a.rows() {
        return Err(LinAlgError::BadK);
    }
    let tol = residue_tol(a);
    let mut lhs = DualNumber::ZERO;
    for i in 0..k {
        lhs += as_dual_number(a[(i, i)], tol)?;
    }
    let eig = dq_hermitian_eig(a, None)?;
    let mut rhs = DualNumber::ZERO;
    for i in 0..k {
        rhs += eig.lambdas[i];
    }
    Ok(InequalityReport::new(lhs, rhs, true))
}

/// Per-index bound `λᵢ((A* + A)/2) ≤ σᵢ(A)` for square `A`.
pub fn hermitian_part_vs_singular(a: &DQMatrix) -> Result<Vec<InequalityReport>, LinAlgError> {
    if a.rows() != a.cols() {
        return Err(LinAlgError::NotSquare);
    }
    let h = a.conj_transpose().add(a)?.scale(0.5);
    let lambdas = dq_hermitian_eig(&h, None)?.lambdas;
    let sigmas = dq_svd(a, None)?.sigmas;
    Ok(lambdas
        .iter()
        .zip(sigmas.iter())
        .map(|(&lam, &sig)| InequalityReport::new(lam, sig, true))
        .collect())
}

/// von Neumann type trace bound:
/// `trace(A*B + B*A) ≤ 2 Σ σᵢ(A) σᵢ(B)`.
pub fn von_neumann_check(a: &DQMatrix, b: &DQMatrix) -> Result<InequalityReport, LinAlgError> {
    if a.dims() != b.dims() {
        return Err(LinAlgError::DimensionMismatch);
    }
    let cross = a
        .conj_transpose()
        .matmul(b)?
        .add(&b.conj_transpose().matmul(a)?)?;
    let tol = residue_tol(&cross);
    let lhs = as_dual_number(cross.trace()?, tol)?;
    let sa = dq_svd(a, None)?.sigmas;
    let sb = dq_svd(b, None)?.sigmas;
    let mut rhs = DualNumber::ZERO;
    for (x, y) in sa.iter().zip(sb.iter()) {
        rhs += *x * *y;
    }
    rhs = rhs * 2.0;
    Ok(InequalityReport::new(lhs, rhs, true))
}

/// Hermitian trace bound: `trace(AB + BA) ≤ 2 Σ λᵢ(A) λᵢ(B)` for
/// Hermitian `A`, `B`.
pub fn hermitian_trace_check(a: &DQMatrix, b: &DQMatrix) -> Result<InequalityReport, LinAlgError> {
    if a.dims() != b.dims() {
        return Err(LinAlgError::DimensionMismatch);
    }
    require_hermitian(a)?;
    require_hermitian(b)?;
    let cross = a.matmul(b)?.add(&b.matmul(a)?)?;
    let tol = residue_tol(&cross);
    let lhs = as_dual_number(cross.trace()?, tol)?;
    let la = dq_hermitian_eig(a, None)?.lambdas;
    let lb = dq_hermitian_eig(b, None)?.lambdas;
    let mut rhs = DualNumber::ZERO;
    for (x, y) in la.iter().zip(lb.iter()) {
        rhs += *x * *y;
    }
    rhs = rhs * 2.0;
    Ok(InequalityReport::new(lhs, rhs, true))
}

/// Hoffman-Wielandt type bound on singular values:
/// `‖σ(A) - σ(B)‖₂ ≤ ‖A - B‖_F`, claimed when `A - B` is appreciable.
///
/// When the difference is infinitesimal the report still records both
/// sides (the bound is then an open question for general matrices), with
/// `condition_met = false`.
pub fn hoffman_wielandt_singular(
    a: &DQMatrix,
    b: &DQMatrix,
) -> Result<InequalityReport, LinAlgError> {
    if a.dims() != b.dims() {
        return Err(LinAlgError::DimensionMismatch);
    }
    let diff = a.sub(b)?;
    let condition_met = diff.is_appreciable();
    let sa = dq_svd(a, None)?.sigmas;
    let sb = dq_svd(b, None)?.sigmas;
    let deltas: Vec<DualNumber> =
        sa.iter().zip(sb.iter()).map(|(x, y)| *x - *y).collect();
    let lhs = DQVector::from_dual_numbers(&deltas)?.norm2();
    let rhs = diff.frobenius_norm();
    Ok(InequalityReport::new(lhs, rhs, condition_met))
}

/// Hoffman-Wielandt type bound on eigenvalues of Hermitian matrices:
/// `‖λ(A) - λ(B)‖₂ ≤ ‖A - B‖_F`, with no appreciability condition.
pub fn hoffman_wielandt_hermitian(
    a: &DQMatrix,
    b: &DQMatrix,
) -> Result<InequalityReport, LinAlgError> {
    if a.dims() != b.dims() {
        return Err(LinAlgError::DimensionMismatch);
    }
    require_hermitian(a)?;
    require_hermitian(b)?;
    let la = dq_hermitian_eig(a, None)?.lambdas;
    let lb = dq_hermitian_eig(b, None)?.lambdas;
    let deltas: Vec<DualNumber> =
        la.iter().zip(lb.iter()).map(|(x, y)| *x - *y).collect();
    let lhs = DQVector::from_dual_numbers(&deltas)?.norm2();
    let rhs = a.sub(b)?.frobenius_norm();
    Ok(InequalityReport::new(lhs, rhs, true))
}
