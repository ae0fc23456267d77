//! Numerical kernels for plain quaternion matrices: Hermitian
//! eigendecomposition and singular value decomposition.
//!
//! The eigensolver works through the complex adjoint: eigenvalues of the
//! adjoint come in pairs, one representative per pair is kept, and paired
//! complex eigenvectors are folded back to quaternion columns. The SVD is
//! one-sided Jacobi applied directly to quaternion columns, which keeps
//! small singular values at high relative accuracy instead of squaring the
//! condition number through a Gram matrix.
//!
//! Both solvers gauge-fix their output columns: each column is multiplied
//! on the right by the unit quaternion that makes its largest component
//! real and nonnegative (lowest index on ties), so repeated runs produce
//! identical factors.

use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{complex_adjoint, complex_hermitian_eig};
use crate::error::LinAlgError;
use crate::math;
use crate::qmatrix::QMatrix;
use crate::quaternion::Quaternion;

const SVD_SWEEP_CAP: usize = 64;

/// Result of [`quat_hermitian_eig`]: `H = U diag(λ) U*` with unitary `U`
/// and real eigenvalues in nonascending order.
#[derive(Debug, Clone)]
pub struct QuatEig {
    pub u: QMatrix,
    pub lambdas: Vec<f64>,
}

/// Result of [`quat_svd`]: `A = U Σ V*` with unitary `U` (m×m) and `V`
/// (n×n) and nonnegative singular values in nonascending order.
#[derive(Debug, Clone)]
pub struct QuatSvd {
    pub u: QMatrix,
    pub sigmas: Vec<f64>,
    pub v: QMatrix,
}

// ── quaternion column helpers ────────────────────────────────────────

fn qvec_inner(u: &[Quaternion], v: &[Quaternion]) -> Quaternion {
    // ⟨u, v⟩ = Σ v̄ᵢ uᵢ
    let mut acc = Quaternion::ZERO;
    for (a, b) in u.iter().zip(v.iter()) {
        acc += b.conj() * *a;
    }
    acc
}

fn qvec_norm(u: &[Quaternion]) -> f64 {
    math::sqrt(u.iter().map(|q| q.norm_sq()).sum())
}

fn qvec_scale_right(u: &[Quaternion], q: Quaternion) -> Vec<Quaternion> {
    u.iter().map(|a| *a * q).collect()
}

fn qvec_axpy(w: &mut [Quaternion], u: &[Quaternion], coeff: Quaternion) {
    // w -= u · coeff
    for (wi, ui) in w.iter_mut().zip(u.iter()) {
        *wi -= *ui * coeff;
    }
}

/// Unit right multiplier that makes the largest component of `col` real and
/// nonnegative; identity for a zero column.
fn gauge_multiplier(col: &[Quaternion]) -> Quaternion {
    let mut best = 0;
    for i in 1..col.len() {
        if col[i].norm_sq() > col[best].norm_sq() {
            best = i;
        }
    }
    let q = col[best];
    let n = q.norm();
    if n == 0.0 {
        Quaternion::ONE
    } else {
        q.conj().scale(1.0 / n)
    }
}

fn gauge_fix_column(m: &mut QMatrix, j: usize) -> Quaternion {
    let g = gauge_multiplier(&m.column(j));
    let col = qvec_scale_right(&m.column(j), g);
    m.set_column(j, &col);
    g
}

/// Greedy modified Gram-Schmidt selection of `want` orthonormal vectors
/// from `candidates`, which are assumed to span a `want`-dimensional right
/// subspace. A strict pass keeps well-conditioned picks; a loose second
/// pass catches directions the candidates only carry weakly.
fn extract_orthonormal(
    candidates: &[Vec<Quaternion>],
    want: usize,
) -> Result<Vec<Vec<Quaternion>>, LinAlgError> {
    let mut picked: Vec<Vec<Quaternion>> = Vec::with_capacity(want);
    for thresh in [0.3, 1e-3] {
        for cand in candidates {
            if picked.len() == want {
                break;
            }
            let mut w = cand.clone();
            for u in &picked {
                let coeff = qvec_inner(&w, u);
                qvec_axpy(&mut w, u, coeff);
            }
            let n = qvec_norm(&w);
            if n > thresh {
                picked.push(qvec_scale_right(&w, Quaternion::from_real(1.0 / n)));
            }
        }
        if picked.len() == want {
            return Ok(picked);
        }
    }
    Err(LinAlgError::ConvergenceFailure)
}

/// One polishing Gram-Schmidt pass over all columns.
fn reorthonormalize(u: &mut QMatrix) -> Result<(), LinAlgError> {
    let n = u.cols();
    let mut cols: Vec<Vec<Quaternion>> = (0..n).map(|j| u.column(j)).collect();
    for j in 0..n {
        let (done, rest) = cols.split_at_mut(j);
        let w = &mut rest[0];
        for prev in done.iter() {
            let coeff = qvec_inner(w, prev);
            qvec_axpy(w, prev, coeff);
        }
        let norm = qvec_norm(w);
        if norm <= 0.5 {
            return Err(LinAlgError::ConvergenceFailure);
        }
        let inv = Quaternion::from_real(1.0 / norm);
        *w = qvec_scale_right(w, inv);
    }
    for (j, c) in cols.iter().enumerate() {
        u.set_column(j, c);
    }
    Ok(())
}

// ── Hermitian eigendecomposition ─────────────────────────────────────

/// Eigendecomposition of a Hermitian quaternion matrix.
///
/// Eigenvalues of the complex adjoint must occur in pairs; the solver
/// verifies the pairing within `1e-9·(1 + ‖H‖_F)` and keeps one value per
/// pair. Complex eigenvectors `[x; y]` fold back to quaternion columns
/// `x - conj(y) j`, which are re-orthonormalized per eigenvalue cluster.
pub fn quat_hermitian_eig(h: &QMatrix) -> Result<QuatEig, LinAlgError> {
    if h.rows() != h.cols() {
        return Err(LinAlgError::NotSquare);
    }
    let m = h.rows();
    let scale = h.frobenius_norm();
    if !h.is_hermitian(1e-10 * scale.max(1.0))? {
        return Err(LinAlgError::NotHermitian);
    }
    let hs = h.hermitian_part()?;

    let chi = complex_adjoint(&hs);
    let (cvecs, clams) = complex_hermitian_eig(chi.matrix())?;

    // Spectral pairing of the adjoint.
    let pair_tol = 1e-9 * (1.0 + scale);
    let mut lambdas = Vec::with_capacity(m);
    for i in 0..m {
        let (a, b) = (clams[2 * i], clams[2 * i + 1]);
        if (a - b).abs() > pair_tol {
            return Err(LinAlgError::ConvergenceFailure);
        }
        lambdas.push(0.5 * (a + b));
    }

    // Cluster nearly equal eigenvalues and fold each complex eigenspace
    // back to quaternion columns.
    let mut u = QMatrix::zeros(m, m);
    let mut start = 0;
    while start < m {
        let mut end = start + 1;
        while end < m && lambdas[end - 1] - lambdas[end] <= pair_tol {
            end += 1;
        }
        let k = end - start;
        let candidates: Vec<Vec<Quaternion>> = (2 * start..2 * end)
            .map(|j| {
                (0..m)
                    .map(|i| {
                        Quaternion::from_complex_pair(
                            cvecs[(i, j)],
                            -cvecs[(i + m, j)].conj(),
                        )
                    })
                    .collect()
            })
            .collect();
        let picked = extract_orthonormal(&candidates, k)?;
        for (offset, col) in picked.iter().enumerate() {
            u.set_column(start + offset, col);
        }
        start = end;
    }

    reorthonormalize(&mut u)?;
    for j in 0..m {
        gauge_fix_column(&mut u, j);
    }
    Ok(QuatEig { u, lambdas })
}

// ── singular value decomposition ─────────────────────────────────────

fn gram_pair(b: &QMatrix, p: usize, q: usize) -> (f64, f64, Quaternion) {
    let mut gpp = 0.0;
    let mut gqq = 0.0;
    let mut gpq = Quaternion::ZERO;
    for i in 0..b.rows() {
        let bp = b[(i, p)];
        let bq = b[(i, q)];
        gpp += bp.norm_sq();
        gqq += bq.norm_sq();
        gpq += bp.conj() * bq;
    }
    (gpp, gqq, gpq)
}

/// Singular value decomposition of a quaternion matrix by one-sided Jacobi
/// on the columns. Wide matrices are handled through the conjugate
/// transpose.
pub fn quat_svd(a: &QMatrix) -> Result<QuatSvd, LinAlgError> {
    let (m, n) = a.dims();
    if m < n {
        // A* = U Σ V*  ⇒  A = V Σ U*.
        let t = quat_svd(&a.conj_transpose())?;
        return Ok(QuatSvd { u: t.v, sigmas: t.sigmas, v: t.u });
    }

    let mut b = a.clone();
    let mut v = QMatrix::identity(n);
    let skip = f64::EPSILON * (m as f64);

    let mut sweeps = 0;
    loop {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let (gpp, gqq, gpq) = gram_pair(&b, p, q);
                let beta_abs = gpq.norm();
                if beta_abs <= skip * math::sqrt(gpp * gqq) {
                    continue;
                }
                rotated = true;
                // Unitary 2×2 rotation diagonalizing the Gram block
                // [[gpp, gpq], [conj(gpq), gqq]]; only the unit direction
                // of the off-diagonal entry enters.
                let udir = gpq.scale(1.0 / beta_abs);
                let tau = (gqq - gpp) / (2.0 * beta_abs);
                let t = if tau >= 0.0 {
                    1.0 / (tau + math::sqrt(1.0 + tau * tau))
                } else {
                    -1.0 / (-tau + math::sqrt(1.0 + tau * tau))
                };
                let c = 1.0 / math::sqrt(1.0 + t * t);
                let s = udir.scale(t * c);
                let s_conj = s.conj();
                for i in 0..m {
                    let bp = b[(i, p)];
                    let bq = b[(i, q)];
                    b[(i, p)] = bp.scale(c) - bq * s_conj;
                    b[(i, q)] = bp * s + bq.scale(c);
                }
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)];
                    v[(i, p)] = vp.scale(c) - vq * s_conj;
                    v[(i, q)] = vp * s + vq.scale(c);
                }
            }
        }
        if !rotated {
            break;
        }
        sweeps += 1;
        if sweeps > SVD_SWEEP_CAP {
            return Err(LinAlgError::ConvergenceFailure);
        }
    }

    // Sort column norms nonascending; ties keep the lower original index.
    let norms: Vec<f64> = (0..n).map(|j| qvec_norm(&b.column(j))).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| norms[y].partial_cmp(&norms[x]).unwrap().then(x.cmp(&y)));
    let sigmas: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let b = b.permute_columns(&order);
    let mut v = v.permute_columns(&order);

    // Left factor: normalized nonzero columns, then a deterministic basis
    // completion for null directions and the trailing m - n columns.
    let mut u = QMatrix::zeros(m, m);
    let mut have: Vec<usize> = Vec::new();
    for (j, &sigma) in sigmas.iter().enumerate() {
        if sigma > 0.0 {
            let col = qvec_scale_right(&b.column(j), Quaternion::from_real(1.0 / sigma));
            u.set_column(j, &col);
            have.push(j);
        }
    }
    let missing: Vec<usize> = (0..m).filter(|j| !have.contains(j)).collect();
    for slot in missing {
        // Best coordinate vector by residual norm after projection.
        let mut best: Option<(f64, Vec<Quaternion>)> = None;
        for cand in 0..m {
            let mut w = vec![Quaternion::ZERO; m];
            w[cand] = Quaternion::ONE;
            for &j in &have {
                let col = u.column(j);
                let coeff = qvec_inner(&w, &col);
                qvec_axpy(&mut w, &col, coeff);
            }
            let norm = qvec_norm(&w);
            if best.as_ref().is_none_or(|(bn, _)| norm > *bn) {
                best = Some((norm, w));
            }
        }
        let (norm, w) = best.expect("nonempty candidate set");
        debug_assert!(norm > 0.1);
        let col = qvec_scale_right(&w, Quaternion::from_real(1.0 / norm));
        u.set_column(slot, &col);
        have.push(slot);
    }

    // Gauge: couple each V column to its U column so A = UΣV* is preserved.
    for j in 0..m {
        let g = gauge_fix_column(&mut u, j);
        if sigmas.get(j).is_some_and(|&s| s > 0.0) {
            let col = qvec_scale_right(&v.column(j), g);
            v.set_column(j, &col);
        }
    }
    for (j, &sigma) in sigmas.iter().enumerate() {
        if sigma == 0.0 {
            gauge_fix_column(&mut v, j);
        }
    }

    Ok(QuatSvd { u, sigmas, v })
}
