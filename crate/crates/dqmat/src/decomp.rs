//! Eigendecomposition and SVD of dual quaternion matrices.
//!
//! Both decompositions work the same way: decompose the standard part with
//! a quaternion kernel, group (nearly) equal standard eigenvalues or
//! singular values into clusters, rotate the transformed infinitesimal part
//! block-by-block to expose the infinitesimal eigenvalues, and annihilate
//! the remaining off-diagonal blocks with skew-Hermitian first-order
//! corrections `U ← U(I + Xε)`, `V ← V(I + Yε)`. Because `X* = -X` the
//! corrected factors are exactly unitary in the dual algebra.
//!
//! Eigenvalues and singular values come out as dual numbers in nonascending
//! total order. Clustering is controlled by `cluster_tol`: standard-part
//! gaps at or below it are treated as one multiplicity block, which bounds
//! the corrections (they divide by inter-cluster gaps).

use alloc::vec;
use alloc::vec::Vec;

use crate::dual::DualNumber;
use crate::error::LinAlgError;
use crate::matrix::DQMatrix;
use crate::qmatrix::QMatrix;
use crate::solvers::{quat_hermitian_eig, quat_svd};

/// Hermitian eigendecomposition `A = U Σ U*` with dual-number eigenvalues.
#[derive(Debug, Clone)]
pub struct HermEig {
    /// Unitary factor; columns are eigenvectors.
    pub u: DQMatrix,
    /// Eigenvalues in nonascending total order.
    pub lambdas: Vec<DualNumber>,
}

/// SVD `A = U Σ V*` with dual-number singular values.
///
/// The first `appreciable_rank` values are appreciable positive, values up
/// to `rank` are positive infinitesimal, and the rest are zero.
#[derive(Debug, Clone)]
pub struct DualSvd {
    pub u: DQMatrix,
    /// Singular values in nonascending total order, length `min(m, n)`.
    pub sigmas: Vec<DualNumber>,
    pub v: DQMatrix,
    /// Number of appreciable singular values (`r`).
    pub appreciable_rank: usize,
    /// Number of nonzero singular values (`t`).
    pub rank: usize,
}

/// Intermediate block data from the Hermitian construction, mostly useful
/// for diagnostics and tests.
#[derive(Debug, Clone)]
pub struct BlockStructure {
    /// Sizes `k₁, …, k_r` of the standard-part eigenvalue clusters.
    pub cluster_sizes: Vec<usize>,
    /// The infinitesimal part transformed into the eigenbasis, after the
    /// per-block rotations (`C'`).
    pub transformed_infinitesimal: QMatrix,
    /// Skew-Hermitian first-order correction `X`.
    pub correction: QMatrix,
    /// Per-block infinitesimal eigenvalues, nonascending within each block.
    pub block_eigenvalues: Vec<Vec<f64>>,
}

fn cluster_runs(values: &[f64], tol: f64) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..values.len() {
        if values[i - 1] - values[i] > tol {
            runs.push((start, i));
            start = i;
        }
    }
    runs.push((start, values.len()));
    runs
}

/// Eigendecomposition of the Hermitian block `c[start..end, start..end]`,
/// with a fast path for singleton blocks.
fn block_eig(c: &QMatrix, start: usize, end: usize) -> Result<(QMatrix, Vec<f64>), LinAlgError> {
    if end - start == 1 {
        return Ok((QMatrix::identity(1), vec![c[(start, start)].re()]));
    }
    let block = c.block(start, end, start, end);
    let eig = quat_hermitian_eig(&block)?;
    Ok((eig.u, eig.lambdas))
}

fn sort_permutation(values: &[DualNumber]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..values.len()).collect();
    perm.sort_by(|&a, &b| values[b].compare(values[a]).then(a.cmp(&b)));
    perm
}

/// Hermitian eigendecomposition of a dual quaternion matrix.
///
/// `cluster_tol` defaults to `1e-8·max(1, ‖A_st‖₂)`.
pub fn dq_hermitian_eig(
    a: &DQMatrix,
    cluster_tol: Option<f64>,
) -> Result<HermEig, LinAlgError> {
    dq_hermitian_eig_with_blocks(a, cluster_tol).map(|(eig, _)| eig)
}

/// As [`dq_hermitian_eig`], also returning the block construction data.
pub fn dq_hermitian_eig_with_blocks(
    a: &DQMatrix,
    cluster_tol: Option<f64>,
) -> Result<(HermEig, BlockStructure), LinAlgError> {
    let m = a.rows();
    if a.cols() != m {
        return Err(LinAlgError::NotSquare);
    }
    if !a.is_hermitian(a.default_tol())? {
        return Err(LinAlgError::NotHermitian);
    }
    let ast = a.standard_part().hermitian_part()?;
    let ain = a.infinitesimal_part().hermitian_part()?;

    let base = quat_hermitian_eig(&ast)?;
    let d = &base.lambdas;
    let spec_radius = d.iter().fold(0.0f64, |acc, &x| acc.max(crate::math::abs(x)));
    let ctol = cluster_tol.unwrap_or(1e-8 * spec_radius.max(1.0));
    let clusters = cluster_runs(d, ctol);

    // C = U₀* A_in U₀, kept exactly Hermitian.
    let c = base
        .u
        .conj_transpose()
        .matmul(&ain)?
        .matmul(&base.u)?
        .hermitian_part()?;

    // Per-cluster rotations diagonalizing the diagonal blocks of C.
    let mut rot = QMatrix::identity(m);
    let mut block_eigenvalues = Vec::with_capacity(clusters.len());
    for &(start, end) in &clusters {
        let (w, nu) = block_eig(&c, start, end)?;
        rot.set_block(start, start, &w);
        block_eigenvalues.push(nu);
    }
    let cprime = rot.conj_transpose().matmul(&c)?.matmul(&rot)?;

    // Skew-Hermitian correction: X entries couple distinct clusters only
    // and use the true per-entry standard eigenvalues, so the first-order
    // off-diagonal terms cancel exactly.
    let mut x = QMatrix::zeros(m, m);
    for (ci, &(si, ei)) in clusters.iter().enumerate() {
        for &(sj, ej) in clusters.iter().skip(ci + 1) {
            for row in si..ei {
                for col in sj..ej {
                    let entry = cprime[(row, col)].scale(1.0 / (d[col] - d[row]));
                    x[(row, col)] = entry;
                    x[(col, row)] = -entry.conj();
                }
            }
        }
    }

    let mut lambdas = Vec::with_capacity(m);
    for (cluster, nus) in clusters.iter().zip(block_eigenvalues.iter()) {
        for (offset, &nu) in nus.iter().enumerate() {
            lambdas.push(DualNumber::new(d[cluster.0 + offset], nu));
        }
    }

    let u_st = base.u.matmul(&rot)?;
    let u_eps = u_st.matmul(&x)?;
    let mut u = DQMatrix::from_parts(&u_st, &u_eps)?;

    // Already nonascending by construction; the sort is a deterministic
    // safety net for exactly tied standard parts across clusters.
    let perm = sort_permutation(&lambdas);
    if perm.iter().enumerate().any(|(i, &p)| i != p) {
        lambdas = perm.iter().map(|&p| lambdas[p]).collect();
        u = u.permute_columns(&perm);
    }

    let structure = BlockStructure {
        cluster_sizes: clusters.iter().map(|&(s, e)| e - s).collect(),
        transformed_infinitesimal: cprime,
        correction: x,
        block_eigenvalues,
    };
    Ok((HermEig { u, lambdas }, structure))
}

/// Singular value decomposition of a dual quaternion matrix.
///
/// `cluster_tol` defaults to `1e-8·max(1, σ₁(A_st))`; standard-part
/// singular values below it form the zero cluster and are reported as
/// infinitesimal (or zero) dual singular values.
pub fn dq_svd(a: &DQMatrix, cluster_tol: Option<f64>) -> Result<DualSvd, LinAlgError> {
    let (m, n) = a.dims();
    let s = m.min(n);
    let ast = a.standard_part();
    let ain = a.infinitesimal_part();

    let base = quat_svd(&ast)?;
    let sv = &base.sigmas;
    let scale = sv[0].max(1.0);
    let ctol = cluster_tol.unwrap_or(1e-8 * scale);
    let gap_floor = 1e3 * f64::EPSILON * scale;

    let p = sv.iter().take_while(|&&x| x >= ctol).count();
    let clusters = cluster_runs(&sv[..p], ctol);
    let clusters = if p == 0 { Vec::new() } else { clusters };
    for pair in clusters.windows(2) {
        let gap = sv[pair[0].1 - 1] - sv[pair[1].0];
        if gap < gap_floor {
            return Err(LinAlgError::IllConditionedGap);
        }
    }

    let b = base.u.conj_transpose().matmul(&ain)?.matmul(&base.v)?;

    // Common block rotations: for positive clusters the Hermitian part of
    // the diagonal block carries the infinitesimal singular values; the
    // zero block gets its own SVD.
    let mut rot_u = QMatrix::identity(m);
    let mut rot_v = QMatrix::identity(n);
    let mut block_sigmas: Vec<Vec<f64>> = Vec::with_capacity(clusters.len());
    for &(start, end) in &clusters {
        let herm = b.block(start, end, start, end).hermitian_part()?;
        let (w, nu) = block_eig(&herm, 0, end - start)?;
        rot_u.set_block(start, start, &w);
        rot_v.set_block(start, start, &w);
        block_sigmas.push(nu);
    }

    let mut tail_sigmas: Vec<f64> = Vec::new();
    if p < m && p < n {
        let b0 = b.block(p, m, p, n);
        let tail = quat_svd(&b0)?;
        rot_u.set_block(p, p, &tail.u);
        rot_v.set_block(p, p, &tail.v);
        tail_sigmas = tail.sigmas;
    }

    let u_st = base.u.matmul(&rot_u)?;
    let v_st = base.v.matmul(&rot_v)?;
    let bp = rot_u.conj_transpose().matmul(&b)?.matmul(&rot_v)?;

    let mut x = QMatrix::zeros(m, m);
    let mut y = QMatrix::zeros(n, n);

    // Diagonal blocks: a common rotation cannot remove the skew-Hermitian
    // part, but opposite-signed corrections on the two sides can.
    for &(start, end) in &clusters {
        let rep: f64 = sv[start..end].iter().sum::<f64>() / (end - start) as f64;
        let skew = bp.block(start, end, start, end).skew_hermitian_part()?;
        x.set_block(start, start, &skew.scale(0.5 / rep));
        y.set_block(start, start, &skew.scale(-0.5 / rep));
    }

    // Off-diagonal positive-positive blocks: solve the coupled pair of
    // first-order equations; per-entry true singular values keep the
    // cancellation exact.
    for (ci, &(si, ei)) in clusters.iter().enumerate() {
        for &(sj, ej) in clusters.iter().skip(ci + 1) {
            for row in si..ei {
                for col in sj..ej {
                    let denom = sv[row] * sv[row] - sv[col] * sv[col];
                    let fwd = bp[(row, col)];
                    let mirror = bp[(col, row)].conj();
                    let xe = -(fwd.scale(sv[col]) + mirror.scale(sv[row])).scale(1.0 / denom);
                    let ye = -(fwd.scale(sv[row]) + mirror.scale(sv[col])).scale(1.0 / denom);
                    x[(row, col)] = xe;
                    x[(col, row)] = -xe.conj();
                    y[(row, col)] = ye;
                    y[(col, row)] = -ye.conj();
                }
            }
        }
    }

    // Blocks pairing a positive cluster with the zero cluster use the
    // single-sided solves.
    for row in 0..p {
        for col in p..n {
            let ye = -bp[(row, col)].scale(1.0 / sv[row]);
            y[(row, col)] = ye;
            y[(col, row)] = -ye.conj();
        }
    }
    for row in p..m {
        for col in 0..p {
            let xe = bp[(row, col)].scale(1.0 / sv[col]);
            x[(row, col)] = xe;
            x[(col, row)] = -xe.conj();
        }
    }

    let mut sigmas: Vec<DualNumber> = Vec::with_capacity(s);
    for (cluster, nus) in clusters.iter().zip(block_sigmas.iter()) {
        for (offset, &nu) in nus.iter().enumerate() {
            sigmas.push(DualNumber::new(sv[cluster.0 + offset], nu));
        }
    }
    for &c in &tail_sigmas {
        sigmas.push(DualNumber::new(0.0, c));
    }
    debug_assert_eq!(sigmas.len(), s);

    let in_tol = 1e-12 * (1.0 + ain.frobenius_norm());
    let appreciable_rank = p;
    let rank = p + tail_sigmas.iter().filter(|&&c| c > in_tol).count();

    let u_eps = u_st.matmul(&x)?;
    let v_eps = v_st.matmul(&y)?;
    let mut u = DQMatrix::from_parts(&u_st, &u_eps)?;
    let mut v = DQMatrix::from_parts(&v_st, &v_eps)?;

    // Deterministic safety sort over the first s columns.
    let perm = sort_permutation(&sigmas);
    if perm.iter().enumerate().any(|(i, &q)| i != q) {
        sigmas = perm.iter().map(|&q| sigmas[q]).collect();
        let mut uperm: Vec<usize> = (0..m).collect();
        let mut vperm: Vec<usize> = (0..n).collect();
        for (i, &q) in perm.iter().enumerate() {
            uperm[i] = q;
            vperm[i] = q;
        }
        u = u.permute_columns(&uperm);
        v = v.permute_columns(&vperm);
    }

    Ok(DualSvd { u, sigmas, v, appreciable_rank, rank })
}

/// Largest dual singular value, `‖A‖₂`.
pub fn spectral_norm(a: &DQMatrix) -> Result<DualNumber, LinAlgError> {
    Ok(dq_svd(a, None)?.sigmas[0])
}

/// Eigenvalues of a Hermitian dual quaternion matrix, nonascending.
pub fn eigenvalues(a: &DQMatrix) -> Result<Vec<DualNumber>, LinAlgError> {
    Ok(dq_hermitian_eig(a, None)?.lambdas)
}

/// Dual singular values, nonascending.
pub fn singular_values(a: &DQMatrix) -> Result<Vec<DualNumber>, LinAlgError> {
    Ok(dq_svd(a, None)?.sigmas)
}
