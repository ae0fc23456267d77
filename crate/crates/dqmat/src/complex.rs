//! Complex matrices, the complex adjoint of a quaternion matrix, and a
//! cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Writing a quaternion matrix as `A = A₁ + A₂ j` with complex blocks, the
//! adjoint is the `2m × 2n` complex matrix `[[A₁, A₂], [-conj(A₂), conj(A₁)]]`.
//! The map is multiplicative and sends conjugate transposes to conjugate
//! transposes, so Hermitian quaternion eigenproblems reduce to complex ones
//! with doubled multiplicities.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex;

use crate::error::LinAlgError;
use crate::math;
use crate::qmatrix::QMatrix;

pub type C64 = Complex<f64>;

const JACOBI_SWEEP_CAP: usize = 64;

#[inline]
fn cnorm_sq(z: C64) -> f64 {
    z.re * z.re + z.im * z.im
}

#[inline]
fn cnorm(z: C64) -> f64 {
    math::sqrt(cnorm_sq(z))
}

/// A dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be nonzero");
        ComplexMatrix { rows, cols, data: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = ComplexMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conj_transpose(&self) -> Self {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch);
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix, LinAlgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinAlgError::DimensionMismatch);
        }
        Ok(ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - other[(i, j)]))
    }

    pub fn frobenius_norm(&self) -> f64 {
        math::sqrt(self.data.iter().map(|&z| cnorm_sq(z)).sum())
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    acc += cnorm_sq(self[(i, j)]);
                }
            }
        }
        math::sqrt(acc)
    }

    pub fn is_hermitian(&self, tol: f64) -> Result<bool, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare);
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if cnorm(self[(i, j)] - self[(j, i)].conj()) > tol {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

/// The complex adjoint of an `m × n` quaternion matrix: a `2m × 2n` complex
/// matrix with the block symmetry `[[A₁, A₂], [-conj(A₂), conj(A₁)]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexAdjoint {
    qrows: usize,
    qcols: usize,
    mat: ComplexMatrix,
}

impl ComplexAdjoint {
    /// Dimensions of the underlying quaternion matrix.
    pub fn quaternion_dims(&self) -> (usize, usize) {
        (self.qrows, self.qcols)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    /// Invert the adjoint map; lossless for matrices built by
    /// [`complex_adjoint`].
    pub fn to_qmatrix(&self) -> QMatrix {
        let (m, n) = (self.qrows, self.qcols);
        QMatrix::from_fn(m, n, |i, j| {
            crate::quaternion::Quaternion::from_complex_pair(
                self.mat[(i, j)],
                self.mat[(i, j + n)],
            )
        })
    }
}

/// Map a quaternion matrix to its complex adjoint.
pub fn complex_adjoint(a: &QMatrix) -> ComplexAdjoint {
    let (m, n) = a.dims();
    let mut mat = ComplexMatrix::zeros(2 * m, 2 * n);
    for i in 0..m {
        for j in 0..n {
            let (a1, a2) = a[(i, j)].complex_pair();
            mat[(i, j)] = a1;
            mat[(i, j + n)] = a2;
            mat[(i + m, j)] = -a2.conj();
            mat[(i + m, j + n)] = a1.conj();
        }
    }
    ComplexAdjoint { qrows: m, qcols: n, mat }
}

/// Spectral decomposition of a complex Hermitian matrix by cyclic Jacobi
/// rotations.
///
/// Returns the unitary eigenvector matrix and the eigenvalues in
/// nonascending order. Sweeps stop once the off-diagonal Frobenius norm
/// falls below `1e-13 · ‖M‖_F`, with a cap of 64 sweeps.
pub fn complex_hermitian_eig(m: &ComplexMatrix) -> Result<(ComplexMatrix, Vec<f64>), LinAlgError> {
    if m.rows() != m.cols() {
        return Err(LinAlgError::NotSquare);
    }
    let n = m.rows();
    let scale = m.frobenius_norm();
    if !m.is_hermitian(1e-10 * scale.max(1.0))? {
        return Err(LinAlgError::NotHermitian);
    }

    // Work on an exactly Hermitian copy.
    let mut h = ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            C64::new(m[(i, j)].re, 0.0)
        } else if i < j {
            (m[(i, j)] + m[(j, i)].conj()) * 0.5
        } else {
            ((m[(j, i)] + m[(i, j)].conj()) * 0.5).conj()
        }
    });
    let mut v = ComplexMatrix::identity(n);

    let stop = 1e-13 * scale;
    let skip = f64::EPSILON * scale;
    let mut converged = h.off_diagonal_norm() <= stop;
    let mut sweeps = 0;
    while !converged {
        if sweeps >= JACOBI_SWEEP_CAP {
            return Err(LinAlgError::ConvergenceFailure);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let beta = h[(p, q)];
                let beta_abs = cnorm(beta);
                if beta_abs <= skip {
                    continue;
                }
                // Unitary rotation in the (p, q) plane annihilating h[p][q]:
                // J = [[c, s], [-conj(s), c]] with real c and s = u·t·c,
                // u = beta/|beta|, tan(2θ) solved the stable way.
                let alpha = h[(p, p)].re;
                let gamma = h[(q, q)].re;
                let u = beta / beta_abs;
                let tau = (gamma - alpha) / (2.0 * beta_abs);
                let t = if tau >= 0.0 {
                    1.0 / (tau + math::sqrt(1.0 + tau * tau))
                } else {
                    -1.0 / (-tau + math::sqrt(1.0 + tau * tau))
                };
                let c = 1.0 / math::sqrt(1.0 + t * t);
                let s = u * (t * c);

                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let hp = h[(r, p)];
                    let hq = h[(r, q)];
                    h[(r, p)] = hp * c - hq * s.conj();
                    h[(r, q)] = hp * s + hq * c;
                    h[(p, r)] = h[(r, p)].conj();
                    h[(q, r)] = h[(r, q)].conj();
                }
                h[(p, p)] = C64::new(alpha - t * beta_abs, 0.0);
                h[(q, q)] = C64::new(gamma + t * beta_abs, 0.0);
                h[(p, q)] = C64::new(0.0, 0.0);
                h[(q, p)] = C64::new(0.0, 0.0);

                for r in 0..n {
                    let vp = v[(r, p)];
                    let vq = v[(r, q)];
                    v[(r, p)] = vp * c - vq * s.conj();
                    v[(r, q)] = vp * s + vq * c;
                }
            }
        }
        sweeps += 1;
        converged = h.off_diagonal_norm() <= stop;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| h[(b, b)].re.partial_cmp(&h[(a, a)].re).unwrap());
    let lambdas: Vec<f64> = order.iter().map(|&i| h[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok((vectors, lambdas))
}
