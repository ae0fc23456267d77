//! Dense matrices with plain quaternion entries.
//!
//! These carry the standard and infinitesimal parts of dual quaternion
//! matrices and are the inputs to the base eigenvalue/SVD kernels.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::error::LinAlgError;
use crate::math;
use crate::quaternion::Quaternion;

/// A dense row-major `m × n` quaternion matrix. Both dimensions must be
/// at least 1.
#[derive(Debug, Clone, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be nonzero");
        QMatrix { rows, cols, data: vec![Quaternion::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Quaternion::ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut m = QMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Build from rows of entries; every row must have the same length.
    pub fn from_rows(rows: &[Vec<Quaternion>]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols));
        QMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j])
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|q| q.is_zero())
    }

    pub fn conj_transpose(&self) -> Self {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, other: &QMatrix) -> Result<QMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch);
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix, LinAlgError> {
        if self.dims() != other.dims() {
            return Err(LinAlgError::DimensionMismatch);
        }
        Ok(QMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + other[(i, j)]))
    }

    pub fn sub(&self, other: &QMatrix) -> Result<QMatrix, LinAlgError> {
        if self.dims() != other.dims() {
            return Err(LinAlgError::DimensionMismatch);
        }
        Ok(QMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - other[(i, j)]))
    }

    pub fn scale(&self, s: f64) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].scale(s))
    }

    pub fn frobenius_norm(&self) -> f64 {
        math::sqrt(self.data.iter().map(|q| q.norm_sq()).sum())
    }

    /// Largest entry norm.
    pub fn max_entry_norm(&self) -> f64 {
        self.data.iter().map(|q| q.norm()).fold(0.0, f64::max)
    }

    /// Hermitian within `tol` on every entry of `A - A*`.
    pub fn is_hermitian(&self, tol: f64) -> Result<bool, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare);
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if (self[(i, j)] - self[(j, i)].conj()).norm() > tol {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `(A* + A) / 2`; exactly Hermitian entrywise.
    pub fn hermitian_part(&self) -> Result<QMatrix, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare);
        }
        Ok(QMatrix::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] + self[(j, i)].conj()).scale(0.5)
        }))
    }

    /// `(A - A*) / 2`.
    pub fn skew_hermitian_part(&self) -> Result<QMatrix, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare);
        }
        Ok(QMatrix::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] - self[(j, i)].conj()).scale(0.5)
        }))
    }

    /// Copy of the block with rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> QMatrix {
        assert!(r0 < r1 && r1 <= self.rows && c0 < c1 && c1 <= self.cols);
        QMatrix::from_fn(r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &QMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)];
            }
        }
    }

    pub fn column(&self, j: usize) -> Vec<Quaternion> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, col: &[Quaternion]) {
        assert_eq!(col.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = col[i];
        }
    }

    /// Reorder columns so that column `k` of the result is column
    /// `perm[k]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> QMatrix {
        assert_eq!(perm.len(), self.cols);
        QMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, perm[j])])
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Quaternion {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Quaternion {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_identity_and_shapes() {
        let a = QMatrix::from_fn(2, 3, |i, j| Quaternion::new((i + j) as f64, 1.0, 0.0, -1.0));
        let i3 = QMatrix::identity(3);
        assert_eq!(a.matmul(&i3).unwrap(), a);
        assert_eq!(a.matmul(&a), Err(LinAlgError::DimensionMismatch));
    }

    #[test]
    fn conj_transpose_involution() {
        let a = QMatrix::from_fn(2, 3, |i, j| {
            Quaternion::new(i as f64, j as f64, 1.0, -(i as f64))
        });
        assert_eq!(a.conj_transpose().conj_transpose(), a);
    }

    #[test]
    fn hermitian_checks() {
        let mut h = QMatrix::identity(2);
        h[(0, 1)] = Quaternion::I;
        h[(1, 0)] = -Quaternion::I;
        assert!(h.is_hermitian(1e-12).unwrap());
        h[(1, 0)] = Quaternion::I;
        assert!(!h.is_hermitian(1e-12).unwrap());
        let rect = QMatrix::zeros(2, 3);
        assert_eq!(rect.is_hermitian(1e-12), Err(LinAlgError::NotSquare));
    }

    #[test]
    #[should_panic]
    fn zero_dimension_rejected() {
        let _ = QMatrix::zeros(0, 2);
    }
}
