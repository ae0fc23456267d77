//! Dense dual quaternion vectors and matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::dual::DualNumber;
use crate::dual_quaternion::DualQuaternion;
use crate::error::LinAlgError;
use crate::math;
use crate::qmatrix::QMatrix;
use crate::quaternion::Quaternion;

/// A dual quaternion column vector with at least one entry.
#[derive(Debug, Clone, PartialEq)]
pub struct DQVector {
    entries: Vec<DualQuaternion>,
}

impl DQVector {
    pub fn new(entries: Vec<DualQuaternion>) -> Result<Self, LinAlgError> {
        if entries.is_empty() {
            return Err(LinAlgError::EmptyInput);
        }
        Ok(DQVector { entries })
    }

    pub fn zeros(len: usize) -> Self {
        assert!(len > 0, "vector length must be nonzero");
        DQVector { entries: vec![DualQuaternion::ZERO; len] }
    }

    /// Embed a vector of dual numbers.
    pub fn from_dual_numbers(ds: &[DualNumber]) -> Result<Self, LinAlgError> {
        DQVector::new(ds.iter().map(|d| DualQuaternion::from_dual_number(*d)).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = &DualQuaternion> {
        self.entries.iter()
    }

    pub fn is_appreciable(&self) -> bool {
        self.entries.iter().any(|q| q.is_appreciable())
    }

    /// Inner product `⟨u, v⟩ = Σ v̄ᵢ uᵢ`, conjugate-linear in `v`.
    pub fn inner_product(&self, v: &DQVector) -> Result<DualQuaternion, LinAlgError> {
        if self.len() != v.len() {
            return Err(LinAlgError::DimensionMismatch);
        }
        let mut acc = DualQuaternion::ZERO;
        for (u_i, v_i) in self.entries.iter().zip(v.entries.iter()) {
            acc += v_i.conj() * *u_i;
        }
        Ok(acc)
    }

    /// The `ℓ₂` norm, a dual number.
    ///
    /// Appreciable branch: `(‖u_st‖, Re⟨u_st, u_in⟩ / ‖u_st‖)`; otherwise
    /// `(0, ‖u_in‖)`.
    pub fn norm2(&self) -> DualNumber {
        if self.is_appreciable() {
            let st_sq: f64 = self.entries.iter().map(|q| q.st.norm_sq()).sum();
            let cross: f64 = self.entries.iter().map(|q| q.st.dot(q.eps)).sum();
            let n = math::sqrt(st_sq);
            DualNumber::new(n, cross / n)
        } else {
            let eps_sq: f64 = self.entries.iter().map(|q| q.eps.norm_sq()).sum();
            DualNumber::new(0.0, math::sqrt(eps_sq))
        }
    }

    pub fn add(&self, v: &DQVector) -> Result<DQVector, LinAlgError> {
        if self.len() != v.len() {
            return Err(LinAlgError::DimensionMismatch);
        }
        DQVector::new(
            self.entries.iter().zip(v.entries.iter()).map(|(a, b)| *a + *b).collect(),
        )
    }

    pub fn sub(&self, v: &DQVector) -> Result<DQVector, LinAlgError> {
        if self.len() != v.len() {
            return Err(LinAlgError::DimensionMismatch);
        }
        DQVector::new(
            self.entries.iter().zip(v.entries.iter()).map(|(a, b)| *a - *b).collect(),
        )
    }

    /// Right multiplication by a dual quaternion scalar.
    pub fn scale_right(&self, alpha: DualQuaternion) -> DQVector {
        DQVector { entries: self.entries.iter().map(|q| *q * alpha).collect() }
    }
}

impl Index<usize> for DQVector {
    type Output = DualQuaternion;
    #[inline]
    fn index(&self, i: usize) -> &DualQuaternion {
        &self.entries[i]
    }
}

impl IndexMut<usize> for DQVector {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut DualQuaternion {
        &mut self.entries[i]
    }
}

/// A dense row-major `m × n` dual quaternion matrix, `A = A_st + A_in ε`.
#[derive(Debug, Clone, PartialEq)]
pub struct DQMatrix {
    rows: usize,
    cols: usize,
    data: Vec<DualQuaternion>,
}

impl DQMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be nonzero");
        DQMatrix { rows, cols, data: vec![DualQuaternion::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DQMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = DualQuaternion::ONE;
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> DualQuaternion,
    ) -> Self {
        let mut m = DQMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Assemble from standard and infinitesimal quaternion parts.
    pub fn from_parts(st: &QMatrix, eps: &QMatrix) -> Result<Self, LinAlgError> {
        if st.dims() != eps.dims() {
            return Err(LinAlgError::DimensionMismatch);
        }
        Ok(DQMatrix::from_fn(st.rows(), st.cols(), |i, j| {
            DualQuaternion::new(st[(i, j)], eps[(i, j)])
        }))
    }

    pub fn from_standard(st: &QMatrix) -> Self {
        DQMatrix::from_fn(st.rows(), st.cols(), |i, j| DualQuaternion::from_quaternion(st[(i, j)]))
    }

    /// `εB`: a purely infinitesimal matrix.
    pub fn from_infinitesimal(eps: &QMatrix) -> Self {
        DQMatrix::from_fn(eps.rows(), eps.cols(), |i, j| {
            DualQuaternion::new(Quaternion::ZERO, eps[(i, j)])
        })
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

    pub fn standard_part(&self) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].st)
    }

    pub fn infinitesimal_part(&self) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].eps)
    }

    /// Appreciable iff the standard part is nonzero.
    pub fn is_appreciable(&self) -> bool {
        self.data.iter().any(|q| q.is_appreciable())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|q| q.is_zero())
    }

    pub fn conj_transpose(&self) -> DQMatrix {
        DQMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, other: &DQMatrix) -> Result<DQMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch);
        }
        let mut out = DQMatrix::zeros(self.rows, other.cols);
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

    pub fn mul_vec(&self, v: &DQVector) -> Result<DQVector, LinAlgError> {
        if self.cols != v.len() {
            return Err(LinAlgError::DimensionMismatch);
        }
        let mut out = DQVector::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = DualQuaternion::ZERO;
            for j in 0..self.cols {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    pub fn add(&self, other: &DQMatrix) -> Result<DQMatrix, LinAlgError> {
        if self.dims() != other.dims() {
            return Err(LinAlgError::DimensionMismatch);
        }
        Ok(DQMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + other[(i, j)]))
    }

    pub fn sub(&self, other: &DQMatrix) -> Result<DQMatrix, LinAlgError> {
        if self.dims() != other.dims() {
            return Err(LinAlgError::DimensionMismatch);
        }
        Ok(DQMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - other[(i, j)]))
    }

    pub fn scale(&self, s: f64) -> DQMatrix {
        DQMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].scale(s))
    }

    /// Sum of diagonal entries, a dual quaternion.
    pub fn trace(&self) -> Result<DualQuaternion, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare);
        }
        let mut acc = DualQuaternion::ZERO;
        for i in 0..self.rows {
            acc += self[(i, i)];
        }
        Ok(acc)
    }

    /// Frobenius norm, a dual number: `√(Σ|aᵢⱼ|²)` in dual arithmetic for
    /// appreciable matrices, `(0, ‖A_in‖_F)` otherwise.
    pub fn frobenius_norm(&self) -> DualNumber {
        if self.is_appreciable() {
            let st_sq: f64 = self.data.iter().map(|q| q.st.norm_sq()).sum();
            let cross: f64 = self.data.iter().map(|q| 2.0 * q.st.dot(q.eps)).sum();
            // st_sq > 0, so the dual square root exists.
            DualNumber::new(st_sq, cross).sqrt().expect("positive appreciable")
        } else {
            let eps_sq: f64 = self.data.iter().map(|q| q.eps.norm_sq()).sum();
            DualNumber::new(0.0, math::sqrt(eps_sq))
        }
    }

    /// Default tolerance for structural predicates.
    pub fn default_tol(&self) -> f64 {
        1e-10 * self.frobenius_norm().st.max(1.0)
    }

    /// Hermitian within `tol` on every entry of `A - A*` (both parts).
    pub fn is_hermitian(&self, tol: f64) -> Result<bool, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare);
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = self[(i, j)] - self[(j, i)].conj();
                if d.st.norm() > tol || d.eps.norm() > tol {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `A*A = I` within `tol` entrywise; requires `cols ≤ rows`.
    pub fn is_partially_unitary(&self, tol: f64) -> Result<bool, LinAlgError> {
        if self.cols > self.rows {
            return Err(LinAlgError::DimensionMismatch);
        }
        let gram = self.conj_transpose().matmul(self)?;
        let eye = DQMatrix::identity(self.cols);
        let diff = gram.sub(&eye)?;
        Ok(diff.data.iter().all(|q| q.st.norm() <= tol && q.eps.norm() <= tol))
    }

    /// Largest entry norm over both parts.
    pub fn max_entry_norm(&self) -> f64 {
        self.data.iter().map(|q| q.st.norm().max(q.eps.norm())).fold(0.0, f64::max)
    }

    pub fn column(&self, j: usize) -> DQVector {
        DQVector { entries: (0..self.rows).map(|i| self[(i, j)]).collect() }
    }

    pub fn set_column(&mut self, j: usize, col: &DQVector) {
        assert_eq!(col.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = col[i];
        }
    }

    pub fn from_columns(cols: &[DQVector]) -> Result<DQMatrix, LinAlgError> {
        if cols.is_empty() {
            return Err(LinAlgError::EmptyInput);
        }
        let rows = cols[0].len();
        if cols.iter().any(|c| c.len() != rows) {
            return Err(LinAlgError::DimensionMismatch);
        }
        let mut m = DQMatrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            m.set_column(j, c);
        }
        Ok(m)
    }

    pub fn permute_columns(&self, perm: &[usize]) -> DQMatrix {
        assert_eq!(perm.len(), self.cols);
        DQMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, perm[j])])
    }

    /// Sufficient right-linear-independence check for the columns: the
    /// standard part has full quaternion column rank. Rank deficiency of the
    /// standard part compensated by the infinitesimal part is not detected.
    pub fn has_full_column_rank_st(&self) -> Result<bool, LinAlgError> {
        let st = self.standard_part();
        if st.is_zero() {
            return Ok(false);
        }
        let svd = crate::solvers::quat_svd(&st)?;
        let thresh =
            f64::EPSILON * (self.rows.max(self.cols) as f64) * svd.sigmas[0].max(1e-300);
        Ok(self.cols <= self.rows && svd.sigmas.iter().all(|&s| s > thresh))
    }
}

impl Index<(usize, usize)> for DQMatrix {
    type Output = DualQuaternion;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &DualQuaternion {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for DQMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut DualQuaternion {
        &mut self.data[i * self.cols + j]
    }
}

/// Pairwise inner products match the Kronecker delta within `tol`.
pub fn orthonormal_check(vectors: &[DQVector], tol: f64) -> Result<bool, LinAlgError> {
    if vectors.is_empty() {
        return Err(LinAlgError::EmptyInput);
    }
    let len = vectors[0].len();
    if vectors.iter().any(|v| v.len() != len) {
        return Err(LinAlgError::DimensionMismatch);
    }
    for (i, u) in vectors.iter().enumerate() {
        for (j, v) in vectors.iter().enumerate() {
            let mut p = u.inner_product(v)?;
            if i == j {
                p -= DualQuaternion::ONE;
            }
            if p.st.norm() > tol || p.eps.norm() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Modified Gram-Schmidt over the dual quaternion inner product.
///
/// Every partial column norm must stay appreciable, otherwise the columns
/// are reported as rank deficient.
pub fn orthonormalize_columns(a: &DQMatrix) -> Result<DQMatrix, LinAlgError> {
    let mut out: Vec<DQVector> = Vec::with_capacity(a.cols());
    for j in 0..a.cols() {
        let mut w = a.column(j);
        // Two projection passes keep orthogonality at rounding level even
        // for poorly conditioned inputs.
        for _ in 0..2 {
            for u in &out {
                let coeff = w.inner_product(u)?;
                w = w.sub(&u.scale_right(coeff))?;
            }
        }
        let norm = w.norm2();
        if !norm.is_appreciable() || norm.st <= 1e-12 {
            return Err(LinAlgError::RankDeficient);
        }
        let inv = norm.inverse().expect("appreciable norm");
        out.push(w.scale_right(DualQuaternion::from_dual_number(inv)));
    }
    DQMatrix::from_columns(&out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::Quaternion;
    use proptest::prelude::*;

    const I: Quaternion = Quaternion::I;

    fn dqs(st: Quaternion) -> DualQuaternion {
        DualQuaternion::from_quaternion(st)
    }

    fn any_quat() -> impl Strategy<Value = Quaternion> {
        ((-1.0f64..=1.0), (-1.0f64..=1.0), (-1.0f64..=1.0), (-1.0f64..=1.0))
            .prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
    }

    fn any_dq() -> impl Strategy<Value = DualQuaternion> {
        (any_quat(), any_quat()).prop_map(|(a, b)| DualQuaternion::new(a, b))
    }

    fn any_vec(len: usize) -> impl Strategy<Value = DQVector> {
        proptest::collection::vec(any_dq(), len).prop_map(|v| DQVector::new(v).unwrap())
    }

    fn any_mat(rows: usize, cols: usize) -> impl Strategy<Value = DQMatrix> {
        proptest::collection::vec(any_dq(), rows * cols).prop_map(move |v| {
            DQMatrix::from_fn(rows, cols, |i, j| v[i * cols + j])
        })
    }

    #[test]
    fn inner_product_basics() {
        let u = DQVector::new(vec![DualQuaternion::ONE, dqs(I)]).unwrap();
        let uu = u.inner_product(&u).unwrap();
        assert_eq!(uu, DualQuaternion::from_real(2.0));

        let e1 = DQVector::new(vec![DualQuaternion::ONE, DualQuaternion::ZERO]).unwrap();
        let e2 = DQVector::new(vec![DualQuaternion::ZERO, DualQuaternion::ONE]).unwrap();
        assert_eq!(e1.inner_product(&e2).unwrap(), DualQuaternion::ZERO);

        assert_eq!(
            e1.inner_product(&DQVector::zeros(3)),
            Err(LinAlgError::DimensionMismatch)
        );
    }

    #[test]
    fn vec_norm_cases() {
        let u = DQVector::new(vec![DualQuaternion::ONE, dqs(I)]).unwrap();
        let n = u.norm2();
        assert!((n.st - core::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(n.eps, 0.0);

        let v = DQVector::from_dual_numbers(&[
            DualNumber::new(0.0, 3.0),
            DualNumber::new(0.0, 4.0),
        ])
        .unwrap();
        assert_eq!(v.norm2(), DualNumber::new(0.0, 5.0));

        let w = DQVector::from_dual_numbers(&[DualNumber::new(1.0, 1.0)]).unwrap();
        assert_eq!(w.norm2(), DualNumber::new(1.0, 1.0));
    }

    #[test]
    fn trace_cases() {
        let i3 = DQMatrix::identity(3);
        assert_eq!(i3.trace().unwrap(), DualQuaternion::from_real(3.0));

        let mut d = DQMatrix::zeros(2, 2);
        d[(0, 0)] = dqs(I);
        d[(1, 1)] = dqs(-I);
        assert_eq!(d.trace().unwrap(), DualQuaternion::ZERO);

        assert_eq!(DQMatrix::zeros(2, 3).trace(), Err(LinAlgError::NotSquare));
    }

    #[test]
    fn frobenius_cases() {
        let n = DQMatrix::identity(2).frobenius_norm();
        assert!((n.st - core::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(n.eps, 0.0);

        let mut a = DQMatrix::zeros(1, 1);
        a[(0, 0)] = DualQuaternion::new(Quaternion::ZERO, I.scale(3.0));
        assert_eq!(a.frobenius_norm(), DualNumber::new(0.0, 3.0));
    }

    #[test]
    fn hermitian_predicate_cases() {
        assert!(DQMatrix::identity(3).is_hermitian(1e-12).unwrap());

        // [[1, iε], [-iε, 1]] is Hermitian.
        let mut a = DQMatrix::identity(2);
        a[(0, 1)] = DualQuaternion::new(Quaternion::ZERO, I);
        a[(1, 0)] = DualQuaternion::new(Quaternion::ZERO, -I);
        assert!(a.is_hermitian(1e-12).unwrap());

        // [[0, i], [i, 0]] is not: the (2,1) entry must be -i.
        let mut b = DQMatrix::zeros(2, 2);
        b[(0, 1)] = dqs(I);
        b[(1, 0)] = dqs(I);
        assert!(!b.is_hermitian(1e-12).unwrap());
    }

    #[test]
    fn partial_unitary_cases() {
        let mut u = DQMatrix::zeros(3, 2);
        u[(0, 0)] = DualQuaternion::ONE;
        u[(1, 1)] = DualQuaternion::ONE;
        assert!(u.is_partially_unitary(1e-12).unwrap());

        let s = 1.0 / core::f64::consts::SQRT_2;
        let mut v = DQMatrix::zeros(2, 1);
        v[(0, 0)] = DualQuaternion::from_real(s);
        v[(1, 0)] = DualQuaternion::from_real(s);
        assert!(v.is_partially_unitary(1e-10).unwrap());

        let z = DQMatrix::zeros(2, 1);
        assert!(!z.is_partially_unitary(1e-10).unwrap());

        assert_eq!(
            DQMatrix::zeros(2, 3).is_partially_unitary(1e-10),
            Err(LinAlgError::DimensionMismatch)
        );
    }

    #[test]
    fn full_column_rank_of_standard_part() {
        use crate::random::{self, SplitMix64};
        let mut rng = SplitMix64::new(2024);
        let a = DQMatrix::from_standard(&random::qmatrix(&mut rng, 4, 3));
        assert!(a.has_full_column_rank_st().unwrap());

        // Duplicate a column: standard-part rank drops.
        let mut b = a.clone();
        let col = b.column(0);
        b.set_column(1, &col);
        assert!(!b.has_full_column_rank_st().unwrap());

        // Wide matrices can never have independent columns.
        let wide = DQMatrix::from_standard(&random::qmatrix(&mut rng, 2, 4));
        assert!(!wide.has_full_column_rank_st().unwrap());

        // Infinitesimal compensation is not detected; the check is only
        // sufficient.
        let inf = DQMatrix::from_infinitesimal(&random::qmatrix(&mut rng, 3, 3));
        assert!(!inf.has_full_column_rank_st().unwrap());
    }

    #[test]
    fn trace_invariant_under_unitary_conjugation() {
        use crate::random::{self, SplitMix64};
        let mut rng = SplitMix64::new(2025);
        let a = random::hermitian(&mut rng, 4);
        let b = random::hermitian(&mut rng, 4);
        let w = DQMatrix::from_standard(&random::quaternion_unitary(&mut rng, 4));
        let cross = a.matmul(&b).unwrap().add(&b.matmul(&a).unwrap()).unwrap();
        let conj = w.matmul(&cross).unwrap().matmul(&w.conj_transpose()).unwrap();
        let t1 = cross.trace().unwrap();
        let t2 = conj.trace().unwrap();
        assert!((t1.st - t2.st).norm() < 1e-10);
        assert!((t1.eps - t2.eps).norm() < 1e-10);
    }

    #[test]
    fn orthonormal_check_cases() {
        let e1 = DQVector::new(vec![DualQuaternion::ONE, DualQuaternion::ZERO]).unwrap();
        let e2 = DQVector::new(vec![DualQuaternion::ZERO, DualQuaternion::ONE]).unwrap();
        assert!(orthonormal_check(&[e1.clone(), e2.clone()], 1e-12).unwrap());
        assert!(!orthonormal_check(&[e1.clone(), e1.clone()], 1e-12).unwrap());
        let scaled = e1.scale_right(DualQuaternion::from_real(2.0));
        assert!(!orthonormal_check(&[scaled, e2], 1e-12).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn inner_product_conjugate_symmetry(u in any_vec(4), v in any_vec(4)) {
            let uv = u.inner_product(&v).unwrap();
            let vu = v.inner_product(&u).unwrap();
            prop_assert!((uv - vu.conj()).st.norm() < 1e-13);
            prop_assert!((uv - vu.conj()).eps.norm() < 1e-13);
        }

        #[test]
        fn inner_product_right_linearity(u in any_vec(3), v in any_vec(3), alpha in any_dq()) {
            // ⟨u, vα⟩ = ᾱ⟨u, v⟩, checked by expanding both routes.
            let lhs = u.inner_product(&v.scale_right(alpha)).unwrap();
            let rhs = alpha.conj() * u.inner_product(&v).unwrap();
            prop_assert!((lhs - rhs).st.norm() < 1e-12);
            prop_assert!((lhs - rhs).eps.norm() < 1e-12);
        }

        #[test]
        fn matmul_conj_transpose_reverses(a in any_mat(3, 2), b in any_mat(2, 4)) {
            let lhs = a.matmul(&b).unwrap().conj_transpose();
            let rhs = b.conj_transpose().matmul(&a.conj_transpose()).unwrap();
            for i in 0..lhs.rows() {
                for j in 0..lhs.cols() {
                    let d = lhs[(i, j)] - rhs[(i, j)];
                    prop_assert!(d.st.norm() < 1e-12 && d.eps.norm() < 1e-12);
                }
            }
        }

        #[test]
        fn infinitesimal_product_vanishes(a in any_mat(2, 2), b in any_mat(2, 2)) {
            let ea = DQMatrix::from_infinitesimal(&a.infinitesimal_part());
            let eb = DQMatrix::from_infinitesimal(&b.infinitesimal_part());
            prop_assert!(ea.matmul(&eb).unwrap().is_zero());
        }

        #[test]
        fn frobenius_invariant_under_conj_transpose(a in any_mat(3, 2)) {
            let n1 = a.frobenius_norm();
            let n2 = a.conj_transpose().frobenius_norm();
            prop_assert!((n1.st - n2.st).abs() < 1e-12);
            prop_assert!((n1.eps - n2.eps).abs() < 1e-12 * (1.0 + n1.eps.abs()));
        }

        #[test]
        fn cauchy_schwarz(u in any_vec(4), v in any_vec(4), tag in 0u8..3) {
            // Mix appreciable and infinitesimal operands.
            let u = match tag {
                0 => DQMatrix::from_infinitesimal(
                        &DQMatrix::from_columns(&[u]).unwrap().infinitesimal_part()
                    ).column(0),
                _ => u,
            };
            let lhs = u.inner_product(&v).unwrap().magnitude();
            let rhs = u.norm2() * v.norm2();
            let slack = rhs - lhs;
            // Tolerant order: allow rounding at the comparison boundary.
            prop_assert!(slack.st > -1e-10 * (1.0 + rhs.st.abs()));
            if slack.st.abs() <= 1e-10 * (1.0 + rhs.st.abs()) {
                prop_assert!(slack.eps > -1e-8 * (1.0 + rhs.eps.abs()));
            }
        }

        #[test]
        fn matvec_bounded_by_frobenius(a in any_mat(3, 3), x in any_vec(3)) {
            let ax = a.mul_vec(&x).unwrap().norm2();
            let bound = a.frobenius_norm() * x.norm2();
            let slack = bound - ax;
            prop_assert!(slack.st > -1e-10 * (1.0 + bound.st.abs()));
            if slack.st.abs() <= 1e-10 * (1.0 + bound.st.abs()) {
                prop_assert!(slack.eps > -1e-8 * (1.0 + bound.eps.abs()));
            }
        }

        #[test]
        fn gram_schmidt_yields_partially_unitary(a in any_mat(4, 3)) {
            match orthonormalize_columns(&a) {
                Ok(u) => {
                    prop_assert!(u.is_partially_unitary(1e-10).unwrap());
                    // Norm preservation: ‖Ux‖ = ‖x‖ for random x.
                    let x = a.column(0);
                    let x = DQVector::new(x.iter().take(3).cloned().collect()).unwrap();
                    let ux = u.mul_vec(&x).unwrap();
                    let n1 = ux.norm2();
                    let n2 = x.norm2();
                    prop_assert!((n1.st - n2.st).abs() <= 1e-10 * (1.0 + n2.st.abs()));
                    prop_assert!((n1.eps - n2.eps).abs() <= 1e-10 * (1.0 + n2.eps.abs()));
                }
                Err(LinAlgError::RankDeficient) => {}
                Err(e) => prop_assert!(false, "unexpected error {:?}", e),
            }
        }
    }
}
