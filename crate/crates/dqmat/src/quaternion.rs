//! Quaternion scalars over the basis `1, i, j, k`.
//!
//! Multiplication follows `i² = j² = k² = ijk = -1`, so `ij = -ji = k`,
//! `jk = -kj = i`, `ki = -ik = j`. The product is associative but not
//! commutative. The conjugate negates the imaginary part, and
//! `|q|² = q̄q = w² + x² + y² + z²`.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex;

use crate::math;

/// A quaternion `w + xi + yj + zk`. Real scalars embed as `(w, 0, 0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const ONE: Quaternion = Quaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const I: Quaternion = Quaternion { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };

    #[inline]
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    #[inline]
    pub fn from_real(w: f64) -> Self {
        Quaternion::new(w, 0.0, 0.0, 0.0)
    }

    /// Real part.
    #[inline]
    pub fn re(self) -> f64 {
        self.w
    }

    /// Conjugate: negate the imaginary components.
    #[inline]
    pub fn conj(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Euclidean norm of the coefficient 4-vector, `√(q̄q)`.
    #[inline]
    pub fn norm(self) -> f64 {
        math::sqrt(self.norm_sq())
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Norm of the imaginary part only; zero iff the value is a real scalar.
    #[inline]
    pub fn imag_norm(self) -> f64 {
        math::sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
    }

    /// Coefficient dot product. Equals `Re(p q̄)` and `(p q̄ + q p̄)/2`.
    #[inline]
    pub fn dot(self, other: Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self == Quaternion::ZERO
    }

    /// Split as `q = a + b j` with complex `a = w + xi`, `b = y + zi`.
    #[inline]
    pub(crate) fn complex_pair(self) -> (Complex<f64>, Complex<f64>) {
        (Complex::new(self.w, self.x), Complex::new(self.y, self.z))
    }

    #[inline]
    pub(crate) fn from_complex_pair(a: Complex<f64>, b: Complex<f64>) -> Self {
        Quaternion::new(a.re, a.im, b.re, b.im)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Quaternion::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Quaternion::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl SubAssign for Quaternion {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    /// Hamilton product; noncommutative.
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Quaternion::new(
            self.w * rhs.w - self.x * rhs.x - self.y * rhs.y - self.z * rhs.z,
            self.w * rhs.x + self.x * rhs.w + self.y * rhs.z - self.z * rhs.y,
            self.w * rhs.y - self.x * rhs.z + self.y * rhs.w + self.z * rhs.x,
            self.w * rhs.z + self.x * rhs.y - self.y * rhs.x + self.z * rhs.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i{:+}j{:+}k", self.w, self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const ZERO: Quaternion = Quaternion::ZERO;
    const ONE: Quaternion = Quaternion::ONE;
    const I: Quaternion = Quaternion::I;
    const J: Quaternion = Quaternion::J;
    const K: Quaternion = Quaternion::K;

    #[test]
    fn multiplication_table() {
        // Every product of basis units.
        assert_eq!(I * I, -ONE);
        assert_eq!(J * J, -ONE);
        assert_eq!(K * K, -ONE);
        assert_eq!(I * J, K);
        assert_eq!(J * I, -K);
        assert_eq!(J * K, I);
        assert_eq!(K * J, -I);
        assert_eq!(K * I, J);
        assert_eq!(I * K, -J);
        assert_eq!(I * J * K, -ONE);
        for u in [ONE, I, J, K] {
            assert_eq!(u * ONE, u);
            assert_eq!(ONE * u, u);
        }
    }

    #[test]
    fn conjugation() {
        let q = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        assert_eq!(q.conj(), Quaternion::new(1.0, -1.0, -1.0, -1.0));
        assert_eq!(Quaternion::from_real(2.5).conj(), Quaternion::from_real(2.5));
        assert_eq!(q.conj().conj(), q);
    }

    #[test]
    fn norms() {
        assert_eq!(Quaternion::new(1.0, 1.0, 1.0, 1.0).norm(), 2.0);
        assert_eq!(ZERO.norm(), 0.0);
        assert_eq!(I.scale(3.0).norm(), 3.0);
    }

    fn any_quat() -> impl Strategy<Value = Quaternion> {
        ((-1.0f64..=1.0), (-1.0f64..=1.0), (-1.0f64..=1.0), (-1.0f64..=1.0))
            .prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
    }

    fn close(p: Quaternion, q: Quaternion, tol: f64) -> bool {
        (p - q).norm() <= tol
    }

    proptest! {
        #[test]
        fn conj_reverses_products(p in any_quat(), q in any_quat()) {
            prop_assert!(close((p * q).conj(), q.conj() * p.conj(), 1e-14));
        }

        #[test]
        fn symmetric_product_is_real(p in any_quat(), q in any_quat()) {
            // p q̄ + q p̄ = p̄ q + q̄ p = 2·dot(p, q), a real scalar.
            let lhs1 = p * q.conj() + q * p.conj();
            let lhs2 = p.conj() * q + q.conj() * p;
            let expect = 2.0 * p.dot(q);
            for lhs in [lhs1, lhs2] {
                prop_assert!(lhs.imag_norm() < 1e-13);
                prop_assert!((lhs.w - expect).abs() < 1e-13);
            }
        }

        #[test]
        fn norm_is_multiplicative(p in any_quat(), q in any_quat()) {
            let lhs = (p * q).norm();
            let rhs = p.norm() * q.norm();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
        }

        #[test]
        fn mul_is_associative(p in any_quat(), q in any_quat(), r in any_quat()) {
            prop_assert!(close((p * q) * r, p * (q * r), 1e-12));
        }

        #[test]
        fn complex_pair_round_trip(q in any_quat()) {
            let (a, b) = q.complex_pair();
            prop_assert_eq!(Quaternion::from_complex_pair(a, b), q);
        }
    }
}
