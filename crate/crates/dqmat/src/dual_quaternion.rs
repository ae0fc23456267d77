//! Dual quaternion scalars: pairs of quaternions under `ε² = 0`.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::dual::DualNumber;
use crate::error::DualError;
use crate::quaternion::Quaternion;

/// A dual quaternion `q = q_st + q_in ε`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DualQuaternion {
    /// Standard part.
    pub st: Quaternion,
    /// Infinitesimal part (coefficient of ε).
    pub eps: Quaternion,
}

impl DualQuaternion {
    pub const ZERO: DualQuaternion =
        DualQuaternion { st: Quaternion::ZERO, eps: Quaternion::ZERO };
    pub const ONE: DualQuaternion = DualQuaternion { st: Quaternion::ONE, eps: Quaternion::ZERO };

    #[inline]
    pub fn new(st: Quaternion, eps: Quaternion) -> Self {
        DualQuaternion { st, eps }
    }

    #[inline]
    pub fn from_quaternion(st: Quaternion) -> Self {
        DualQuaternion::new(st, Quaternion::ZERO)
    }

    #[inline]
    pub fn from_real(w: f64) -> Self {
        DualQuaternion::from_quaternion(Quaternion::from_real(w))
    }

    /// Embed a dual number as a dual quaternion with real quaternion parts.
    #[inline]
    pub fn from_dual_number(d: DualNumber) -> Self {
        DualQuaternion::new(Quaternion::from_real(d.st), Quaternion::from_real(d.eps))
    }

    /// True when the standard part is nonzero.
    #[inline]
    pub fn is_appreciable(self) -> bool {
        !self.st.is_zero()
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.st.is_finite() && self.eps.is_finite()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.st.is_zero() && self.eps.is_zero()
    }

    /// Componentwise quaternion conjugate.
    #[inline]
    pub fn conj(self) -> Self {
        DualQuaternion::new(self.st.conj(), self.eps.conj())
    }

    /// Magnitude, a dual number.
    ///
    /// For appreciable `q` the infinitesimal part is
    /// `(q_st q̄_in + q_in q̄_st) / (2|q_st|)`; the numerator is twice the
    /// coefficient dot product of the two parts, so the real-part extraction
    /// is used directly and the full identity is checked in debug builds.
    pub fn magnitude(self) -> DualNumber {
        if self.is_appreciable() {
            let n = self.st.norm();
            let d = self.st.dot(self.eps);
            #[cfg(debug_assertions)]
            {
                let sym = self.st * self.eps.conj() + self.eps * self.st.conj();
                let scale = 1.0 + self.st.norm() * self.eps.norm();
                debug_assert!(sym.imag_norm() <= 1e-13 * scale);
                debug_assert!((sym.re() - 2.0 * d).abs() <= 1e-13 * scale);
            }
            DualNumber::new(n, d / n)
        } else {
            DualNumber::new(0.0, self.eps.norm())
        }
    }

    /// Multiplicative inverse; exists iff the value is appreciable.
    pub fn inverse(self) -> Result<Self, DualError> {
        if !self.is_appreciable() {
            return Err(DualError::Singular);
        }
        let inv_st = self.st.conj().scale(1.0 / self.st.norm_sq());
        DualQuaternion::new(inv_st, -(inv_st * self.eps * inv_st)).finite_ok()
    }

    fn finite_ok(self) -> Result<Self, DualError> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(DualError::Singular)
        }
    }

    /// Right multiplication by a dual number (dual numbers commute with
    /// quaternions).
    #[inline]
    pub fn scale_dual(self, d: DualNumber) -> Self {
        DualQuaternion::new(self.st.scale(d.st), self.st.scale(d.eps) + self.eps.scale(d.st))
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        DualQuaternion::new(self.st.scale(s), self.eps.scale(s))
    }
}

impl Add for DualQuaternion {
    type Output = DualQuaternion;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        DualQuaternion::new(self.st + rhs.st, self.eps + rhs.eps)
    }
}

impl AddAssign for DualQuaternion {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for DualQuaternion {
    type Output = DualQuaternion;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        DualQuaternion::new(self.st - rhs.st, self.eps - rhs.eps)
    }
}

impl SubAssign for DualQuaternion {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Mul for DualQuaternion {
    type Output = DualQuaternion;
    /// `pq = p_st q_st + (p_in q_st + p_st q_in) ε`; noncommutative.
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        DualQuaternion::new(self.st * rhs.st, self.eps * rhs.st + self.st * rhs.eps)
    }
}

impl Neg for DualQuaternion {
    type Output = DualQuaternion;
    #[inline]
    fn neg(self) -> Self {
        DualQuaternion::new(-self.st, -self.eps)
    }
}

impl fmt::Display for DualQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})eps", self.st, self.eps)
    }
}
