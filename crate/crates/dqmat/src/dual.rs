//! Dual numbers `q = q_st + q_in ε` with `ε² = 0`.
//!
//! Dual numbers carry a total order: compare standard parts first, and on a
//! tie compare infinitesimal parts. A dual number is *appreciable* when its
//! standard part is nonzero and *infinitesimal* otherwise. Appreciable
//! values are invertible; nonzero infinitesimals are not, and they also have
//! no square root (squaring anything yields a standard part, so only 0 maps
//! to an infinitesimal square).

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::DualError;
use crate::math;

/// A dual number: standard part plus infinitesimal part times ε.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DualNumber {
    /// Standard part.
    pub st: f64,
    /// Infinitesimal part (coefficient of ε).
    pub eps: f64,
}

impl DualNumber {
    pub const ZERO: DualNumber = DualNumber { st: 0.0, eps: 0.0 };
    pub const ONE: DualNumber = DualNumber { st: 1.0, eps: 0.0 };

    #[inline]
    pub fn new(st: f64, eps: f64) -> Self {
        debug_assert!(st.is_finite() && eps.is_finite());
        DualNumber { st, eps }
    }

    /// Embed a real number (infinitesimal part zero).
    #[inline]
    pub fn from_real(st: f64) -> Self {
        Self::new(st, 0.0)
    }

    /// True when the standard part is nonzero.
    #[inline]
    pub fn is_appreciable(self) -> bool {
        self.st != 0.0
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.st.is_finite() && self.eps.is_finite()
    }

    /// Lexicographic total order: standard part first, then infinitesimal.
    ///
    /// Both components must be non-NaN, which every operation in this crate
    /// preserves.
    pub fn compare(self, other: Self) -> Ordering {
        if self.st < other.st {
            Ordering::Less
        } else if self.st > other.st {
            Ordering::Greater
        } else if self.eps < other.eps {
            Ordering::Less
        } else if self.eps > other.eps {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }

    /// Absolute value under the total order.
    pub fn abs(self) -> Self {
        if self.st != 0.0 {
            DualNumber::new(math::abs(self.st), math::sgn(self.st) * self.eps)
        } else {
            DualNumber::new(0.0, math::abs(self.eps))
        }
    }

    /// Square root of a nonnegative dual number.
    ///
    /// Defined for appreciable positive values and for exact zero; a nonzero
    /// infinitesimal has no square root and a negative argument none either.
    pub fn sqrt(self) -> Result<Self, DualError> {
        if self.compare(Self::ZERO) == Ordering::Less {
            return Err(DualError::NegativeArgument);
        }
        if self.st == 0.0 {
            if self.eps == 0.0 {
                Ok(Self::ZERO)
            } else {
                Err(DualError::NotRepresentable)
            }
        } else {
            let root = math::sqrt(self.st);
            Ok(DualNumber::new(root, self.eps / (2.0 * root)))
        }
    }

    /// Multiplicative inverse; exists iff the value is appreciable.
    pub fn inverse(self) -> Result<Self, DualError> {
        if self.st == 0.0 {
            return Err(DualError::Singular);
        }
        let r = 1.0 / self.st;
        Ok(DualNumber::new(r, -self.eps * r * r))
    }
}

impl Add for DualNumber {
    type Output = DualNumber;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        DualNumber::new(self.st + rhs.st, self.eps + rhs.eps)
    }
}

impl AddAssign for DualNumber {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for DualNumber {
    type Output = DualNumber;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        DualNumber::new(self.st - rhs.st, self.eps - rhs.eps)
    }
}

impl SubAssign for DualNumber {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Mul for DualNumber {
    type Output = DualNumber;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        // ε² = 0: the second-order term is dropped by construction.
        DualNumber::new(self.st * rhs.st, self.st * rhs.eps + self.eps * rhs.st)
    }
}

impl Mul<f64> for DualNumber {
    type Output = DualNumber;
    #[inline]
    fn mul(self, rhs: f64) -> Self {
        DualNumber::new(self.st * rhs, self.eps * rhs)
    }
}

impl Neg for DualNumber {
    type Output = DualNumber;
    #[inline]
    fn neg(self) -> Self {
        DualNumber::new(-self.st, -self.eps)
    }
}

impl PartialOrd for DualNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.is_finite() && other.is_finite() {
            Some(self.compare(*other))
        } else {
            None
        }
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.st, self.eps)
    }
}
