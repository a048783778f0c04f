//! Arithmetic over the ring of dual numbers.
//!
//! A dual number is `a + ε a*` with `ε² = 0`. The product rule
//! `(a + ε a*)(b + ε b*) = ab + ε (a b* + a* b)` makes the pure dual
//! numbers zero divisors, so inversion and square roots are guarded and
//! return errors instead of amplifying garbage.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{approx_eq_scalar, DualFloat};

/// Dual number `real + ε dual`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dual<T> {
    pub real: T,
    pub dual: T,
}

impl<T: DualFloat> Dual<T> {
    #[inline]
    pub fn new(real: T, dual: T) -> Self {
        Self { real, dual }
    }

    /// Embeds a real number (dual part zero).
    #[inline]
    pub fn from_real(real: T) -> Self {
        Self {
            real,
            dual: T::zero(),
        }
    }

    #[inline]
    pub fn zero() -> Self {
        Self::from_real(T::zero())
    }

    #[inline]
    pub fn one() -> Self {
        Self::from_real(T::one())
    }

    /// Multiplies by a real scalar.
    #[inline]
    pub fn scale(self, k: T) -> Self {
        Self::new(self.real * k, self.dual * k)
    }

    #[inline]
    pub fn sq(self) -> Self {
        self * self
    }

    /// Largest component magnitude; handy for residuals.
    #[inline]
    pub fn max_abs(self) -> T {
        self.real.abs().max(self.dual.abs())
    }

    /// Inverse: `1/real - ε dual/real²`. Pure dual numbers are zero
    /// divisors and are rejected.
    pub fn inv(self) -> Result<Self> {
        if self.real.abs() < T::ZERO_DIVISOR_EPS {
            return Err(Error::DivisionByPureDual {
                real: self.real.to_f64().unwrap_or(f64::NAN),
            });
        }
        let r = self.real.recip();
        Ok(Self::new(r, -self.dual * r * r))
    }

    /// Square root with positive real part: `√real + ε dual/(2√real)`.
    pub fn sqrt(self) -> Result<Self> {
        if self.real <= T::zero() {
            return Err(Error::NonPositiveRealPart {
                real: self.real.to_f64().unwrap_or(f64::NAN),
            });
        }
        let s = self.real.sqrt();
        Ok(Self::new(s, self.dual / (s + s)))
    }

    /// First-order lift of a real function through the dual unit:
    /// `f(x + ε x*) = f(x) + ε x* f'(x)`.
    #[inline]
    pub fn lift(self, f: impl Fn(T) -> T, f_prime: impl Fn(T) -> T) -> Self {
        Self::new(f(self.real), self.dual * f_prime(self.real))
    }

    /// `sin(x + ε x*) = sin x + ε x* cos x`.
    #[inline]
    pub fn sin(self) -> Self {
        Self::new(self.real.sin(), self.dual * self.real.cos())
    }

    /// `cos(x + ε x*) = cos x - ε x* sin x`.
    #[inline]
    pub fn cos(self) -> Self {
        Self::new(self.real.cos(), -self.dual * self.real.sin())
    }

    /// Componentwise comparison with the default tolerances.
    #[inline]
    pub fn approx_eq(self, other: Self) -> bool {
        self.approx_eq_tol(other, T::APPROX_TOL, T::APPROX_TOL)
    }

    /// Componentwise comparison with explicit absolute and relative
    /// tolerances. Bitwise equality is never required anywhere.
    pub fn approx_eq_tol(self, other: Self, abs: T, rel: T) -> bool {
        approx_eq_scalar(self.real, other.real, abs, rel)
            && approx_eq_scalar(self.dual, other.dual, abs, rel)
    }
}

impl<T: DualFloat> Add for Dual<T> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.real + rhs.real, self.dual + rhs.dual)
    }
}

impl<T: DualFloat> Sub for Dual<T> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.real - rhs.real, self.dual - rhs.dual)
    }
}

impl<T: DualFloat> Neg for Dual<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.real, -self.dual)
    }
}

impl<T: DualFloat> Mul for Dual<T> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.real * rhs.real,
            self.real * rhs.dual + self.dual * rhs.real,
        )
    }
}

/// Division panics on zero divisors; use [`Dual::inv`] for the guarded path.
impl<T: DualFloat> Div for Dual<T> {
    type Output = Self;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the guarded inverse
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by pure dual number")
    }
}

impl<T: DualFloat> fmt::Display for Dual<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+ε{}", self.real, self.dual)
    }
}
