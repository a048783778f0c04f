//! Dual 3-vectors: pairs `(a, a*)` of real 3-vectors under the dual
//! scalar and vector products.
//!
//! When a dual vector is unit with `<a, a*> = 0` it encodes an oriented
//! line of Euclidean space: `a` is the direction and `a*` the moment of
//! the line about the origin.

use std::ops::{Add, Neg, Sub};

use crate::dual::Dual;
use crate::error::{Error, Result};
use crate::scalar::DualFloat;
use crate::vec3::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DualVec3<T> {
    /// Direction part `a`.
    pub real: Vec3<T>,
    /// Moment part `a*`.
    pub dual: Vec3<T>,
}

impl<T: DualFloat> DualVec3<T> {
    #[inline]
    pub fn new(real: Vec3<T>, dual: Vec3<T>) -> Self {
        Self { real, dual }
    }

    #[inline]
    pub fn from_real(real: Vec3<T>) -> Self {
        Self::new(real, Vec3::zero())
    }

    #[inline]
    pub fn zero() -> Self {
        Self::new(Vec3::zero(), Vec3::zero())
    }

    /// The `i`-th coordinate as a dual scalar.
    #[inline]
    pub fn component(self, i: usize) -> Dual<T> {
        Dual::new(self.real.component(i), self.dual.component(i))
    }

    pub fn from_components(c: [Dual<T>; 3]) -> Self {
        Self::new(
            Vec3::new(c[0].real, c[1].real, c[2].real),
            Vec3::new(c[0].dual, c[1].dual, c[2].dual),
        )
    }

    /// Dual scalar product `g(a~, b~) = g(a,b) + ε(g(a,b*) + g(a*,b))`.
    #[inline]
    pub fn dot(self, rhs: Self) -> Dual<T> {
        Dual::new(
            self.real.dot(rhs.real),
            self.real.dot(rhs.dual) + self.dual.dot(rhs.real),
        )
    }

    /// Dual vector product `a~ × b~ = a×b + ε(a×b* + a*×b)`.
    #[inline]
    pub fn cross(self, rhs: Self) -> Self {
        Self::new(
            self.real.cross(rhs.real),
            self.real.cross(rhs.dual) + self.dual.cross(rhs.real),
        )
    }

    /// Multiplication by a dual scalar, applied to each coordinate.
    #[inline]
    pub fn scale(self, k: Dual<T>) -> Self {
        Self::new(
            self.real.scale(k.real),
            self.real.scale(k.dual) + self.dual.scale(k.real),
        )
    }

    /// Dual norm `|a~| = |a| + ε g(a, a*)/|a|`; singular when the real
    /// part vanishes.
    pub fn norm(self) -> Result<Dual<T>> {
        let n = self.real.norm();
        if n < T::ZERO_DIVISOR_EPS {
            return Err(Error::ZeroRealPart {
                norm: n.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Dual::new(n, self.real.dot(self.dual) / n))
    }

    /// Projects onto the dual unit sphere: `g(result, result) = 1 + ε0`.
    pub fn normalized(self) -> Result<Self> {
        Ok(self.scale(self.norm()?.inv()?))
    }

    /// Deviation of `g(v, v)` from `1 + ε0`, componentwise.
    pub fn unit_deviation(self) -> (T, T) {
        let g = self.dot(self);
        ((g.real - T::one()).abs(), g.dual.abs())
    }

    /// Unit to the line-geometry tolerance on both components.
    pub fn is_unit(self) -> bool {
        let (dr, dd) = self.unit_deviation();
        dr <= T::UNIT_EPS && dd <= T::UNIT_EPS
    }

    pub fn approx_eq_tol(self, other: Self, abs: T, rel: T) -> bool {
        self.real.approx_eq_tol(other.real, abs, rel) && self.dual.approx_eq_tol(other.dual, abs, rel)
    }

    #[inline]
    pub fn approx_eq(self, other: Self) -> bool {
        self.approx_eq_tol(other, T::APPROX_TOL, T::APPROX_TOL)
    }

    /// Largest component magnitude across both parts.
    pub fn max_abs(self) -> T {
        let m = |v: Vec3<T>| v.x.abs().max(v.y.abs()).max(v.z.abs());
        m(self.real).max(m(self.dual))
    }
}

impl<T: DualFloat> Add for DualVec3<T> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.real + rhs.real, self.dual + rhs.dual)
    }
}

impl<T: DualFloat> Sub for DualVec3<T> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.real - rhs.real, self.dual - rhs.dual)
    }
}

impl<T: DualFloat> Neg for DualVec3<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.real, -self.dual)
    }
}
