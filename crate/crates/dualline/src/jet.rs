//! Degree-4 truncated Taylor jets over a coefficient ring.
//!
//! A jet stores `[c0, c1, c2, c3, c4]` for `c0 + c1 σ + ... + c4 σ⁴`; the
//! k-th derivative at the expansion point is `k! · ck`. Coefficients are
//! either plain scalars or dual scalars, so the same machinery
//! differentiates through normalization, arc-length inversion and the
//! Frenet construction without nested finite differences.
//!
//! Operations that shorten the reliable degree (differentiation, and
//! composition with partially known inner jets) zero the trailing slots;
//! callers are responsible for reading only coefficients that are still
//! meaningful, which the call sites document.

use crate::dual::Dual;
use crate::error::{Error, Result};
use crate::scalar::DualFloat;

pub(crate) const JET_LEN: usize = 5;

/// Coefficient ring for jets: closed under ring operations, with guarded
/// reciprocal and square root.
pub(crate) trait Coeff: Copy {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(self, rhs: Self) -> Self;
    fn sub(self, rhs: Self) -> Self;
    fn mul(self, rhs: Self) -> Self;
    fn neg(self) -> Self;
    fn scale_int(self, k: usize) -> Self;
    fn try_recip(self) -> Result<Self>;
    fn try_sqrt(self) -> Result<Self>;
}

impl<T: DualFloat> Coeff for T {
    fn zero() -> Self {
        T::zero()
    }
    fn one() -> Self {
        T::one()
    }
    fn add(self, rhs: Self) -> Self {
        self + rhs
    }
    fn sub(self, rhs: Self) -> Self {
        self - rhs
    }
    fn mul(self, rhs: Self) -> Self {
        self * rhs
    }
    fn neg(self) -> Self {
        -self
    }
    fn scale_int(self, k: usize) -> Self {
        self * T::from_usize(k).unwrap()
    }
    fn try_recip(self) -> Result<Self> {
        if self.abs() < T::ZERO_DIVISOR_EPS {
            return Err(Error::ZeroRealPart {
                norm: self.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(self.recip())
    }
    fn try_sqrt(self) -> Result<Self> {
        if self <= T::zero() {
            return Err(Error::NonPositiveRealPart {
                real: self.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(self.sqrt())
    }
}

impl<T: DualFloat> Coeff for Dual<T> {
    fn zero() -> Self {
        Dual::zero()
    }
    fn one() -> Self {
        Dual::one()
    }
    fn add(self, rhs: Self) -> Self {
        self + rhs
    }
    fn sub(self, rhs: Self) -> Self {
        self - rhs
    }
    fn mul(self, rhs: Self) -> Self {
        self * rhs
    }
    fn neg(self) -> Self {
        -self
    }
    fn scale_int(self, k: usize) -> Self {
        self.scale(T::from_usize(k).unwrap())
    }
    fn try_recip(self) -> Result<Self> {
        self.inv()
    }
    fn try_sqrt(self) -> Result<Self> {
        self.sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Jet<C>(pub [C; JET_LEN]);

impl<C: Coeff> Jet<C> {
    pub fn constant(c: C) -> Self {
        let mut out = [C::zero(); JET_LEN];
        out[0] = c;
        Jet(out)
    }

    /// Builds a jet from derivatives `[f, f', f'', f''', f'''']`.
    pub fn from_derivatives(d: [C; JET_LEN]) -> Self {
        let mut out = d;
        let mut fact = 1usize;
        for (k, slot) in out.iter_mut().enumerate().skip(2) {
            fact *= k;
            let inv_fact = C::one().scale_int(fact).try_recip().expect("factorial");
            *slot = slot.mul(inv_fact);
        }
        Jet(out)
    }

    /// k-th derivative value encoded by this jet.
    pub fn derivative_value(&self, k: usize) -> C {
        let mut fact = 1usize;
        for i in 2..=k {
            fact *= i;
        }
        self.0[k].scale_int(fact)
    }

    pub fn value(&self) -> C {
        self.0[0]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0.iter()) {
            *o = o.add(*r);
        }
        Jet(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0.iter()) {
            *o = o.sub(*r);
        }
        Jet(out)
    }

    pub fn scale(&self, k: C) -> Self {
        let mut out = self.0;
        for o in out.iter_mut() {
            *o = o.mul(k);
        }
        Jet(out)
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = [C::zero(); JET_LEN];
        for i in 0..JET_LEN {
            for j in 0..JET_LEN - i {
                out[i + j] = out[i + j].add(self.0[i].mul(rhs.0[j]));
            }
        }
        Jet(out)
    }

    /// Formal derivative: degree drops by one, top slot zeroed.
    pub fn differentiate(&self) -> Self {
        let mut out = [C::zero(); JET_LEN];
        for k in 1..JET_LEN {
            out[k - 1] = self.0[k].scale_int(k);
        }
        Jet(out)
    }

    /// Series reciprocal: solves `r · self = 1` coefficient by coefficient.
    pub fn recip(&self) -> Result<Self> {
        let r0 = self.0[0].try_recip()?;
        let mut out = [C::zero(); JET_LEN];
        out[0] = r0;
        for k in 1..JET_LEN {
            let mut acc = C::zero();
            for i in 1..=k {
                acc = acc.add(self.0[i].mul(out[k - i]));
            }
            out[k] = acc.mul(r0).neg();
        }
        Ok(Jet(out))
    }

    /// Series square root: solves `s · s = self` coefficient by coefficient.
    pub fn sqrt(&self) -> Result<Self> {
        let s0 = self.0[0].try_sqrt()?;
        let two_s0_inv = s0.scale_int(2).try_recip()?;
        let mut out = [C::zero(); JET_LEN];
        out[0] = s0;
        for k in 1..JET_LEN {
            let mut acc = C::zero();
            for i in 1..k {
                acc = acc.add(out[i].mul(out[k - i]));
            }
            out[k] = self.0[k].sub(acc).mul(two_s0_inv);
        }
        Ok(Jet(out))
    }

    /// Composition `self ∘ inner`, valid only when the inner jet has zero
    /// constant term. Evaluated by Horner's scheme on truncated products.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Jet::constant(self.0[JET_LEN - 1]);
        for k in (0..JET_LEN - 1).rev() {
            acc = acc.mul(inner);
            acc.0[0] = acc.0[0].add(self.0[k]);
        }
        acc
    }
}

/// Lifts a real-coefficient jet into the dual-coefficient ring.
pub(crate) fn lift_real_jet<T: DualFloat>(jet: &Jet<T>) -> Jet<Dual<T>> {
    let mut out = [Dual::zero(); JET_LEN];
    for (o, c) in out.iter_mut().zip(jet.0.iter()) {
        *o = Dual::from_real(*c);
    }
    Jet(out)
}

/// Solves for the inner jet of the inverse function `t(s)` of an
/// arc-length-style map with `dt/ds = 1 / v(t)`, given the jet of the
/// speed `v` around `t0` (in `t`). The returned jet has zero constant
/// term and expands `t(s) - t0` in powers of `s - s0`.
pub(crate) fn inverse_speed_jet<T: DualFloat>(speed: &Jet<T>) -> Result<Jet<T>> {
    let mut tau = Jet::constant(T::zero());
    tau.0[1] = speed.0[0].try_recip()?;
    for k in 2..JET_LEN {
        // with tau known to degree k-1, v∘tau and its reciprocal are
        // valid to degree k-1, and k·tau_k matches coefficient k-1 of
        // 1/(v∘tau)
        let w = speed.compose(&tau);
        let r = w.recip()?;
        tau.0[k] = r.0[k - 1].mul(T::from_usize(k).unwrap().recip());
    }
    Ok(tau)
}
