//! Adaptive Simpson quadrature for real- and dual-valued integrands.
//!
//! Real and dual parts are integrated independently by the same scheme,
//! each against an absolute per-component tolerance.

use crate::dual::Dual;
use crate::error::{Error, Result};
use crate::scalar::DualFloat;

/// Subdivision cap: at most 2^MAX_DEPTH panels.
pub(crate) const MAX_DEPTH: usize = 20;

/// Integrates a real-valued function over `[a, b]` (sign-reversing when
/// `b < a`) to the default absolute tolerance.
pub fn integrate<T: DualFloat>(f: impl Fn(T) -> T, a: T, b: T) -> Result<T> {
    try_integrate(|t| Ok(f(t)), a, b, T::QUAD_TOL, MAX_DEPTH)
}

/// Integrates a dual-valued function componentwise.
pub fn integrate_dual<T: DualFloat>(f: impl Fn(T) -> Dual<T>, a: T, b: T) -> Result<Dual<T>> {
    try_integrate_dual(|t| Ok(f(t)), a, b, T::QUAD_TOL, MAX_DEPTH)
}

pub(crate) fn try_integrate_dual<T: DualFloat>(
    f: impl Fn(T) -> Result<Dual<T>>,
    a: T,
    b: T,
    tol: T,
    max_depth: usize,
) -> Result<Dual<T>> {
    let real = try_integrate(|t| f(t).map(|d| d.real), a, b, tol, max_depth)?;
    let dual = try_integrate(|t| f(t).map(|d| d.dual), a, b, tol, max_depth)?;
    Ok(Dual::new(real, dual))
}

pub(crate) fn try_integrate<T: DualFloat>(
    f: impl Fn(T) -> Result<T>,
    a: T,
    b: T,
    tol: T,
    max_depth: usize,
) -> Result<T> {
    if a == b {
        return Ok(T::zero());
    }
    let (lo, hi, flip) = if b < a { (b, a, true) } else { (a, b, false) };
    let half = T::lit(0.5);
    let m = (lo + hi) * half;
    let flo = f(lo)?;
    let fm = f(m)?;
    let fhi = f(hi)?;
    let whole = simpson(lo, hi, flo, fm, fhi);
    let v = refine(&f, lo, hi, flo, fm, fhi, whole, tol, max_depth)?;
    Ok(if flip { -v } else { v })
}

#[inline]
fn simpson<T: DualFloat>(a: T, b: T, fa: T, fm: T, fb: T) -> T {
    (b - a) * (fa + T::lit(4.0) * fm + fb) / T::lit(6.0)
}

#[allow(clippy::too_many_arguments)]
fn refine<T: DualFloat>(
    f: &impl Fn(T) -> Result<T>,
    a: T,
    b: T,
    fa: T,
    fm: T,
    fb: T,
    whole: T,
    tol: T,
    depth: usize,
) -> Result<T> {
    let half = T::lit(0.5);
    let m = (a + b) * half;
    let lm = (a + m) * half;
    let rm = (m + b) * half;
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    let fifteen = T::lit(15.0);
    if delta.abs() <= fifteen * tol {
        return Ok(left + right + delta / fifteen);
    }
    if depth == 0 {
        return Err(Error::QuadratureNonConvergence {
            a: a.to_f64().unwrap_or(f64::NAN),
            b: b.to_f64().unwrap_or(f64::NAN),
            estimate: (delta / fifteen).abs().to_f64().unwrap_or(f64::NAN),
        });
    }
    let l = refine(f, a, m, fa, flm, fm, left, tol * half, depth - 1)?;
    let r = refine(f, m, b, fm, frm, fb, right, tol * half, depth - 1)?;
    Ok(l + r)
}
