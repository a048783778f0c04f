//! Scalar abstraction: the real field underlying all dual arithmetic.

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the library is generic over (`f32` or `f64`).
///
/// The associated constants tune the guard thresholds to the precision of
/// the concrete type; the values for `f64` are the ones the test suite and
/// the CLI rely on.
pub trait DualFloat:
    Float + FloatConst + FromPrimitive + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    /// Dual numbers whose real part is smaller than this in magnitude are
    /// zero divisors for all practical purposes: inverting them amplifies
    /// by `1/real²`, so they are rejected instead.
    const ZERO_DIVISOR_EPS: Self;
    /// Tolerance for unit-length checks on dual vectors and line directions.
    const UNIT_EPS: Self;
    /// Absolute quadrature tolerance, applied to each component separately.
    const QUAD_TOL: Self;
    /// Smallest admissible real curvature when building a Frenet frame.
    const CURVATURE_EPS: Self;
    /// Smallest admissible real torsion for ratio-based sphere quantities.
    const TORSION_EPS: Self;
    /// Default absolute/relative tolerance for approximate comparisons.
    const APPROX_TOL: Self;

    /// Converts an `f64` literal; panics only on values unrepresentable in
    /// `Self`, which never happens for the constants used internally.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal not representable in scalar type")
    }
}

impl DualFloat for f64 {
    const ZERO_DIVISOR_EPS: Self = 1e-12;
    const UNIT_EPS: Self = 1e-8;
    const QUAD_TOL: Self = 1e-10;
    const CURVATURE_EPS: Self = 1e-8;
    const TORSION_EPS: Self = 1e-8;
    const APPROX_TOL: Self = 1e-10;
}

impl DualFloat for f32 {
    const ZERO_DIVISOR_EPS: Self = 1e-6;
    const UNIT_EPS: Self = 1e-4;
    const QUAD_TOL: Self = 1e-6;
    const CURVATURE_EPS: Self = 1e-4;
    const TORSION_EPS: Self = 1e-4;
    const APPROX_TOL: Self = 1e-4;
}

/// Componentwise absolute-plus-relative comparison used throughout the
/// test suites: `|a - b| <= abs + rel * max(|a|, |b|)`.
#[inline]
pub fn approx_eq_scalar<T: DualFloat>(a: T, b: T, abs: T, rel: T) -> bool {
    let diff = (a - b).abs();
    diff <= abs + rel * a.abs().max(b.abs())
}
