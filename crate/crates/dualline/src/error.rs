//! Error type shared by all modules.
//!
//! Diagnostics are stored as `f64` regardless of the scalar type so the
//! error enum stays non-generic.

use thiserror::Error;

/// Library result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Inverting a dual number whose real part is (numerically) zero.
    #[error("division by a pure dual number: real part {real:e} is below the zero-divisor threshold")]
    DivisionByPureDual { real: f64 },

    /// Square root of a dual number with non-positive real part.
    #[error("dual square root undefined: real part {real:e} is not positive")]
    NonPositiveRealPart { real: f64 },

    /// Norm or normalization of a dual vector with vanishing real part.
    #[error("dual norm singular: real part has length {norm:e}")]
    ZeroRealPart { norm: f64 },

    /// A dual vector expected on the dual unit sphere is not unit.
    #[error("dual vector is not unit: |g(v,v) - 1| = ({real_dev:e}, {dual_dev:e})")]
    NotUnit { real_dev: f64, dual_dev: f64 },

    /// The moment part of a dual vector is not perpendicular to its
    /// direction part, so it does not encode a line.
    #[error("moment not perpendicular to direction: <a, a*> = {inner:e}")]
    MomentNotPerpendicular { inner: f64 },

    /// A line direction that is not unit length.
    #[error("line direction is not unit: |direction| = {norm}")]
    NotUnitDirection { norm: f64 },

    /// Dual angle between (anti)parallel lines: the offset part is not
    /// recoverable from the dual scalar product there.
    #[error("dual angle undefined for parallel lines: sin(theta) = {sin_theta:e}")]
    ParallelLines { sin_theta: f64 },

    /// Parameter outside the curve domain (including stencil margin).
    #[error("parameter {t} outside usable domain [{lo}, {hi}]")]
    OutOfDomain { t: f64, lo: f64, hi: f64 },

    /// Derivative order outside the supported range 1..=4.
    #[error("unsupported derivative order {order}; supported orders are 1..=4")]
    UnsupportedOrder { order: usize },

    /// Exact derivatives requested on a curve that does not provide them.
    #[error("curve '{name}' has no exact derivative evaluators")]
    ExactDerivativesUnavailable { name: String },

    /// The indicatrix (real part of the curve) has vanishing speed.
    #[error("singular indicatrix: |alpha'(t)| = {speed:e} at t = {t}")]
    SingularIndicatrix { t: f64, speed: f64 },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature did not converge: error estimate {estimate:e} over [{a}, {b}]")]
    QuadratureNonConvergence { a: f64, b: f64, estimate: f64 },

    /// Real curvature below threshold: the Frenet frame is undefined.
    #[error("vanishing curvature at s = {s}: k1 = {k1:e}")]
    VanishingCurvature { s: f64, k1: f64 },

    /// Real torsion below threshold where a 1/k2 ratio is required.
    #[error("vanishing torsion at s = {s}: k2 = {k2:e} with non-negligible (1/k1)' = {numerator:e}")]
    VanishingTorsion { s: f64, k2: f64, numerator: f64 },

    /// Least-squares normal equations too ill-conditioned to trust.
    #[error("ill-conditioned fit: condition estimate {condition:e} exceeds {threshold:e}")]
    IllConditionedFit { condition: f64, threshold: f64 },

    /// Neither sign choice reconciles the fitted coefficient with the
    /// sphere radius.
    #[error("inconsistent fits: |c1 -/+ sqrt(r^2 - c2^2)| = ({plus:e}, {minus:e})")]
    InconsistentFits { plus: f64, minus: f64 },

    /// A curve fed to the Study map is not on the dual unit sphere.
    #[error("curve point at s = {s} not on the dual unit sphere: residual ({real_dev:e}, {dual_dev:e})")]
    NotOnDualUnitSphere {
        s: f64,
        real_dev: f64,
        dual_dev: f64,
    },

    /// Writing a mesh or table failed.
    #[error("i/o failure: {message}")]
    IoFailure { message: String },
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::IoFailure {
            message: e.to_string(),
        }
    }
}
