//! Dual-number line geometry.
//!
//! Computation over the ring of dual numbers `a + ε a*` (`ε² = 0`) and
//! dual 3-vectors, where unit dual vectors encode oriented lines of
//! Euclidean space (the Study correspondence). On top of the algebra the
//! crate provides:
//!
//! - curves in dual 3-space with exact (series/jet) or finite-difference
//!   differentiation, dual arc length and arc-length reparametrization;
//! - the moving dual Frenet frame with dual curvature and torsion;
//! - classification of normal and dual-spherical curves, including the
//!   sinusoidal reciprocal-curvature fit and the radius constraint that
//!   links the two characterizations;
//! - ruled-surface synthesis: a dual-unit-sphere curve is swept into the
//!   surface its lines trace, exported as OBJ or CSV.
//!
//! The core is generic over the scalar type (`f32` or `f64`) through
//! [`DualFloat`]; the `*64`/`*32` aliases below pin the common choices.

pub mod catalog;
pub mod classify;
pub mod curve;
pub mod dual;
pub mod dvec3;
pub mod error;
pub mod frenet;
mod jet;
pub mod line;
pub mod quad;
pub mod scalar;
pub mod series;
pub mod surface;
pub mod vec3;

pub use classify::{
    classify, fit_curvature_solution, normal_curve_test, normal_identity_residual,
    position_decomposition, radius_constraint, sphere_center_radius, spherical_test,
    Classification, ClassifyConfig, DualResidual, NormalFit, NormalVerdict, RadiusConstraint,
    SphereFit,
};
pub use curve::{DerivativeMode, DualCurve, SeriesCurve};
pub use dual::Dual;
pub use dvec3::DualVec3;
pub use error::{Error, Result};
pub use frenet::{frenet_apparatus, torsion_route_difference, FrenetSample};
pub use line::{dual_angle, dual_to_line, line_to_dual, DualAngle, Line};
pub use quad::{integrate, integrate_dual};
pub use scalar::DualFloat;
pub use series::{Series, Term, Trig};
pub use surface::{export_csv, export_obj, ruled_surface_from_dual_curve, RuledSurfaceMesh};
pub use vec3::Vec3;

/// Concrete aliases for the double-precision instantiation used by the
/// CLI and most applications.
pub type Dual64 = Dual<f64>;
pub type DualVec64 = DualVec3<f64>;
pub type Vec64 = Vec3<f64>;
pub type Line64 = Line<f64>;
pub type Curve64 = DualCurve<f64>;
pub type FrenetSample64 = FrenetSample<f64>;

/// Single-precision aliases.
pub type Dual32 = Dual<f32>;
pub type DualVec32 = DualVec3<f32>;
pub type Vec32 = Vec3<f32>;
pub type Line32 = Line<f32>;
pub type Curve32 = DualCurve<f32>;
