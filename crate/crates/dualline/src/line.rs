//! Oriented lines and the Study correspondence.
//!
//! An oriented line through point `p` with unit direction `a` is encoded
//! by the dual unit vector `(a, p × a)`; conversely a dual unit vector
//! with perpendicular moment decodes to a line whose representative point
//! is the foot of the common perpendicular from the origin. The dual
//! angle between two such vectors carries the real angle between the
//! lines in its real part and (minus) their shortest distance in its
//! dual part.

use crate::dual::Dual;
use crate::dvec3::DualVec3;
use crate::error::{Error, Result};
use crate::scalar::DualFloat;
use crate::vec3::Vec3;

/// Oriented line given by a point on it and a unit direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line<T> {
    pub point: Vec3<T>,
    pub direction: Vec3<T>,
}

impl<T: DualFloat> Line<T> {
    /// Validates that the direction is unit length.
    pub fn new(point: Vec3<T>, direction: Vec3<T>) -> Result<Self> {
        if (direction.norm() - T::one()).abs() > T::UNIT_EPS {
            return Err(Error::NotUnitDirection {
                norm: direction.norm().to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { point, direction })
    }

    /// Builds a line through `point` along `direction`, normalizing the
    /// direction first.
    pub fn through(point: Vec3<T>, direction: Vec3<T>) -> Result<Self> {
        let direction = direction.normalized().ok_or(Error::NotUnitDirection {
            norm: 0.0,
        })?;
        Ok(Self { point, direction })
    }

    /// Moment of the line about the origin, `p × a`.
    #[inline]
    pub fn moment(&self) -> Vec3<T> {
        self.point.cross(self.direction)
    }
}

/// Encodes a line as a dual unit vector `(a, p × a)`.
pub fn line_to_dual<T: DualFloat>(line: &Line<T>) -> Result<DualVec3<T>> {
    let n = line.direction.norm();
    if (n - T::one()).abs() > T::UNIT_EPS {
        return Err(Error::NotUnitDirection {
            norm: n.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(DualVec3::new(line.direction, line.moment()))
}

/// Decodes a dual unit vector into the line it represents. The returned
/// point is `a × a*`, the foot of the common perpendicular from the
/// origin, which makes the round trip through [`line_to_dual`] exact.
pub fn dual_to_line<T: DualFloat>(v: &DualVec3<T>) -> Result<Line<T>> {
    let n = v.real.norm();
    if (n - T::one()).abs() > T::UNIT_EPS {
        return Err(Error::NotUnit {
            real_dev: (n - T::one()).abs().to_f64().unwrap_or(f64::NAN),
            dual_dev: 0.0,
        });
    }
    let inner = v.real.dot(v.dual);
    if inner.abs() > T::UNIT_EPS {
        return Err(Error::MomentNotPerpendicular {
            inner: inner.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(Line {
        point: v.real.cross(v.dual),
        direction: v.real,
    })
}

/// Dual angle between two dual unit vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualAngle<T> {
    /// `theta + ε theta*`: real angle between the lines plus the signed
    /// perpendicular offset.
    pub angle: Dual<T>,
    /// `|theta*|`, the shortest distance between the lines.
    pub distance: T,
}

/// Computes the dual angle from `g(a~, b~) = cos(theta) - ε theta* sin(theta)`.
///
/// Exactly equal inputs return the zero angle by convention; inputs with
/// (anti)parallel real parts are rejected because the offset is not
/// determined by the scalar product there.
pub fn dual_angle<T: DualFloat>(a: &DualVec3<T>, b: &DualVec3<T>) -> Result<DualAngle<T>> {
    for v in [a, b] {
        let (dr, dd) = v.unit_deviation();
        if dr > T::UNIT_EPS || dd > T::UNIT_EPS {
            return Err(Error::NotUnit {
                real_dev: dr.to_f64().unwrap_or(f64::NAN),
                dual_dev: dd.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    if a == b {
        return Ok(DualAngle {
            angle: Dual::zero(),
            distance: T::zero(),
        });
    }
    let g = a.dot(*b);
    let c = g.real.min(T::one()).max(-T::one());
    let theta = c.acos();
    let sin_theta = theta.sin();
    if sin_theta < T::UNIT_EPS {
        return Err(Error::ParallelLines {
            sin_theta: sin_theta.to_f64().unwrap_or(f64::NAN),
        });
    }
    let theta_star = -g.dual / sin_theta;
    Ok(DualAngle {
        angle: Dual::new(theta, theta_star),
        distance: theta_star.abs(),
    })
}
