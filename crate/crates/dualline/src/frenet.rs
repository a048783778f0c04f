//! The moving dual Frenet frame along a dual space curve.
//!
//! All frame derivatives are taken with respect to the dual arc length:
//! the tangent is `α̃' / |α̃'|` with the dual norm, which is what makes
//! the frame exactly orthonormal (`g = 1 + ε0`) and the Frenet relations
//!
//! ```text
//! dT/ds̄ =        k̄1 N
//! dN/ds̄ = -k̄1 T        + k̄2 B
//! dB/ds̄ =       -k̄2 N
//! ```
//!
//! hold with dual curvature `k̄1` and dual torsion `k̄2`. For a curve with
//! zero moment part and unit real speed this reduces to the classical
//! real Frenet apparatus. The whole construction is evaluated with jet
//! arithmetic on the local coordinate jets, so no nested numerical
//! differentiation is involved; the torsion is extracted as `g(N', B)`
//! and, as a cross-check, as `-g(B', N)`.

use crate::curve::{jet_cross, jet_diff, jet_dot, jet_scale, jet_value, DerivativeMode, DualCurve};
use crate::dual::Dual;
use crate::dvec3::DualVec3;
use crate::error::{Error, Result};
use crate::scalar::DualFloat;

/// Frenet data at one parameter value.
#[derive(Debug, Clone, Copy)]
pub struct FrenetSample<T> {
    /// Curve parameter (the arc length when the curve is unit-speed).
    pub s: T,
    /// Curve point `α̃(s)`.
    pub position: DualVec3<T>,
    pub tangent: DualVec3<T>,
    pub normal: DualVec3<T>,
    pub binormal: DualVec3<T>,
    /// Dual curvature `k̄1` (positive real part).
    pub curvature: Dual<T>,
    /// Dual torsion `k̄2`.
    pub torsion: Dual<T>,
}

/// Frame plus the derived quantities the classifiers need.
#[derive(Debug, Clone, Copy)]
pub(crate) struct FrenetData<T> {
    pub sample: FrenetSample<T>,
    /// Dual speed `|α̃'(t)|`; converts parameter rates to arc-length rates.
    pub speed: Dual<T>,
    /// `d/ds̄ (1/k̄1)`.
    pub inv_curvature_rate: Dual<T>,
    /// Torsion via the binormal: `-g(dB/ds̄, N)`.
    pub torsion_alt: Dual<T>,
}

pub(crate) fn frenet_data<T: DualFloat>(
    curve: &DualCurve<T>,
    s: T,
    mode: DerivativeMode,
) -> Result<FrenetData<T>> {
    let a = curve.jets(s, mode)?;

    // validity degrees: a is 4 (3 in finite-difference mode), and each
    // derivative or product below drops it by one; every value read out
    // at the end sits inside the valid range
    let a1 = jet_diff(&a);
    let speed_sq = jet_dot(&a1, &a1);
    if speed_sq.value().real < T::lit(1e-16) {
        return Err(Error::SingularIndicatrix {
            t: s.to_f64().unwrap_or(f64::NAN),
            speed: speed_sq
                .value()
                .real
                .max(T::zero())
                .sqrt()
                .to_f64()
                .unwrap_or(f64::NAN),
        });
    }
    let speed = speed_sq.sqrt()?;
    let inv_speed = speed.recip()?;

    let tangent = jet_scale(&a1, &inv_speed);
    let dt_dsbar = jet_scale(&jet_diff(&tangent), &inv_speed);

    let curv_sq = jet_dot(&dt_dsbar, &dt_dsbar);
    let k1_real = curv_sq.value().real.max(T::zero()).sqrt();
    if k1_real < T::CURVATURE_EPS {
        return Err(Error::VanishingCurvature {
            s: s.to_f64().unwrap_or(f64::NAN),
            k1: k1_real.to_f64().unwrap_or(f64::NAN),
        });
    }
    let curvature = curv_sq.sqrt()?;
    let inv_curvature = curvature.recip()?;

    let normal = jet_scale(&dt_dsbar, &inv_curvature);
    let binormal = jet_cross(&tangent, &normal);

    let dn_dsbar = jet_scale(&jet_diff(&normal), &inv_speed);
    let db_dsbar = jet_scale(&jet_diff(&binormal), &inv_speed);

    let torsion = jet_dot(&dn_dsbar, &binormal).value();
    let torsion_alt = -jet_dot(&db_dsbar, &normal).value();

    let inv_curvature_rate = inv_curvature.differentiate().value() * inv_speed.value();

    Ok(FrenetData {
        sample: FrenetSample {
            s,
            position: jet_value(&a),
            tangent: jet_value(&tangent),
            normal: jet_value(&normal),
            binormal: jet_value(&binormal),
            curvature: curvature.value(),
            torsion,
        },
        speed: speed.value(),
        inv_curvature_rate,
        torsion_alt,
    })
}

/// Computes the dual Frenet frame, curvature and torsion at `s`.
pub fn frenet_apparatus<T: DualFloat>(
    curve: &DualCurve<T>,
    s: T,
    mode: DerivativeMode,
) -> Result<FrenetSample<T>> {
    Ok(frenet_data(curve, s, mode)?.sample)
}

/// Difference between the two torsion extractions `g(N', B)` and
/// `-g(B', N)`; a consistency diagnostic that should vanish to the
/// differentiation accuracy.
pub fn torsion_route_difference<T: DualFloat>(
    curve: &DualCurve<T>,
    s: T,
    mode: DerivativeMode,
) -> Result<Dual<T>> {
    let d = frenet_data(curve, s, mode)?;
    Ok(d.sample.torsion - d.torsion_alt)
}

impl<T: DualFloat> FrenetSample<T> {
    /// Largest deviation of the frame from dual orthonormality.
    pub fn orthonormality_residual(&self) -> T {
        let one = Dual::one();
        let z = Dual::zero();
        let pairs = [
            (self.tangent.dot(self.tangent), one),
            (self.normal.dot(self.normal), one),
            (self.binormal.dot(self.binormal), one),
            (self.tangent.dot(self.normal), z),
            (self.tangent.dot(self.binormal), z),
            (self.normal.dot(self.binormal), z),
        ];
        let mut worst = T::zero();
        for (got, want) in pairs {
            worst = worst.max((got - want).max_abs());
        }
        // B must equal T × N as well
        worst.max((self.tangent.cross(self.normal) - self.binormal).max_abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::curve::SeriesCurve;
    use crate::series::Series;
    use crate::vec3::Vec3;

    #[test]
    fn study_circle_apparatus_at_zero() {
        let c = catalog::study_circle::<f64>();
        let f = frenet_apparatus(&c, 0.0, DerivativeMode::Exact).unwrap();
        assert!(f.tangent.real.approx_eq(Vec3::new(0.0, 1.0, 0.0)));
        assert!((f.curvature.real - 1.0).abs() < 1e-12);
        assert!(f.curvature.dual.abs() < 1e-12);
        // planar line family: dual torsion vanishes identically
        assert!(f.torsion.max_abs() < 1e-12);
        // the principal normal points back along the position
        assert!((f.normal + f.position).max_abs() < 1e-10);
    }

    #[test]
    fn helix_matches_classical_values() {
        let (a, b) = (2.0f64, 1.0);
        let c2 = a * a + b * b;
        let h = catalog::real_helix::<f64>(a, b);
        for mode in [DerivativeMode::Exact, DerivativeMode::FiniteDifference] {
            let f = frenet_apparatus(&h, 2.0, mode).unwrap();
            let tol = if mode == DerivativeMode::Exact { 1e-10 } else { 1e-6 };
            assert!((f.curvature.real - a / c2).abs() < tol, "{mode:?}");
            assert!((f.torsion.real - b / c2).abs() < tol, "{mode:?}");
            // zero moment part: all dual components vanish
            assert!(f.curvature.dual.abs() < tol);
            assert!(f.torsion.dual.abs() < tol);
            assert!(f.tangent.dual.norm().abs() < tol);
        }
    }

    #[test]
    fn frame_is_orthonormal_at_random_parameters() {
        let c = catalog::study_circle::<f64>();
        let mut state = 0xfeed_5eedu64;
        for _ in 0..50 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let s = 0.1 + 6.0 * ((state >> 11) as f64 / (1u64 << 53) as f64);
            let f = frenet_apparatus(&c, s, DerivativeMode::Exact).unwrap();
            assert!(f.orthonormality_residual() < 1e-8, "s = {s}");
        }
    }

    #[test]
    fn torsion_routes_agree() {
        let curve = DualCurve::from_series(
            "twisted",
            (0.0, 1.5),
            SeriesCurve {
                real: [
                    Series::constant(1.5).plus(Series::cos(0.4, 1.0)),
                    Series::sin(0.9, 1.0),
                    Series::sin(0.5, 2.0),
                ],
                dual: [
                    Series::poly(&[0.2, 0.1]),
                    Series::cos(0.25, 1.0),
                    Series::sin(0.1, 1.0),
                ],
            },
        )
        .normalized()
        .unwrap();
        for i in 0..=10 {
            let s = 1.5 * (i as f64) / 10.0;
            let d = frenet_data(&curve, s, DerivativeMode::Exact).unwrap();
            assert!(
                (d.sample.torsion - d.torsion_alt).max_abs() < 1e-9,
                "s = {s}: {:?} vs {:?}",
                d.sample.torsion,
                d.torsion_alt
            );
        }
    }

    #[test]
    fn straight_line_has_no_frame() {
        let line = DualCurve::from_series(
            "line",
            (0.0, 1.0),
            SeriesCurve {
                real: [Series::poly(&[0.0, 1.0]), Series::zero(), Series::zero()],
                dual: [Series::zero(), Series::zero(), Series::zero()],
            },
        );
        assert!(matches!(
            frenet_apparatus(&line, 0.5, DerivativeMode::Exact),
            Err(Error::VanishingCurvature { .. })
        ));
    }

    #[test]
    fn frenet_relations_hold_against_outer_differences() {
        // independent oracle: differentiate the frame fields numerically
        // and compare with the Frenet right-hand sides
        let c = catalog::study_circle::<f64>();
        let h = 1e-3;
        for i in 1..8 {
            let s = 0.4 + (i as f64) * 0.7;
            let d0 = frenet_data(&c, s, DerivativeMode::Exact).unwrap();
            let num = |field: &dyn Fn(FrenetSample<f64>) -> DualVec3<f64>| {
                let fp = |x: f64| {
                    field(frenet_apparatus(&c, x, DerivativeMode::Exact).unwrap())
                };
                // five-point first derivative, converted to d/ds̄
                let d = (fp(s - 2.0 * h) - fp(s + 2.0 * h)
                    + (fp(s + h) - fp(s - h)).scale(Dual::from_real(8.0)))
                .scale(Dual::from_real(1.0 / (12.0 * h)));
                d.scale(d0.speed.inv().unwrap())
            };
            let f = d0.sample;
            let r1 = (num(&|x| x.tangent) - f.normal.scale(f.curvature)).max_abs();
            let r2 = (num(&|x| x.normal) + f.tangent.scale(f.curvature)
                - f.binormal.scale(f.torsion))
            .max_abs();
            let r3 = (num(&|x| x.binormal) + f.normal.scale(f.torsion)).max_abs();
            assert!(r1 < 1e-9 && r2 < 1e-9 && r3 < 1e-9, "s = {s}: {r1:e} {r2:e} {r3:e}");
        }
    }
}
