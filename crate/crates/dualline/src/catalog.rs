//! Built-in curves.

use crate::curve::{DualCurve, SeriesCurve};
use crate::scalar::DualFloat;
use crate::series::Series;

/// The unit-circle family of lines: real part a unit circle, moment part
/// `(-t sin t, t cos t, 0)`. Lies on the dual unit sphere and maps to a
/// helicoid under the Study correspondence.
pub fn study_circle<T: DualFloat>() -> DualCurve<T> {
    let one = T::one();
    DualCurve::from_series(
        "study_circle",
        (T::zero(), T::lit(2.0) * T::PI()),
        SeriesCurve {
            real: [Series::cos(one, one), Series::sin(one, one), Series::zero()],
            dual: [
                Series::poly_sin(-one, 1, one),
                Series::poly_cos(one, 1, one),
                Series::zero(),
            ],
        },
    )
}

/// Unit circle with zero moment part: a pencil of lines through the
/// origin sweeping a plane.
pub fn great_circle<T: DualFloat>() -> DualCurve<T> {
    let one = T::one();
    DualCurve::from_series(
        "great_circle",
        (T::zero(), T::lit(2.0) * T::PI()),
        SeriesCurve {
            real: [Series::cos(one, one), Series::sin(one, one), Series::zero()],
            dual: [Series::zero(), Series::zero(), Series::zero()],
        },
    )
}

/// Circular helix of radius `a` and pitch parameter `b`, parametrized by
/// arc length, embedded with zero moment part. Classical curvature and
/// torsion are `a/(a²+b²)` and `b/(a²+b²)`.
pub fn real_helix<T: DualFloat>(a: T, b: T) -> DualCurve<T> {
    let c = (a * a + b * b).sqrt();
    let freq = c.recip();
    DualCurve::from_series(
        "real_helix",
        (T::zero(), T::lit(2.0) * T::PI() * c),
        SeriesCurve {
            real: [
                Series::cos(a, freq),
                Series::sin(a, freq),
                Series::poly(&[T::zero(), b * freq]),
            ],
            dual: [Series::zero(), Series::zero(), Series::zero()],
        },
    )
}

/// Names of the curves this module provides.
pub const BUILTIN_NAMES: [&str; 3] = ["study_circle", "great_circle", "real_helix"];

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn study_circle_is_on_dual_unit_sphere() {
        let c = study_circle::<f64>();
        for i in 0..=32 {
            let s = 2.0 * PI * (i as f64) / 32.0;
            let (dr, dd) = c.eval(s).unit_deviation();
            assert!(dr < 1e-14 && dd < 1e-14, "s = {s}");
        }
    }

    #[test]
    fn helix_is_unit_speed_but_not_on_sphere() {
        let h = real_helix::<f64>(2.0, 1.0);
        let v = h
            .derivative(1.0, 1, crate::curve::DerivativeMode::Exact)
            .unwrap();
        assert!((v.real.norm() - 1.0).abs() < 1e-12);
        let (dr, _) = h.eval(3.0).unit_deviation();
        assert!(dr > 0.1);
    }
}
