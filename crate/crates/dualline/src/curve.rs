//! Dual space curves: evaluation, differentiation, arc length and
//! reparametrization.
//!
//! A curve is an evaluator `t -> (α(t), α*(t))` plus, optionally, an
//! exact local jet (value and derivatives up to order four). Series
//! curves carry exact jets by construction; normalization and arc-length
//! reparametrization propagate them through jet arithmetic, so curves
//! built from closed-form data stay exactly differentiable through every
//! transformation. Everything else falls back to five-point central
//! stencils with one Richardson refinement.

use std::sync::Arc;

use crate::dual::Dual;
use crate::dvec3::DualVec3;
use crate::error::{Error, Result};
use crate::jet::{inverse_speed_jet, lift_real_jet, Jet, JET_LEN};
use crate::quad::{try_integrate, MAX_DEPTH};
use crate::scalar::DualFloat;
use crate::series::Series;
use crate::vec3::Vec3;

/// How derivatives are obtained from a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DerivativeMode {
    /// Use the curve's exact jet; errors if the curve has none.
    Exact,
    /// Central finite differences with Richardson refinement, applied to
    /// the real and dual parts independently.
    #[default]
    FiniteDifference,
}

type EvalFn<T> = Arc<dyn Fn(T) -> DualVec3<T> + Send + Sync>;
pub(crate) type CurveJet<T> = [Jet<Dual<T>>; 3];
type JetFn<T> = Arc<dyn Fn(T) -> Result<CurveJet<T>> + Send + Sync>;

/// Per-order multipliers on the base finite-difference step. Higher
/// orders divide by higher powers of h, so they need larger steps to
/// stay above the rounding floor.
const STEP_FACTORS: [f64; 4] = [1.0, 20.0, 80.0, 120.0];
/// Truncation order of the five-point stencil per derivative order.
const STENCIL_ORDER: [i32; 4] = [4, 4, 2, 2];

/// Base step `max(1e-4, cbrt(machine eps) * scale)`.
fn fd_base_step<T: DualFloat>(t: T) -> T {
    let scale = T::one().max(t.abs());
    T::lit(1e-4).max(T::epsilon().cbrt() * scale)
}

pub(crate) fn fd_step<T: DualFloat>(order: usize, t: T) -> T {
    fd_base_step(t) * T::lit(STEP_FACTORS[order - 1])
}

/// Five-point central stencil for derivative `order` with step `h`.
fn stencil<T: DualFloat>(
    f: &(impl Fn(T) -> DualVec3<T> + ?Sized),
    t: T,
    order: usize,
    h: T,
) -> DualVec3<T> {
    let two = T::lit(2.0);
    let fp1 = f(t + h);
    let fm1 = f(t - h);
    let fp2 = f(t + two * h);
    let fm2 = f(t - two * h);
    match order {
        1 => (fm2 - fp2 + (fp1 - fm1).scale(Dual::from_real(T::lit(8.0))))
            .scale(Dual::from_real((T::lit(12.0) * h).recip())),
        2 => {
            let f0 = f(t);
            ((fp1 + fm1).scale(Dual::from_real(T::lit(16.0)))
                - (fp2 + fm2)
                - f0.scale(Dual::from_real(T::lit(30.0))))
            .scale(Dual::from_real((T::lit(12.0) * h * h).recip()))
        }
        3 => (fp2 - fm2 + (fm1 - fp1).scale(Dual::from_real(two)))
            .scale(Dual::from_real((two * h * h * h).recip())),
        4 => {
            let f0 = f(t);
            (fp2 + fm2 + f0.scale(Dual::from_real(T::lit(6.0)))
                - (fp1 + fm1).scale(Dual::from_real(T::lit(4.0))))
            .scale(Dual::from_real((h * h * h * h).recip()))
        }
        _ => unreachable!("orders are validated by callers"),
    }
}

/// Stencil at `h` and `h/2` combined by one Richardson step.
pub(crate) fn fd_derivative<T: DualFloat>(
    f: &(impl Fn(T) -> DualVec3<T> + ?Sized),
    t: T,
    order: usize,
    h: T,
) -> DualVec3<T> {
    let coarse = stencil(f, t, order, h);
    let fine = stencil(f, t, order, h * T::lit(0.5));
    let w = T::lit(2f64.powi(STENCIL_ORDER[order - 1]));
    (fine.scale(Dual::from_real(w)) - coarse).scale(Dual::from_real((w - T::one()).recip()))
}

/// A parametrized curve in dual 3-space.
#[derive(Clone)]
pub struct DualCurve<T> {
    eval: EvalFn<T>,
    exact_jet: Option<JetFn<T>>,
    domain: (T, T),
    name: String,
}

/// The six coordinate functions of a series-defined curve.
#[derive(Debug, Clone, Default)]
pub struct SeriesCurve<T> {
    pub real: [Series<T>; 3],
    pub dual: [Series<T>; 3],
}

impl<T: DualFloat> DualCurve<T> {
    /// Wraps a plain evaluator; derivatives will use finite differences.
    ///
    /// The evaluator must remain well defined slightly outside the stated
    /// domain: stencils may sample up to the stencil margin beyond it.
    pub fn from_fn(
        name: impl Into<String>,
        domain: (T, T),
        eval: impl Fn(T) -> DualVec3<T> + Send + Sync + 'static,
    ) -> Self {
        Self {
            eval: Arc::new(eval),
            exact_jet: None,
            domain,
            name: name.into(),
        }
    }

    /// Builds a curve from closed-form series coordinates; carries exact
    /// jets obtained by term-by-term differentiation.
    pub fn from_series(name: impl Into<String>, domain: (T, T), series: SeriesCurve<T>) -> Self {
        // precompute derivative series up to order 4 for all coordinates
        let mut table: Vec<[Series<T>; 6]> = Vec::with_capacity(JET_LEN);
        let row0 = [
            series.real[0].clone(),
            series.real[1].clone(),
            series.real[2].clone(),
            series.dual[0].clone(),
            series.dual[1].clone(),
            series.dual[2].clone(),
        ];
        table.push(row0);
        for k in 1..JET_LEN {
            let prev = &table[k - 1];
            table.push([
                prev[0].derivative(),
                prev[1].derivative(),
                prev[2].derivative(),
                prev[3].derivative(),
                prev[4].derivative(),
                prev[5].derivative(),
            ]);
        }
        let table = Arc::new(table);

        let eval_table = Arc::clone(&table);
        let eval = move |t: T| {
            let row = &eval_table[0];
            DualVec3::new(
                Vec3::new(row[0].eval(t), row[1].eval(t), row[2].eval(t)),
                Vec3::new(row[3].eval(t), row[4].eval(t), row[5].eval(t)),
            )
        };

        let jet_table = Arc::clone(&table);
        let jets = move |t: T| -> Result<CurveJet<T>> {
            let mut out = [Jet::constant(Dual::zero()); 3];
            for (i, jet) in out.iter_mut().enumerate() {
                let mut derivs = [Dual::zero(); JET_LEN];
                for (k, d) in derivs.iter_mut().enumerate() {
                    *d = Dual::new(jet_table[k][i].eval(t), jet_table[k][i + 3].eval(t));
                }
                *jet = Jet::from_derivatives(derivs);
            }
            Ok(out)
        };

        Self {
            eval: Arc::new(eval),
            exact_jet: Some(Arc::new(jets)),
            domain,
            name: name.into(),
        }
    }

    pub fn eval(&self, t: T) -> DualVec3<T> {
        (self.eval)(t)
    }

    pub fn domain(&self) -> (T, T) {
        self.domain
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn has_exact_derivatives(&self) -> bool {
        self.exact_jet.is_some()
    }

    /// Returns a copy with a different name (useful for derived curves).
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Returns a copy restricted (or extended) to a different parameter
    /// window; the evaluator itself is unchanged.
    pub fn with_domain(mut self, domain: (T, T)) -> Self {
        self.domain = domain;
        self
    }

    /// How far finite-difference stencils reach beyond a sample point.
    pub fn stencil_margin(&self, mode: DerivativeMode) -> T {
        match mode {
            DerivativeMode::Exact => T::zero(),
            DerivativeMode::FiniteDifference => {
                let edge = self.domain.0.abs().max(self.domain.1.abs());
                T::lit(2.0) * fd_step(4, edge)
            }
        }
    }

    fn check_in_domain(&self, t: T) -> Result<()> {
        let (lo, hi) = self.domain;
        let slack = T::lit(1e-9) * T::one().max(hi.abs()).max(lo.abs());
        if t < lo - slack || t > hi + slack {
            return Err(Error::OutOfDomain {
                t: t.to_f64().unwrap_or(f64::NAN),
                lo: lo.to_f64().unwrap_or(f64::NAN),
                hi: hi.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(())
    }

    /// Derivative of the curve at `t`, orders 1 through 4, real and dual
    /// parts differentiated independently.
    pub fn derivative(&self, t: T, order: usize, mode: DerivativeMode) -> Result<DualVec3<T>> {
        if !(1..=4).contains(&order) {
            return Err(Error::UnsupportedOrder { order });
        }
        self.check_in_domain(t)?;
        self.derivative_unchecked(t, order, mode)
    }

    /// Derivative without the domain check; used where controlled
    /// extrapolation slightly past the ends is intended.
    fn derivative_unchecked(&self, t: T, order: usize, mode: DerivativeMode) -> Result<DualVec3<T>> {
        match mode {
            DerivativeMode::Exact => {
                let jets = self.exact_jets(t)?;
                Ok(DualVec3::from_components([
                    jets[0].derivative_value(order),
                    jets[1].derivative_value(order),
                    jets[2].derivative_value(order),
                ]))
            }
            DerivativeMode::FiniteDifference => {
                Ok(fd_derivative(&*self.eval, t, order, fd_step(order, t)))
            }
        }
    }

    fn exact_jets(&self, t: T) -> Result<CurveJet<T>> {
        match &self.exact_jet {
            Some(jets) => jets(t),
            None => Err(Error::ExactDerivativesUnavailable {
                name: self.name.clone(),
            }),
        }
    }

    /// Local coordinate jets. In finite-difference mode the jet carries
    /// orders 0..=3 (the order-4 slot is zeroed): everything downstream
    /// reads at most third derivatives, and the order-4 stencil is too
    /// noisy to be worth paying for.
    pub(crate) fn jets(&self, t: T, mode: DerivativeMode) -> Result<CurveJet<T>> {
        self.check_in_domain(t)?;
        match mode {
            DerivativeMode::Exact => self.exact_jets(t),
            DerivativeMode::FiniteDifference => {
                let v0 = self.eval(t);
                let d1 = fd_derivative(&*self.eval, t, 1, fd_step(1, t));
                let d2 = fd_derivative(&*self.eval, t, 2, fd_step(2, t));
                let d3 = fd_derivative(&*self.eval, t, 3, fd_step(3, t));
                let mut out = [Jet::constant(Dual::zero()); 3];
                for (i, jet) in out.iter_mut().enumerate() {
                    *jet = Jet::from_derivatives([
                        v0.component(i),
                        d1.component(i),
                        d2.component(i),
                        d3.component(i),
                        Dual::zero(),
                    ]);
                }
                Ok(out)
            }
        }
    }

    /// Speed of the indicatrix `|α'(t)|`.
    fn real_speed(&self, t: T, mode: DerivativeMode) -> Result<T> {
        let d1 = self.derivative(t, 1, mode)?;
        Ok(d1.real.norm())
    }

    /// Dual arc length over `[t0, t1]`: the quadrature of the dual norm
    /// of the derivative, `s + ε ∫ g(T, dα*/dt) dt`.
    pub fn arc_length(&self, t0: T, t1: T, mode: DerivativeMode) -> Result<Dual<T>> {
        try_integrate_speed(self, t0, t1, mode)
    }

    /// Componentwise-scaled and translated copy. Scaling acts on both the
    /// direction and moment parts coordinate by coordinate; the offset is
    /// added to the value only, so exact jets survive.
    pub fn affine(&self, scale: [T; 3], offset: DualVec3<T>) -> Self {
        let base_eval = Arc::clone(&self.eval);
        let eval = move |t: T| {
            let v = base_eval(t);
            DualVec3::new(
                Vec3::new(v.real.x * scale[0], v.real.y * scale[1], v.real.z * scale[2]),
                Vec3::new(v.dual.x * scale[0], v.dual.y * scale[1], v.dual.z * scale[2]),
            ) + offset
        };
        let exact_jet = self.exact_jet.as_ref().map(|jets| {
            let base = Arc::clone(jets);
            let f: JetFn<T> = Arc::new(move |t: T| {
                let mut j = base(t)?;
                for i in 0..3 {
                    j[i] = j[i].scale(Dual::from_real(scale[i]));
                    j[i].0[0] = j[i].0[0] + offset.component(i);
                }
                Ok(j)
            });
            f
        });
        Self {
            eval: Arc::new(eval),
            exact_jet,
            domain: self.domain,
            name: format!("{}~affine", self.name),
        }
    }

    /// Projects the curve pointwise onto the dual unit sphere. Exact jets
    /// propagate through the normalization when the base curve has them.
    pub fn normalized(&self) -> Result<Self> {
        // construction-time probe: the real part must stay away from zero
        let (lo, hi) = self.domain;
        let n = 257;
        for i in 0..n {
            let t = lo + (hi - lo) * T::from_usize(i).unwrap() / T::from_usize(n - 1).unwrap();
            let v = self.eval(t);
            if v.real.norm() < T::lit(1e-6) {
                return Err(Error::ZeroRealPart {
                    norm: v.real.norm().to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        let base_eval = Arc::clone(&self.eval);
        let eval = move |t: T| {
            base_eval(t)
                .normalized()
                .expect("normalization guarded at construction")
        };
        let exact_jet = self.exact_jet.as_ref().map(|jets| {
            let base = Arc::clone(jets);
            let f: JetFn<T> = Arc::new(move |t: T| {
                let a = base(t)?;
                let g = jet_dot(&a, &a);
                let inv_norm = g.sqrt()?.recip()?;
                Ok(jet_scale(&a, &inv_norm))
            });
            f
        });
        Ok(Self {
            eval: Arc::new(eval),
            exact_jet,
            domain: self.domain,
            name: format!("{}~unit", self.name),
        })
    }

    /// Reparametrizes by the real arc length of the indicatrix. The new
    /// domain is `[0, L]` and the returned curve has unit real speed.
    pub fn reparametrized_by_arc_length(&self, mode: DerivativeMode) -> Result<Self> {
        let (lo, hi) = self.domain;
        let knots = 129usize;
        let mut ts = Vec::with_capacity(knots);
        let mut cum = Vec::with_capacity(knots);
        let step = (hi - lo) / T::from_usize(knots - 1).unwrap();
        let mut acc = T::zero();
        ts.push(lo);
        cum.push(T::zero());
        for i in 1..knots {
            let a = lo + step * T::from_usize(i - 1).unwrap();
            let b = lo + step * T::from_usize(i).unwrap();
            let seg = try_integrate(
                |t| {
                    let v = self.real_speed(t, mode)?;
                    if v < T::lit(1e-8) {
                        return Err(Error::SingularIndicatrix {
                            t: t.to_f64().unwrap_or(f64::NAN),
                            speed: v.to_f64().unwrap_or(f64::NAN),
                        });
                    }
                    Ok(v)
                },
                a,
                b,
                T::QUAD_TOL,
                MAX_DEPTH,
            )?;
            acc = acc + seg;
            ts.push(b);
            cum.push(acc);
        }
        let total = acc;

        let inverter = ArcLengthInverter {
            curve: self.clone(),
            mode,
            ts,
            cum,
        };
        let inverter = Arc::new(inverter);

        let inv_eval = Arc::clone(&inverter);
        let base_eval = Arc::clone(&self.eval);
        let eval = move |s: T| base_eval(inv_eval.invert(s));

        let exact_jet = self.exact_jet.as_ref().map(|jets| {
            let base = Arc::clone(jets);
            let inv = Arc::clone(&inverter);
            let f: JetFn<T> = Arc::new(move |s: T| {
                let t0 = inv.invert(s);
                let a = base(t0)?;
                // real-coefficient speed jet around t0
                let mut real_jets = [Jet::constant(T::zero()); 3];
                for i in 0..3 {
                    for k in 0..JET_LEN {
                        real_jets[i].0[k] = a[i].0[k].real;
                    }
                }
                let d = [
                    real_jets[0].differentiate(),
                    real_jets[1].differentiate(),
                    real_jets[2].differentiate(),
                ];
                let speed_sq = d[0].mul(&d[0]).add(&d[1].mul(&d[1])).add(&d[2].mul(&d[2]));
                let speed = speed_sq.sqrt().map_err(|_| Error::SingularIndicatrix {
                    t: t0.to_f64().unwrap_or(f64::NAN),
                    speed: speed_sq.value().max(T::zero()).sqrt().to_f64().unwrap_or(f64::NAN),
                })?;
                let tau = inverse_speed_jet(&speed)?;
                let tau_dual = lift_real_jet(&tau);
                Ok([
                    a[0].compose(&tau_dual),
                    a[1].compose(&tau_dual),
                    a[2].compose(&tau_dual),
                ])
            });
            f
        });

        Ok(Self {
            eval: Arc::new(eval),
            exact_jet,
            domain: (T::zero(), total),
            name: format!("{}~arclen", self.name),
        })
    }
}

/// Monotone arc-length table with Newton refinement for `t(s)`.
struct ArcLengthInverter<T: DualFloat> {
    curve: DualCurve<T>,
    mode: DerivativeMode,
    ts: Vec<T>,
    cum: Vec<T>,
}

impl<T: DualFloat> ArcLengthInverter<T> {
    fn invert(&self, s: T) -> T {
        let n = self.cum.len();
        // nearest bracketing knot (clamped; extrapolates past the ends)
        let idx = match self
            .cum
            .binary_search_by(|c| c.partial_cmp(&s).unwrap_or(std::cmp::Ordering::Less))
        {
            Ok(i) => i,
            Err(i) => i.min(n - 1).max(1) - 1,
        };
        let idx = idx.min(n - 2);
        // linear seed inside the bracket
        let (s0, s1) = (self.cum[idx], self.cum[idx + 1]);
        let (t0, t1) = (self.ts[idx], self.ts[idx + 1]);
        let mut t = if s1 > s0 {
            t0 + (t1 - t0) * (s - s0) / (s1 - s0)
        } else {
            t0
        };
        // Newton on F(t) = cum[idx] + ∫_{ts[idx]}^{t} speed − s
        let speed_at = |t: T| {
            self.curve
                .derivative_unchecked(t, 1, self.mode)
                .expect("speed evaluation during arc-length inversion")
                .real
                .norm()
        };
        let tol = T::lit(1e-13) * T::one().max(self.cum[n - 1].abs());
        for _ in 0..30 {
            let seg = try_integrate(
                |x| Ok(speed_at(x)),
                self.ts[idx],
                t,
                T::QUAD_TOL,
                MAX_DEPTH,
            )
            .unwrap_or(T::zero());
            let f = self.cum[idx] + seg - s;
            if f.abs() <= tol {
                break;
            }
            let v = speed_at(t);
            t = t - f / v;
        }
        t
    }
}

/// Dual arc length as the integral of the dual norm of the derivative.
fn try_integrate_speed<T: DualFloat>(
    curve: &DualCurve<T>,
    t0: T,
    t1: T,
    mode: DerivativeMode,
) -> Result<Dual<T>> {
    crate::quad::try_integrate_dual(
        |t| {
            let d1 = curve.derivative(t, 1, mode)?;
            let n = d1.real.norm();
            if n < T::lit(1e-8) {
                return Err(Error::SingularIndicatrix {
                    t: t.to_f64().unwrap_or(f64::NAN),
                    speed: n.to_f64().unwrap_or(f64::NAN),
                });
            }
            d1.norm()
        },
        t0,
        t1,
        T::QUAD_TOL,
        MAX_DEPTH,
    )
}

// small vector-of-jets helpers shared with the Frenet construction

pub(crate) fn jet_dot<T: DualFloat>(a: &CurveJet<T>, b: &CurveJet<T>) -> Jet<Dual<T>> {
    a[0].mul(&b[0]).add(&a[1].mul(&b[1])).add(&a[2].mul(&b[2]))
}

pub(crate) fn jet_cross<T: DualFloat>(a: &CurveJet<T>, b: &CurveJet<T>) -> CurveJet<T> {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

pub(crate) fn jet_scale<T: DualFloat>(a: &CurveJet<T>, k: &Jet<Dual<T>>) -> CurveJet<T> {
    [a[0].mul(k), a[1].mul(k), a[2].mul(k)]
}

pub(crate) fn jet_diff<T: DualFloat>(a: &CurveJet<T>) -> CurveJet<T> {
    [
        a[0].differentiate(),
        a[1].differentiate(),
        a[2].differentiate(),
    ]
}

pub(crate) fn jet_value<T: DualFloat>(a: &CurveJet<T>) -> DualVec3<T> {
    DualVec3::from_components([a[0].value(), a[1].value(), a[2].value()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use std::f64::consts::PI;

    #[test]
    fn study_circle_derivative_at_zero() {
        // d/ds (cos s - ε s sin s, sin s + ε s cos s, 0) at s = 0:
        // real part (0, 1, 0); dual part (d/ds(-s sin s), d/ds(s cos s), 0)|_0 = (0, 1, 0)
        let c = catalog::study_circle::<f64>();
        for mode in [DerivativeMode::Exact, DerivativeMode::FiniteDifference] {
            let d = c.derivative(0.0, 1, mode).unwrap();
            assert!(
                d.approx_eq_tol(
                    DualVec3::new(Vec3::new(0.0, 1.0, 0.0), Vec3::new(0.0, 1.0, 0.0)),
                    1e-9,
                    1e-9
                ),
                "mode {mode:?}: {d:?}"
            );
        }
    }

    #[test]
    fn second_derivative_of_constant_curve_vanishes() {
        let c = DualCurve::from_fn("const", (0.0, 1.0), |_| {
            DualVec3::new(Vec3::new(1.0, 2.0, 3.0), Vec3::new(4.0, 5.0, 6.0))
        });
        let d2 = c.derivative(0.5, 2, DerivativeMode::FiniteDifference).unwrap();
        assert!(d2.max_abs() < 1e-9);
    }

    #[test]
    fn finite_difference_matches_exact_on_study_circle() {
        let c = catalog::study_circle::<f64>();
        for order in 1..=4usize {
            let mut worst: f64 = 0.0;
            for i in 0..100 {
                let s = 0.2 + 5.8 * (i as f64) / 99.0;
                let fd = c.derivative(s, order, DerivativeMode::FiniteDifference).unwrap();
                let ex = c.derivative(s, order, DerivativeMode::Exact).unwrap();
                worst = worst.max((fd - ex).max_abs());
            }
            let budget = if order <= 2 { 1e-7 } else { 1e-4 };
            assert!(worst < budget, "order {order}: worst {worst:e}");
        }
    }

    #[test]
    fn stencils_converge_at_their_theoretical_order() {
        // f(t) = (sin t, cos 2t, t^3) with known derivatives; halving the
        // step must shrink the truncation error by roughly 2^p until the
        // rounding floor is reached
        let eval = |t: f64| {
            DualVec3::from_real(Vec3::new(t.sin(), (2.0 * t).cos(), t * t * t))
        };
        let exact1 = Vec3::new(0.9f64.cos(), -2.0 * 1.8f64.sin(), 3.0 * 0.81);
        let h = 0.05;
        let e_h = (stencil(&eval, 0.9, 1, h).real - exact1).norm();
        let e_h2 = (stencil(&eval, 0.9, 1, h / 2.0).real - exact1).norm();
        let ratio = e_h / e_h2;
        assert!(
            (ratio - 16.0).abs() < 6.0,
            "order-1 stencil decay ratio {ratio}"
        );
    }

    #[test]
    fn out_of_domain_and_bad_order_are_rejected() {
        let c = catalog::study_circle::<f64>();
        assert!(matches!(
            c.derivative(-1.0, 1, DerivativeMode::Exact),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            c.derivative(1.0, 5, DerivativeMode::Exact),
            Err(Error::UnsupportedOrder { order: 5 })
        ));
        assert!(matches!(
            c.derivative(1.0, 0, DerivativeMode::Exact),
            Err(Error::UnsupportedOrder { order: 0 })
        ));
    }

    #[test]
    fn exact_mode_requires_jets() {
        let c = DualCurve::from_fn("plain", (0.0, 1.0), |t: f64| {
            DualVec3::from_real(Vec3::new(t, 0.0, 0.0))
        });
        assert!(matches!(
            c.derivative(0.5, 1, DerivativeMode::Exact),
            Err(Error::ExactDerivativesUnavailable { .. })
        ));
    }

    #[test]
    fn arc_length_of_study_circle() {
        let c = catalog::study_circle::<f64>();
        let s = c.arc_length(0.0, 2.0 * PI, DerivativeMode::Exact).unwrap();
        // unit-speed indicatrix; the moment part contributes ∫<T,T*> = 2π as well
        assert!((s.real - 2.0 * PI).abs() < 1e-9);
        assert!((s.dual - 2.0 * PI).abs() < 1e-9);

        // zero-length interval
        let z = c.arc_length(1.0, 1.0, DerivativeMode::Exact).unwrap();
        assert_eq!(z, Dual::zero());

        // curves with zero moment have zero dual arc length
        let g = catalog::great_circle::<f64>();
        let sg = g.arc_length(0.0, PI, DerivativeMode::Exact).unwrap();
        assert!((sg.real - PI).abs() < 1e-10);
        assert!(sg.dual.abs() < 1e-12);
    }

    #[test]
    fn arc_length_additivity() {
        let c = catalog::study_circle::<f64>();
        let whole = c.arc_length(0.3, 4.1, DerivativeMode::Exact).unwrap();
        let a = c.arc_length(0.3, 2.0, DerivativeMode::Exact).unwrap();
        let b = c.arc_length(2.0, 4.1, DerivativeMode::Exact).unwrap();
        assert!((whole - (a + b)).max_abs() < 1e-9);
    }

    #[test]
    fn reparametrization_of_scaled_circle() {
        // (2cos t, 2sin t, 0): speed 2, length 4π, reparametrized curve
        // must have unit speed everywhere
        let circle = DualCurve::from_series(
            "circle2",
            (0.0, 2.0 * PI),
            SeriesCurve {
                real: [Series::cos(2.0, 1.0), Series::sin(2.0, 1.0), Series::zero()],
                dual: [Series::zero(), Series::zero(), Series::zero()],
            },
        );
        let r = circle
            .reparametrized_by_arc_length(DerivativeMode::Exact)
            .unwrap();
        let (lo, hi) = r.domain();
        assert!(lo.abs() < 1e-12);
        assert!((hi - 4.0 * PI).abs() < 1e-8);
        for i in 0..=20 {
            let s = hi * (i as f64) / 20.0;
            let v = r.derivative(s, 1, DerivativeMode::Exact).unwrap();
            assert!((v.real.norm() - 1.0).abs() < 1e-8, "s = {s}");
        }
        // position agrees with the closed form (2cos(s/2), 2sin(s/2), 0)
        let p = r.eval(1.7);
        assert!((p.real.x - 2.0 * (1.7f64 / 2.0).cos()).abs() < 1e-9);
        assert!((p.real.y - 2.0 * (1.7f64 / 2.0).sin()).abs() < 1e-9);
    }

    #[test]
    fn reparametrization_is_idempotent_and_respects_unit_speed() {
        let c = catalog::study_circle::<f64>();
        let r = c.reparametrized_by_arc_length(DerivativeMode::Exact).unwrap();
        // already unit-speed: parametrization unchanged to tolerance
        for i in 0..=16 {
            let s = 2.0 * PI * (i as f64) / 16.0;
            assert!((r.eval(s) - c.eval(s)).max_abs() < 1e-8, "s = {s}");
        }
        let rr = r.reparametrized_by_arc_length(DerivativeMode::Exact).unwrap();
        let (_, hi) = rr.domain();
        assert!((hi - 2.0 * PI).abs() < 1e-7);
        for i in 1..16 {
            let s = hi * (i as f64) / 16.0;
            assert!((rr.eval(s) - c.eval(s)).max_abs() < 1e-6, "s = {s}");
        }
    }

    #[test]
    fn reparametrized_jets_have_unit_speed_to_high_order() {
        // non-uniform speed with nonzero dual part; exact jets of the
        // reparametrized curve must describe a unit-speed indicatrix
        let wobble = DualCurve::from_series(
            "wobble",
            (0.0, 2.0),
            SeriesCurve {
                real: [
                    Series::cos(1.0, 1.0).plus(Series::cos(0.2, 2.0)),
                    Series::sin(1.0, 1.0),
                    Series::poly(&[0.0, 0.3]),
                ],
                dual: [
                    Series::sin(0.2, 1.0),
                    Series::poly(&[0.0, 0.1]),
                    Series::zero(),
                ],
            },
        );
        let r = wobble
            .reparametrized_by_arc_length(DerivativeMode::Exact)
            .unwrap();
        let (_, hi) = r.domain();
        for i in 1..10 {
            let s = hi * (i as f64) / 10.0;
            let d1 = r.derivative(s, 1, DerivativeMode::Exact).unwrap();
            assert!((d1.real.norm() - 1.0).abs() < 1e-10, "s = {s}");
            // speed stays unit to second order as well: <a', a''> = 0
            let d2 = r.derivative(s, 2, DerivativeMode::Exact).unwrap();
            assert!(d1.real.dot(d2.real).abs() < 1e-8, "s = {s}");
        }
    }

    #[test]
    fn normalized_curve_is_on_the_dual_unit_sphere() {
        let raw = DualCurve::from_series(
            "raw",
            (0.0, 1.5),
            SeriesCurve {
                real: [
                    Series::constant(2.0).plus(Series::cos(0.5, 1.0)),
                    Series::sin(0.8, 1.0),
                    Series::sin(0.4, 2.0),
                ],
                dual: [
                    Series::poly(&[0.1, 0.2]),
                    Series::cos(0.3, 1.0),
                    Series::zero(),
                ],
            },
        );
        let unit = raw.normalized().unwrap();
        for i in 0..=10 {
            let t = 1.5 * (i as f64) / 10.0;
            let (dr, dd) = unit.eval(t).unit_deviation();
            assert!(dr < 1e-12 && dd < 1e-12, "t = {t}");
        }
        // exact jets survive: derivative of g(n, n) is zero
        let j = unit.jets(0.7, DerivativeMode::Exact).unwrap();
        let g = jet_dot(&j, &j);
        for k in 1..JET_LEN {
            assert!(g.0[k].max_abs() < 1e-10, "coefficient {k}");
        }
    }

    #[test]
    fn stationary_indicatrix_is_rejected() {
        // real part (t^2, 0, 0) has zero speed at t = 0
        let cusp = DualCurve::from_series(
            "cusp",
            (-1.0, 1.0),
            SeriesCurve {
                real: [Series::poly(&[0.0, 0.0, 1.0]), Series::zero(), Series::zero()],
                dual: [Series::zero(), Series::zero(), Series::zero()],
            },
        );
        assert!(matches!(
            cusp.arc_length(-1.0, 1.0, DerivativeMode::Exact),
            Err(Error::SingularIndicatrix { .. })
        ));
        assert!(matches!(
            cusp.reparametrized_by_arc_length(DerivativeMode::Exact),
            Err(Error::SingularIndicatrix { .. })
        ));
    }

    #[test]
    fn normalizing_a_curve_through_the_origin_fails() {
        let through_origin = DualCurve::from_series(
            "through_origin",
            (-1.0, 1.0),
            SeriesCurve {
                real: [Series::poly(&[0.0, 1.0]), Series::zero(), Series::zero()],
                dual: [Series::zero(), Series::zero(), Series::zero()],
            },
        );
        assert!(matches!(
            through_origin.normalized(),
            Err(Error::ZeroRealPart { .. })
        ));
    }

    #[test]
    fn single_precision_apparatus_runs() {
        let c = catalog::study_circle::<f32>();
        let f = crate::frenet::frenet_apparatus(&c, 0.0f32, DerivativeMode::Exact).unwrap();
        assert!((f.curvature.real - 1.0).abs() < 1e-3);
        assert!(f.torsion.real.abs() < 1e-3);
        assert!(f.orthonormality_residual() < 1e-3);
    }

    #[test]
    fn curves_are_send_and_sync() {
        fn assert_send_sync<X: Send + Sync>() {}
        assert_send_sync::<DualCurve<f64>>();
        assert_send_sync::<DualCurve<f32>>();
    }
}
