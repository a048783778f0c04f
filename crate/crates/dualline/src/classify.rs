//! Normal-curve and dual-sphere classification.
//!
//! A curve is *normal* when its position vector stays in the span of the
//! principal normal and binormal, equivalently `g(α̃, T̃) = 0`. It lies on
//! a dual sphere exactly when the pointwise center candidate
//!
//! ```text
//! c̃(s) = α̃ + (1/k̄1) Ñ + (d/ds̄ 1/k̄1)(1/k̄2) B̃
//! ```
//!
//! and the matching radius are constant along the curve. For curves
//! centered at the origin, the reciprocal curvature follows a sinusoid in
//! the accumulated torsion angle `t̄ = ∫ k̄2 ds̄`, and the coefficient pair
//! of that sinusoid ties the whole story together: its squared norm is
//! `g(α̃, α̃)` and its first coefficient is `±√(r̄² - c̄2²)`.
//!
//! Zero-torsion degeneracy: when `k̄2` vanishes identically the binormal
//! coefficient has a well-defined limit (zero) provided `(1/k̄1)'` also
//! vanishes, which is exactly the planar/circular family. The guard
//! rejects only the genuinely singular case of vanishing torsion with a
//! non-negligible numerator.

use crate::curve::{DerivativeMode, DualCurve};
use crate::dual::Dual;
use crate::dvec3::DualVec3;
use crate::error::{Error, Result};
use crate::frenet::{frenet_data, FrenetData};
use crate::quad::{try_integrate_dual, MAX_DEPTH};
use crate::scalar::DualFloat;

/// Sampling and threshold choices shared by the classifiers.
#[derive(Debug, Clone, Copy)]
pub struct ClassifyConfig<T> {
    pub mode: DerivativeMode,
    /// Uniform samples over the (inset) domain.
    pub samples: usize,
    /// Verdict threshold on residuals and drifts.
    pub verdict_tol: T,
    /// Condition-number limit for the normal equations.
    pub condition_limit: T,
    /// Anchor parameter for the accumulated torsion angle; defaults to
    /// the first sample. Shifting it rotates the coefficient pair without
    /// changing any verdict.
    pub anchor: Option<T>,
}

impl<T: DualFloat> ClassifyConfig<T> {
    pub fn new(mode: DerivativeMode) -> Self {
        let verdict_tol = match mode {
            DerivativeMode::Exact => T::lit(1e-8),
            DerivativeMode::FiniteDifference => T::lit(1e-5),
        };
        Self {
            mode,
            samples: 256,
            verdict_tol,
            condition_limit: T::lit(1e10),
            anchor: None,
        }
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples.max(2);
        self
    }

    pub fn with_verdict_tol(mut self, tol: T) -> Self {
        self.verdict_tol = tol;
        self
    }

    pub fn with_anchor(mut self, anchor: T) -> Self {
        self.anchor = Some(anchor);
        self
    }
}

/// A residual split into real and dual components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualResidual<T> {
    pub real: T,
    pub dual: T,
}

impl<T: DualFloat> DualResidual<T> {
    pub fn zero() -> Self {
        Self {
            real: T::zero(),
            dual: T::zero(),
        }
    }

    fn track(&mut self, d: Dual<T>) {
        self.real = self.real.max(d.real.abs());
        self.dual = self.dual.max(d.dual.abs());
    }

    pub fn max(&self) -> T {
        self.real.max(self.dual)
    }

    pub fn below(&self, tol: T) -> bool {
        self.real < tol && self.dual < tol
    }
}

/// Verdict of the tangential-component test.
#[derive(Debug, Clone, Copy)]
pub struct NormalVerdict<T> {
    pub is_normal: bool,
    /// Max over samples of `|g(α̃, T̃)|`, componentwise.
    pub residual: DualResidual<T>,
}

/// Components of the position vector in the moving frame.
#[derive(Debug, Clone, Copy)]
pub struct PositionDecomposition<T> {
    /// `g(α̃, Ñ)`.
    pub normal_coeff: Dual<T>,
    /// `g(α̃, B̃)`.
    pub binormal_coeff: Dual<T>,
    /// `g(α̃, T̃)`; identically zero on normal curves.
    pub tangent_coeff: Dual<T>,
}

/// Least-squares solution of the reciprocal-curvature sinusoid model.
#[derive(Debug, Clone, Copy)]
pub struct NormalFit<T> {
    pub c1: Dual<T>,
    pub c2: Dual<T>,
    /// Root-mean-square model residual, split into real and dual parts.
    pub residual_rms: DualResidual<T>,
    pub is_normal: bool,
    /// Condition estimate of the (rank-reduced) normal equations.
    pub condition: T,
}

/// Sphere membership verdict with the fitted center and radius.
#[derive(Debug, Clone, Copy)]
pub struct SphereFit<T> {
    pub center: DualVec3<T>,
    pub radius: Dual<T>,
    /// Max deviation of the pointwise center candidate from its mean.
    pub center_drift: T,
    /// Max deviation of the pointwise radius from its mean.
    pub radius_drift: T,
    pub is_spherical: bool,
}

impl<T: DualFloat> SphereFit<T> {
    /// Scalar residual for this verdict.
    pub fn residual(&self) -> T {
        self.center_drift.max(self.radius_drift)
    }
}

/// Consistency report tying the fitted coefficients to the sphere radius.
#[derive(Debug, Clone, Copy)]
pub struct RadiusConstraint<T> {
    /// Chosen sign of `√(r̄² - c̄2²)`.
    pub sign: i8,
    /// `|c̄1 - sign √(r̄² - c̄2²)|`, componentwise max.
    pub coefficient_residual: T,
    /// Max over samples of the disagreement between the three equivalent
    /// expressions for the reciprocal curvature.
    pub chain_residual: DualResidual<T>,
    pub consistent: bool,
}

/// Everything the report needs, computed from one sampling pass.
#[derive(Debug, Clone)]
pub struct Classification<T> {
    pub normal: NormalVerdict<T>,
    pub fit: NormalFit<T>,
    pub sphere: SphereFit<T>,
    /// Residual of the identity between the dual part of `1/k̄1` and the
    /// mixed position-normal products; zero on normal curves.
    pub identity_residual: T,
    /// Present when both verdicts are positive; the constraint is not
    /// meaningful otherwise.
    pub radius_check: Option<RadiusConstraint<T>>,
}

struct Context<'a, T: DualFloat> {
    curve: &'a DualCurve<T>,
    cfg: &'a ClassifyConfig<T>,
    rows: Vec<FrenetData<T>>,
}

impl<'a, T: DualFloat> Context<'a, T> {
    fn build(curve: &'a DualCurve<T>, cfg: &'a ClassifyConfig<T>) -> Result<Self> {
        let (lo, hi) = curve.domain();
        let margin = curve.stencil_margin(cfg.mode);
        let a = lo + margin;
        let b = hi - margin;
        let n = cfg.samples.max(2);
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let s = a + (b - a) * T::from_usize(i).unwrap() / T::from_usize(n - 1).unwrap();
            rows.push(frenet_data(curve, s, cfg.mode)?);
        }
        Ok(Self { curve, cfg, rows })
    }

    /// Accumulated torsion angle `t̄(s) = ∫ k̄2 ds̄` at every sample,
    /// anchored to zero at `cfg.anchor` (default: the first sample).
    fn turning(&self) -> Result<Vec<Dual<T>>> {
        let integrand = |t: T| -> Result<Dual<T>> {
            let d = frenet_data(self.curve, t, self.cfg.mode)?;
            Ok(d.sample.torsion * d.speed)
        };
        let mut tbar = Vec::with_capacity(self.rows.len());
        let mut acc = Dual::zero();
        tbar.push(acc);
        for w in self.rows.windows(2) {
            acc = acc
                + try_integrate_dual(integrand, w[0].sample.s, w[1].sample.s, T::QUAD_TOL, MAX_DEPTH)?;
            tbar.push(acc);
        }
        if let Some(anchor) = self.cfg.anchor {
            let offset =
                try_integrate_dual(integrand, self.rows[0].sample.s, anchor, T::QUAD_TOL, MAX_DEPTH)?;
            for t in &mut tbar {
                *t = *t - offset;
            }
        }
        Ok(tbar)
    }

    fn normal_verdict(&self) -> NormalVerdict<T> {
        let mut residual = DualResidual::zero();
        for row in &self.rows {
            residual.track(row.sample.position.dot(row.sample.tangent));
        }
        NormalVerdict {
            is_normal: residual.below(self.cfg.verdict_tol),
            residual,
        }
    }

    fn fit(&self, tbar: &[Dual<T>]) -> Result<NormalFit<T>> {
        let mut m = [[T::zero(); 4]; 4];
        let mut rhs = [T::zero(); 4];
        let mut rows_ab = Vec::with_capacity(2 * self.rows.len());
        for (row, t) in self.rows.iter().zip(tbar) {
            let y = row.sample.curvature.inv()?;
            let (ct, st) = (t.real.cos(), t.real.sin());
            let td = t.dual;
            let r_real = ([ct, st, T::zero(), T::zero()], y.real);
            let r_dual = ([-td * st, td * ct, ct, st], y.dual);
            for (a, b) in [r_real, r_dual] {
                for i in 0..4 {
                    rhs[i] = rhs[i] + a[i] * b;
                    for j in 0..4 {
                        m[i][j] = m[i][j] + a[i] * a[j];
                    }
                }
            }
            rows_ab.push((r_real, true));
            rows_ab.push((r_dual, false));
        }
        let (x, condition) = solve_normal_equations(m, rhs, self.cfg.condition_limit)?;

        let n = T::from_usize(self.rows.len()).unwrap();
        let mut ss_real = T::zero();
        let mut ss_dual = T::zero();
        for ((a, b), is_real) in &rows_ab {
            let pred = a[0] * x[0] + a[1] * x[1] + a[2] * x[2] + a[3] * x[3];
            let r = pred - *b;
            if *is_real {
                ss_real = ss_real + r * r;
            } else {
                ss_dual = ss_dual + r * r;
            }
        }
        let residual_rms = DualResidual {
            real: (ss_real / n).sqrt(),
            dual: (ss_dual / n).sqrt(),
        };
        Ok(NormalFit {
            c1: Dual::new(x[0], x[2]),
            c2: Dual::new(x[1], x[3]),
            is_normal: residual_rms.below(self.cfg.verdict_tol),
            residual_rms,
            condition,
        })
    }

    fn sphere(&self) -> Result<SphereFit<T>> {
        let n = self.rows.len();
        let mut centers = Vec::with_capacity(n);
        let mut radii = Vec::with_capacity(n);
        for row in &self.rows {
            let (c, r_sq) = center_radius_from(row)?;
            centers.push(c);
            radii.push(r_sq.sqrt()?);
        }
        let inv_n = Dual::from_real(T::from_usize(n).unwrap().recip());
        let center = centers
            .iter()
            .fold(DualVec3::zero(), |acc, c| acc + *c)
            .scale(inv_n);
        let radius = radii.iter().fold(Dual::zero(), |acc, r| acc + *r) * inv_n;
        let mut center_drift = T::zero();
        let mut radius_drift = T::zero();
        for (c, r) in centers.iter().zip(&radii) {
            center_drift = center_drift.max((*c - center).max_abs());
            radius_drift = radius_drift.max((*r - radius).max_abs());
        }
        Ok(SphereFit {
            center,
            radius,
            center_drift,
            radius_drift,
            is_spherical: center_drift < self.cfg.verdict_tol && radius_drift < self.cfg.verdict_tol,
        })
    }

    fn identity_residual(&self) -> Result<T> {
        let mut worst = T::zero();
        for row in &self.rows {
            let lhs = row.sample.curvature.inv()?.dual;
            let mixed = row.sample.position.dot(row.sample.normal).dual;
            worst = worst.max((lhs + mixed).abs());
        }
        Ok(worst)
    }

    fn radius_check(
        &self,
        fit: &NormalFit<T>,
        sphere: &SphereFit<T>,
        tbar: &[Dual<T>],
    ) -> Result<RadiusConstraint<T>> {
        let d = sphere.radius.sq() - fit.c2.sq();
        let root = d.sqrt()?;
        let plus = (fit.c1 - root).max_abs();
        let minus = (fit.c1 + root).max_abs();
        let (sign, coefficient_residual, signed_root) = if plus <= minus {
            (1i8, plus, root)
        } else {
            (-1i8, minus, -root)
        };
        if coefficient_residual > T::lit(1e-3) {
            return Err(Error::InconsistentFits {
                plus: plus.to_f64().unwrap_or(f64::NAN),
                minus: minus.to_f64().unwrap_or(f64::NAN),
            });
        }
        let mut chain_residual = DualResidual::zero();
        for (row, t) in self.rows.iter().zip(tbar) {
            let (ct, st) = (t.cos(), t.sin());
            let model = fit.c1 * ct + fit.c2 * st;
            let mixed = Dual::new(
                row.sample.curvature.real.recip(),
                -row.sample.position.dot(row.sample.normal).dual,
            );
            let from_radius = signed_root * ct + fit.c2 * st;
            chain_residual.track(model - mixed);
            chain_residual.track(model - from_radius);
        }
        Ok(RadiusConstraint {
            sign,
            coefficient_residual,
            consistent: coefficient_residual < self.cfg.verdict_tol
                && chain_residual.below(self.cfg.verdict_tol),
            chain_residual,
        })
    }
}

/// Binormal coefficient `(d/ds̄ 1/k̄1) / k̄2` with its zero-torsion limit.
fn binormal_coefficient<T: DualFloat>(row: &FrenetData<T>) -> Result<Dual<T>> {
    let numerator = row.inv_curvature_rate;
    let k2 = row.sample.torsion;
    if k2.real.abs() >= T::TORSION_EPS {
        Ok(numerator * k2.inv()?)
    } else if numerator.max_abs() < T::lit(1e-6) {
        Ok(Dual::zero())
    } else {
        Err(Error::VanishingTorsion {
            s: row.sample.s.to_f64().unwrap_or(f64::NAN),
            k2: k2.real.to_f64().unwrap_or(f64::NAN),
            numerator: numerator.max_abs().to_f64().unwrap_or(f64::NAN),
        })
    }
}

fn center_radius_from<T: DualFloat>(row: &FrenetData<T>) -> Result<(DualVec3<T>, Dual<T>)> {
    let y = row.sample.curvature.inv()?;
    let w = binormal_coefficient(row)?;
    let center = row.sample.position + row.sample.normal.scale(y) + row.sample.binormal.scale(w);
    let radius_sq = y.sq() + w.sq();
    Ok((center, radius_sq))
}

/// Components of the position vector in the Frenet frame at `s`, with the
/// reconstruction `λ̄ Ñ + μ̄ B̃ + (tangent) T̃ = α̃` holding by completeness.
pub fn position_decomposition<T: DualFloat>(
    curve: &DualCurve<T>,
    s: T,
    mode: DerivativeMode,
) -> Result<PositionDecomposition<T>> {
    let d = frenet_data(curve, s, mode)?;
    let p = d.sample.position;
    Ok(PositionDecomposition {
        normal_coeff: p.dot(d.sample.normal),
        binormal_coeff: p.dot(d.sample.binormal),
        tangent_coeff: p.dot(d.sample.tangent),
    })
}

/// True when `g(α̃, T̃)` vanishes (to tolerance) at every sample.
pub fn normal_curve_test<T: DualFloat>(
    curve: &DualCurve<T>,
    cfg: &ClassifyConfig<T>,
) -> Result<NormalVerdict<T>> {
    Ok(Context::build(curve, cfg)?.normal_verdict())
}

/// Linear least-squares fit of `1/k̄1 = c̄1 cos t̄ + c̄2 sin t̄` in the four
/// real unknowns behind the two dual coefficients. Rank-deficient column
/// directions (constant `t̄`) are resolved minimum-norm.
pub fn fit_curvature_solution<T: DualFloat>(
    curve: &DualCurve<T>,
    cfg: &ClassifyConfig<T>,
) -> Result<NormalFit<T>> {
    let ctx = Context::build(curve, cfg)?;
    let tbar = ctx.turning()?;
    ctx.fit(&tbar)
}

/// Pointwise sphere center candidate and squared radius at `s`.
pub fn sphere_center_radius<T: DualFloat>(
    curve: &DualCurve<T>,
    s: T,
    mode: DerivativeMode,
) -> Result<(DualVec3<T>, Dual<T>)> {
    center_radius_from(&frenet_data(curve, s, mode)?)
}

/// Sphere membership: the center candidate and radius must be constant
/// across samples.
pub fn spherical_test<T: DualFloat>(
    curve: &DualCurve<T>,
    cfg: &ClassifyConfig<T>,
) -> Result<SphereFit<T>> {
    Context::build(curve, cfg)?.sphere()
}

/// Max residual of the identity `dual(1/k̄1) = -(g(ᾱ, Ñ*) + g(ᾱ*, Ñ))`,
/// which characterizes the dual half of the normal-curve condition.
pub fn normal_identity_residual<T: DualFloat>(
    curve: &DualCurve<T>,
    cfg: &ClassifyConfig<T>,
) -> Result<T> {
    Context::build(curve, cfg)?.identity_residual()
}

/// Checks `c̄1 = ±√(r̄² - c̄2²)` for one sign and the agreement of the
/// three equivalent reciprocal-curvature expressions along the curve.
pub fn radius_constraint<T: DualFloat>(
    curve: &DualCurve<T>,
    fit: &NormalFit<T>,
    sphere: &SphereFit<T>,
    cfg: &ClassifyConfig<T>,
) -> Result<RadiusConstraint<T>> {
    let ctx = Context::build(curve, cfg)?;
    let tbar = ctx.turning()?;
    ctx.radius_check(fit, sphere, &tbar)
}

/// Runs every classifier from one sampling pass.
pub fn classify<T: DualFloat>(
    curve: &DualCurve<T>,
    cfg: &ClassifyConfig<T>,
) -> Result<Classification<T>> {
    let ctx = Context::build(curve, cfg)?;
    let tbar = ctx.turning()?;
    let normal = ctx.normal_verdict();
    let fit = ctx.fit(&tbar)?;
    let sphere = ctx.sphere()?;
    let identity_residual = ctx.identity_residual()?;
    let radius_check = if fit.is_normal && sphere.is_spherical {
        Some(ctx.radius_check(&fit, &sphere, &tbar)?)
    } else {
        None
    };
    Ok(Classification {
        normal,
        fit,
        sphere,
        identity_residual,
        radius_check,
    })
}

/// Minimum-norm solve of the symmetric positive semidefinite system
/// `M x = rhs` by Jacobi eigendecomposition. Eigenvalues below
/// `λmax · 1e-12` are treated as exact rank deficiency; a kept spread
/// beyond the condition limit is an error.
#[allow(clippy::needless_range_loop)]
fn solve_normal_equations<T: DualFloat>(
    m: [[T; 4]; 4],
    rhs: [T; 4],
    condition_limit: T,
) -> Result<([T; 4], T)> {
    let (vals, vecs) = jacobi_eigen(m);
    let lambda_max = vals.iter().fold(T::zero(), |a, v| a.max(v.abs()));
    if lambda_max == T::zero() {
        return Err(Error::IllConditionedFit {
            condition: f64::INFINITY,
            threshold: condition_limit.to_f64().unwrap_or(f64::NAN),
        });
    }
    let rank_eps = lambda_max * T::lit(1e-12);
    let mut x = [T::zero(); 4];
    let mut lambda_min = lambda_max;
    for k in 0..4 {
        if vals[k] <= rank_eps {
            continue;
        }
        lambda_min = lambda_min.min(vals[k]);
        let mut proj = T::zero();
        for i in 0..4 {
            proj = proj + vecs[i][k] * rhs[i];
        }
        let scale = proj / vals[k];
        for i in 0..4 {
            x[i] = x[i] + vecs[i][k] * scale;
        }
    }
    let condition = lambda_max / lambda_min;
    if condition > condition_limit {
        return Err(Error::IllConditionedFit {
            condition: condition.to_f64().unwrap_or(f64::NAN),
            threshold: condition_limit.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok((x, condition))
}

/// Cyclic Jacobi for a symmetric 4×4 matrix. Returns eigenvalues and the
/// matrix whose columns are the eigenvectors.
#[allow(clippy::needless_range_loop)]
fn jacobi_eigen<T: DualFloat>(mut a: [[T; 4]; 4]) -> ([T; 4], [[T; 4]; 4]) {
    let mut v = [[T::zero(); 4]; 4];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = T::one();
    }
    let half = T::lit(0.5);
    for _ in 0..64 {
        let mut off = T::zero();
        for i in 0..4 {
            for j in (i + 1)..4 {
                off = off + a[i][j] * a[i][j];
            }
        }
        if off < T::lit(1e-30) {
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                if a[p][q].abs() < T::lit(1e-300) {
                    continue;
                }
                let theta = half * (T::lit(2.0) * a[p][q]).atan2(a[q][q] - a[p][p]);
                let (s, c) = theta.sin_cos();
                for k in 0..4 {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..4 {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..4 {
                    let (vkp, vkq) = (v[k][p], v[k][q]);
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    ([a[0][0], a[1][1], a[2][2], a[3][3]], v)
}
