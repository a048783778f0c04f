//! Classification report serialization.
//!
//! Reports are JSON with keys sorted lexicographically (the default map
//! behavior of the JSON encoder), so identical inputs always produce
//! byte-identical output.

use serde_json::{json, Value};

use dualline::{Classification, ClassifyConfig, Curve64, Dual, DualVec3};

fn dual_json(d: Dual<f64>) -> Value {
    json!({ "real": d.real, "dual": d.dual })
}

fn dual_vec_json(v: DualVec3<f64>) -> Value {
    json!({
        "real": [v.real.x, v.real.y, v.real.z],
        "dual": [v.dual.x, v.dual.y, v.dual.z],
    })
}

pub fn render(
    curve: &Curve64,
    cfg: &ClassifyConfig<f64>,
    exact: bool,
    out: &Classification<f64>,
) -> String {
    let radius_constraint = match &out.radius_check {
        None => Value::Null,
        Some(c) => json!({
            "sign": c.sign,
            "coefficient_residual": c.coefficient_residual,
            "chain_residual_real": c.chain_residual.real,
            "chain_residual_dual": c.chain_residual.dual,
            "consistent": c.consistent,
        }),
    };
    let (lo, hi) = curve.domain();
    let report = json!({
        "curve": {
            "name": curve.name(),
            "domain": [lo, hi],
            "exact_derivatives": exact,
            "samples": cfg.samples,
        },
        "normal_test": {
            "is_normal": out.normal.is_normal,
            "residual_real": out.normal.residual.real,
            "residual_dual": out.normal.residual.dual,
        },
        "normal_fit": {
            "c1": dual_json(out.fit.c1),
            "c2": dual_json(out.fit.c2),
            "residual_rms_real": out.fit.residual_rms.real,
            "residual_rms_dual": out.fit.residual_rms.dual,
            "is_normal": out.fit.is_normal,
            "condition": out.fit.condition,
        },
        "sphere_test": {
            "is_spherical": out.sphere.is_spherical,
            "center": dual_vec_json(out.sphere.center),
            "radius": dual_json(out.sphere.radius),
            "center_drift": out.sphere.center_drift,
            "radius_drift": out.sphere.radius_drift,
        },
        "reciprocal_identity_residual": out.identity_residual,
        "radius_constraint": radius_constraint,
        "tolerances": {
            "verdict_tol": cfg.verdict_tol,
            "condition_limit": cfg.condition_limit,
            "curvature_eps": 1e-8,
            "torsion_eps": 1e-8,
            "unit_sphere_admission": 1e-6,
            "quadrature_tol": 1e-10,
            "zero_divisor_eps": 1e-12,
        },
        "version": env!("CARGO_PKG_VERSION"),
    });
    let mut text = serde_json::to_string_pretty(&report).expect("report serialization");
    text.push('\n');
    text
}
