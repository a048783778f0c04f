//! Curve configuration files.
//!
//! A config is a TOML document with a `[curve]` table and an optional
//! `[run]` table; command-line flags override `[run]` values. The schema
//! is documented in the repository README.

use serde::Deserialize;

use dualline::{Curve64, DualCurve, DerivativeMode, Series, SeriesCurve, Term, Trig};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDoc {
    pub curve: CurveDoc,
    #[serde(default)]
    pub run: RunDoc,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDoc {
    pub kind: CurveKind,
    pub name: Option<String>,
    pub params: Option<HelixParams>,
    /// Parameter interval `[lo, hi]`; builtins have defaults.
    pub domain: Option<[f64; 2]>,
    pub series: Option<SeriesDoc>,
    /// Project the curve onto the dual unit sphere.
    #[serde(default)]
    pub normalize: bool,
    /// Reparametrize by the real arc length of the indicatrix.
    #[serde(default)]
    pub reparametrize: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Builtin,
    Series,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HelixParams {
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesDoc {
    pub real: CoordsDoc,
    #[serde(default)]
    pub dual: Option<CoordsDoc>,
}

/// Exactly three coordinate functions per part.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordsDoc {
    pub x: Vec<TermDoc>,
    pub y: Vec<TermDoc>,
    pub z: Vec<TermDoc>,
}

/// One term `coeff * t^power * trig(freq * t)`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: f64,
    #[serde(default)]
    pub power: u32,
    pub trig: Option<String>,
    pub freq: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunDoc {
    pub samples: Option<usize>,
    pub tol: Option<f64>,
    pub exact_derivatives: Option<bool>,
    pub s_range: Option<[f64; 2]>,
    pub u_range: Option<[f64; 2]>,
    /// `SxU` grid, e.g. `64x16`.
    pub grid: Option<String>,
    pub format: Option<String>,
    pub out: Option<String>,
}

pub fn parse_config(text: &str) -> Result<ConfigDoc, CliError> {
    toml::from_str::<ConfigDoc>(text)
        .map_err(|e| CliError::Input(format!("config parse/schema error: {e}")))
}

fn term_from_doc(doc: &TermDoc) -> Result<Term<f64>, CliError> {
    let trig = match doc.trig.as_deref() {
        None => {
            if doc.freq.is_some() {
                return Err(CliError::Input(
                    "schema violation: `freq` given without `trig`".into(),
                ));
            }
            Trig::None
        }
        Some("cos") => Trig::Cos(doc.freq.unwrap_or(1.0)),
        Some("sin") => Trig::Sin(doc.freq.unwrap_or(1.0)),
        Some(other) => {
            return Err(CliError::Input(format!(
                "schema violation: unknown trig kind `{other}` (expected `cos` or `sin`)"
            )))
        }
    };
    Ok(Term {
        coeff: doc.coeff,
        power: doc.power,
        trig,
    })
}

fn series_from_doc(doc: &[TermDoc]) -> Result<Series<f64>, CliError> {
    Ok(Series {
        terms: doc.iter().map(term_from_doc).collect::<Result<_, _>>()?,
    })
}

fn coords_from_doc(doc: &CoordsDoc) -> Result<[Series<f64>; 3], CliError> {
    Ok([
        series_from_doc(&doc.x)?,
        series_from_doc(&doc.y)?,
        series_from_doc(&doc.z)?,
    ])
}

/// Builds the curve described by the document. `mode` decides how the
/// arc-length reparametrization (if requested) differentiates.
pub fn build_curve(doc: &CurveDoc, mode: DerivativeMode) -> Result<Curve64, CliError> {
    let mut curve = match doc.kind {
        CurveKind::Builtin => {
            let name = doc
                .name
                .as_deref()
                .ok_or_else(|| CliError::Input("schema violation: builtin curves need `name`".into()))?;
            match name {
                "study_circle" => dualline::catalog::study_circle(),
                "great_circle" => dualline::catalog::great_circle(),
                "real_helix" => {
                    let p = doc.params.unwrap_or(HelixParams { a: 2.0, b: 1.0 });
                    if p.a <= 0.0 {
                        return Err(CliError::Input(
                            "schema violation: real_helix needs a > 0".into(),
                        ));
                    }
                    dualline::catalog::real_helix(p.a, p.b)
                }
                other => {
                    return Err(CliError::Input(format!(
                        "unknown builtin `{other}`; available: {}",
                        dualline::catalog::BUILTIN_NAMES.join(", ")
                    )))
                }
            }
        }
        CurveKind::Series => {
            let series = doc.series.as_ref().ok_or_else(|| {
                CliError::Input("schema violation: series curves need `[curve.series]`".into())
            })?;
            let real = coords_from_doc(&series.real)?;
            let dual = match &series.dual {
                Some(d) => coords_from_doc(d)?,
                None => [Series::zero(), Series::zero(), Series::zero()],
            };
            let domain = doc.domain.ok_or_else(|| {
                CliError::Input("schema violation: series curves need `domain`".into())
            })?;
            DualCurve::from_series(
                doc.name.clone().unwrap_or_else(|| "series".into()),
                (domain[0], domain[1]),
                SeriesCurve { real, dual },
            )
        }
    };
    if let Some([lo, hi]) = doc.domain {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(CliError::Input(format!(
                "schema violation: empty domain [{lo}, {hi}]"
            )));
        }
        curve = curve.with_domain((lo, hi));
    }
    if doc.normalize {
        curve = curve.normalized()?;
    }
    if doc.reparametrize {
        curve = curve.reparametrized_by_arc_length(mode)?;
    }
    Ok(curve)
}

pub fn parse_range(text: &str) -> Result<(f64, f64), String> {
    let (a, b) = text
        .split_once(':')
        .ok_or_else(|| format!("expected LO:HI, got `{text}`"))?;
    let lo: f64 = a.trim().parse().map_err(|e| format!("bad LO: {e}"))?;
    let hi: f64 = b.trim().parse().map_err(|e| format!("bad HI: {e}"))?;
    if lo.is_nan() || hi.is_nan() || lo >= hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

pub fn parse_grid(text: &str) -> Result<(usize, usize), String> {
    let (a, b) = text
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected SxU, got `{text}`"))?;
    let s: usize = a.trim().parse().map_err(|e| format!("bad S: {e}"))?;
    let u: usize = b.trim().parse().map_err(|e| format!("bad U: {e}"))?;
    if s < 2 {
        return Err("grid needs at least 2 samples along s".into());
    }
    Ok((s, u))
}
