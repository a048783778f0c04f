//! Ruled surfaces from dual-unit-sphere curves.
//!
//! Each point of a dual-unit-sphere curve is an oriented line; sweeping
//! `r(s, u) = β(s) + u·l(s)` with `l` the direction part and `β` the
//! perpendicular foot of the line realizes the surface the curve
//! represents. Meshes export to Wavefront OBJ (triangulated quads) and
//! CSV.

use std::io::Write;

use crate::curve::DualCurve;
use crate::error::{Error, Result};
use crate::line::dual_to_line;
use crate::scalar::DualFloat;
use crate::vec3::Vec3;

/// Admission tolerance on `g(α̃, α̃) - (1 + ε0)`: upstream normalization
/// is exact to rounding, so larger violations indicate wrong input.
const SPHERE_ADMISSION: f64 = 1e-6;

/// Grid of ruled-surface points `r(s_i, u_j) = β(s_i) + u_j · l(s_i)`.
#[derive(Debug, Clone)]
pub struct RuledSurfaceMesh<T> {
    pub s_values: Vec<T>,
    /// Generating curve: perpendicular foot of each ruling.
    pub base_curve: Vec<Vec3<T>>,
    /// Unit directions of the rulings.
    pub rulings: Vec<Vec3<T>>,
    pub u_range: (T, T),
    pub u_count: usize,
    /// Row-major: `vertices[i][j]` is at `(s_i, u_j)`.
    pub vertices: Vec<Vec<Vec3<T>>>,
}

/// Samples the curve, converts each point through the line
/// correspondence and fills the vertex grid.
pub fn ruled_surface_from_dual_curve<T: DualFloat>(
    curve: &DualCurve<T>,
    s_samples: usize,
    u_range: (T, T),
    u_count: usize,
) -> Result<RuledSurfaceMesh<T>> {
    let (lo, hi) = curve.domain();
    let n = s_samples.max(2);
    let tol = T::lit(SPHERE_ADMISSION);
    let mut s_values = Vec::with_capacity(n);
    let mut base_curve = Vec::with_capacity(n);
    let mut rulings = Vec::with_capacity(n);
    let mut vertices = Vec::with_capacity(n);
    for i in 0..n {
        let s = lo + (hi - lo) * T::from_usize(i).unwrap() / T::from_usize(n - 1).unwrap();
        let v = curve.eval(s);
        let (dr, dd) = v.unit_deviation();
        if dr > tol || dd > tol {
            return Err(Error::NotOnDualUnitSphere {
                s: s.to_f64().unwrap_or(f64::NAN),
                real_dev: dr.to_f64().unwrap_or(f64::NAN),
                dual_dev: dd.to_f64().unwrap_or(f64::NAN),
            });
        }
        let line = dual_to_line(&v)?;
        let mut row = Vec::with_capacity(u_count);
        for j in 0..u_count {
            let frac = if u_count > 1 {
                T::from_usize(j).unwrap() / T::from_usize(u_count - 1).unwrap()
            } else {
                T::zero()
            };
            let u = u_range.0 + (u_range.1 - u_range.0) * frac;
            row.push(line.point + line.direction * u);
        }
        s_values.push(s);
        base_curve.push(line.point);
        rulings.push(line.direction);
        vertices.push(row);
    }
    Ok(RuledSurfaceMesh {
        s_values,
        base_curve,
        rulings,
        u_range,
        u_count,
        vertices,
    })
}

/// Wavefront OBJ: one `v` record per vertex in row-major (s-major) order,
/// each grid quad split into two triangles with 1-based indices, faces
/// oriented with increasing `s` then increasing `u`.
pub fn export_obj<T: DualFloat>(mesh: &RuledSurfaceMesh<T>, out: &mut impl Write) -> Result<()> {
    for row in &mesh.vertices {
        for p in row {
            writeln!(out, "v {} {} {}", p.x, p.y, p.z)?;
        }
    }
    let nu = mesh.u_count;
    if nu == 0 {
        return Ok(());
    }
    for i in 0..mesh.vertices.len().saturating_sub(1) {
        for j in 0..nu - 1 {
            let v00 = i * nu + j + 1;
            let v01 = v00 + 1;
            let v10 = (i + 1) * nu + j + 1;
            let v11 = v10 + 1;
            writeln!(out, "f {} {} {}", v00, v10, v11)?;
            writeln!(out, "f {} {} {}", v00, v11, v01)?;
        }
    }
    Ok(())
}

/// CSV with header `s,u,x,y,z`, one row per vertex in row-major order.
/// Numbers are written in shortest round-trip form, so parsing the file
/// back reproduces the vertices exactly.
pub fn export_csv<T: DualFloat>(mesh: &RuledSurfaceMesh<T>, out: &mut impl Write) -> Result<()> {
    writeln!(out, "s,u,x,y,z")?;
    for (i, row) in mesh.vertices.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            let frac = if mesh.u_count > 1 {
                T::from_usize(j).unwrap() / T::from_usize(mesh.u_count - 1).unwrap()
            } else {
                T::zero()
            };
            let u = mesh.u_range.0 + (mesh.u_range.1 - mesh.u_range.0) * frac;
            writeln!(out, "{},{},{},{},{}", mesh.s_values[i], u, p.x, p.y, p.z)?;
        }
    }
    Ok(())
}
