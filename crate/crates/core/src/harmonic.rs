//! Transfinite harmonic spline interpolation on concentric spheres.
//!
//! In each spherical-harmonic channel the interpolant solves `L_k u = 0` on
//! every annulus and matches the Fourier–Laplace coefficient of the data on
//! both bounding spheres.

use crate::error::{Error, Result};
use crate::field::TestField;
use crate::radial::harmonic_radial_basis;
use crate::sphere::{check_truncation, AngularTable, ModeIndex, SphereQuadrature};
use crate::spline::{AnnularPartition, RadialSpline, SplineExpansion, SplinePiece};

/// Fits the piecewise `L_k`-harmonic radial function through one value per
/// node.
pub fn fit_harmonic_mode(values: &[f64], mode: ModeIndex, d: usize, part: &AnnularPartition) -> Result<RadialSpline> {
    if values.len() != part.len() {
        return Err(Error::InvalidParameter(format!(
            "expected {} node values, got {}",
            part.len(),
            values.len()
        )));
    }
    let mut pieces = Vec::with_capacity(part.len() - 1);
    for (j, seg) in part.segments().into_iter().enumerate() {
        let [b0, b1] = harmonic_radial_basis(mode.k, d, &seg)?;
        let (a11, a12) = (b0.eval(seg.lo()), b1.eval(seg.lo()));
        let (a21, a22) = (b0.eval(seg.hi()), b1.eval(seg.hi()));
        let det = a11 * a22 - a12 * a21;
        if det == 0.0 || !det.is_finite() {
            return Err(Error::SingularSystem(mode));
        }
        let (v0, v1) = (values[j], values[j + 1]);
        let c0 = (v0 * a22 - a12 * v1) / det;
        let c1 = (a11 * v1 - a21 * v0) / det;
        pieces.push(SplinePiece { segment: seg, basis: vec![b0, b1], coefs: vec![c0, c1] });
    }
    Ok(RadialSpline { mode, dim: d, partition: part.clone(), pieces })
}

pub(crate) fn check_quadrature(d: usize, truncation: usize, quad: &SphereQuadrature) -> Result<()> {
    check_truncation(truncation, d)?;
    if quad.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: quad.dim() });
    }
    if quad.exactness() < 2 * truncation + 2 {
        return Err(Error::InvalidParameter(format!(
            "quadrature exactness {} below 2K + 2 = {}",
            quad.exactness(),
            2 * truncation + 2
        )));
    }
    Ok(())
}

/// Coefficients of every mode on the sphere of radius `r`, computed from a
/// pointwise evaluator.
pub(crate) fn sphere_coefficients(
    eval: impl Fn(&[f64]) -> f64,
    r: f64,
    quad: &SphereQuadrature,
    table: &AngularTable,
) -> Vec<f64> {
    let mut point = vec![0.0; quad.dim()];
    let samples: Vec<f64> = quad
        .nodes()
        .iter()
        .map(|theta| {
            for (p, t) in point.iter_mut().zip(theta) {
                *p = r * t;
            }
            eval(&point)
        })
        .collect();
    table.project(quad, &samples)
}

/// Coefficient table `[node][mode]` of `field` on every node sphere.
pub(crate) fn node_coefficients(
    eval: impl Fn(&[f64]) -> f64,
    part: &AnnularPartition,
    quad: &SphereQuadrature,
    table: &AngularTable,
) -> Vec<Vec<f64>> {
    part.radii().iter().map(|&r| sphere_coefficients(&eval, r, quad, table)).collect()
}

/// Harmonic spline interpolant `I_2(F)` of the degree-`<= K` angular part of
/// `F` on every sphere of the partition.
pub fn interpolate_harmonic(
    field: &(impl TestField + ?Sized),
    part: &AnnularPartition,
    d: usize,
    truncation: usize,
    quad: &SphereQuadrature,
) -> Result<SplineExpansion> {
    check_quadrature(d, truncation, quad)?;
    let table = AngularTable::new(truncation, quad)?;
    let coeffs = node_coefficients(|x| field.value(x), part, quad, &table);
    let modes = table
        .modes()
        .iter()
        .enumerate()
        .map(|(i, &mode)| {
            let values: Vec<f64> = coeffs.iter().map(|row| row[i]).collect();
            fit_harmonic_mode(&values, mode, d, part)
        })
        .collect::<Result<Vec<_>>>()?;
    SplineExpansion::new(d, part.clone(), truncation, modes)
}
