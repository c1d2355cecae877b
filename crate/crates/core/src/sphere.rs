//! Real orthonormal spherical harmonics on the unit sphere, product
//! quadrature rules on the sphere, and Fourier–Laplace coefficients.
//!
//! Basis convention. On the circle (`d = 2`) the degree-`k` space is spanned
//! by `1/sqrt(2 pi)` for `k = 0` and by `cos(k phi)/sqrt(pi)` (`l = 1`),
//! `sin(k phi)/sqrt(pi)` (`l = 2`) for `k >= 1`. On the 2-sphere (`d = 3`)
//! index `l = 1` is the zonal harmonic (`m = 0`), `l = 2m` the
//! `cos(m phi)` harmonic and `l = 2m + 1` the `sin(m phi)` harmonic, all
//! fully normalized and without the Condon–Shortley phase.
//!
//! In `d = 4` only the constant (degree 0) channel is provided, which is all
//! that radial fields need.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{gauss_chebyshev_second, gauss_legendre};

/// Tolerance on `|theta| - 1` for direction vectors.
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// Degree `k` and basis index `l` (1-based) of a spherical harmonic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModeIndex {
    pub k: usize,
    pub l: usize,
}

impl ModeIndex {
    pub fn new(k: usize, l: usize, d: usize) -> Result<Self> {
        let max = basis_dimension(k, d)?;
        if l == 0 || l > max {
            return Err(Error::ModeOutOfRange { k, l, max });
        }
        Ok(Self { k, l })
    }
}

fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension `a_k` of the space of degree-`k` spherical harmonics on
/// `S^{d-1}`.
pub fn basis_dimension(k: usize, d: usize) -> Result<usize> {
    match d {
        2 => Ok(if k == 0 { 1 } else { 2 }),
        3 => Ok(2 * k + 1),
        d if d >= 4 => Ok(binomial(k + d - 1, d - 1) - if k >= 2 { binomial(k + d - 3, d - 1) } else { 0 }),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// Highest degree for which [`eval_harmonic`] is available in dimension `d`.
pub fn max_supported_degree(d: usize) -> Result<Option<usize>> {
    match d {
        2 | 3 => Ok(None),
        4 => Ok(Some(0)),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// Checks that `K` can be expanded in dimension `d`.
pub fn check_truncation(truncation: usize, d: usize) -> Result<()> {
    match max_supported_degree(d)? {
        Some(max) if truncation > max => Err(Error::InvalidParameter(format!(
            "truncation {truncation} exceeds the supported degree {max} in dimension {d}"
        ))),
        _ => Ok(()),
    }
}

/// Surface area of the unit sphere `S^{d-1}` for the supported dimensions.
pub fn sphere_area(d: usize) -> Result<f64> {
    match d {
        2 => Ok(2.0 * PI),
        3 => Ok(4.0 * PI),
        4 => Ok(2.0 * PI * PI),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// All modes with degree `<= truncation`, ordered by `(k, l)`.
pub fn modes_up_to(truncation: usize, d: usize) -> Result<Vec<ModeIndex>> {
    check_truncation(truncation, d)?;
    let mut modes = Vec::new();
    for k in 0..=truncation {
        for l in 1..=basis_dimension(k, d)? {
            modes.push(ModeIndex { k, l });
        }
    }
    Ok(modes)
}

/// Returns `theta` renormalized to unit length, or an error if it is farther
/// than [`UNIT_TOLERANCE`] from the unit sphere.
pub fn unit_direction(theta: &[f64], d: usize) -> Result<Vec<f64>> {
    if theta.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: theta.len() });
    }
    let norm = theta.iter().map(|t| t * t).sum::<f64>().sqrt();
    if !((norm - 1.0).abs() <= UNIT_TOLERANCE) {
        return Err(Error::NotUnitVector(norm));
    }
    Ok(theta.iter().map(|t| t / norm).collect())
}

/// Value of the real orthonormal harmonic `Y_{k,l}` at the unit vector `theta`.
pub fn eval_harmonic(mode: ModeIndex, theta: &[f64], d: usize) -> Result<f64> {
    ModeIndex::new(mode.k, mode.l, d)?;
    check_truncation(mode.k, d)?;
    let theta = unit_direction(theta, d)?;
    let all = harmonics_up_to(mode.k, &theta, d)?;
    let offset = match d {
        2 => if mode.k == 0 { 0 } else { 2 * mode.k - 1 },
        3 => mode.k * mode.k,
        _ => 0,
    };
    Ok(all[offset + mode.l - 1])
}

/// Values of every harmonic with degree `<= truncation` at the (already unit)
/// direction `theta`, in the order of [`modes_up_to`].
pub fn harmonics_up_to(truncation: usize, theta: &[f64], d: usize) -> Result<Vec<f64>> {
    check_truncation(truncation, d)?;
    if theta.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: theta.len() });
    }
    let mut out = Vec::new();
    match d {
        2 => {
            out.push(1.0 / (2.0 * PI).sqrt());
            let s = 1.0 / PI.sqrt();
            // (x + i y)^k = cos(k phi) + i sin(k phi) on the unit circle
            let (mut re, mut im) = (1.0, 0.0);
            for _ in 1..=truncation {
                let next_re = re * theta[0] - im * theta[1];
                im = re * theta[1] + im * theta[0];
                re = next_re;
                out.push(s * re);
                out.push(s * im);
            }
        }
        3 => {
            let table = reduced_legendre_table(truncation, theta[2]);
            let powers = complex_powers(truncation, theta[0], theta[1]);
            for k in 0..=truncation {
                out.push(table[k][0]);
                for m in 1..=k {
                    let q = std::f64::consts::SQRT_2 * table[k][m];
                    out.push(q * powers[m].0);
                    out.push(q * powers[m].1);
                }
            }
        }
        _ => out.push(1.0 / sphere_area(d)?.sqrt()),
    }
    Ok(out)
}

fn complex_powers(n: usize, x: f64, y: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n + 1);
    let (mut re, mut im) = (1.0, 0.0);
    out.push((re, im));
    for _ in 1..=n {
        let next_re = re * x - im * y;
        im = re * y + im * x;
        re = next_re;
        out.push((re, im));
    }
    out
}

/// Normalized associated Legendre functions divided by `sin^m`, so that
/// `table[k][m] * Re/Im((x + i y)^m)` gives the real harmonic without the
/// `sqrt(2)` factor. Indexed as `table[k][m]` for `m <= k`.
fn reduced_legendre_table(kmax: usize, z: f64) -> Vec<Vec<f64>> {
    let mut table: Vec<Vec<f64>> = (0..=kmax).map(|k| vec![0.0; k + 1]).collect();
    let mut diag = 1.0 / (4.0 * PI).sqrt();
    for m in 0..=kmax {
        if m > 0 {
            let mf = m as f64;
            diag *= ((2.0 * mf + 1.0) / (2.0 * mf)).sqrt();
        }
        table[m][m] = diag;
        if m < kmax {
            table[m + 1][m] = (2.0 * m as f64 + 3.0).sqrt() * z * diag;
        }
        for k in (m + 2)..=kmax {
            let kf = k as f64;
            let mf = m as f64;
            let a = ((4.0 * kf * kf - 1.0) / (kf * kf - mf * mf)).sqrt();
            let b = (((kf - 1.0).powi(2) - mf * mf) / (4.0 * (kf - 1.0).powi(2) - 1.0)).sqrt();
            table[k][m] = a * (z * table[k - 1][m] - b * table[k - 2][m]);
        }
    }
    table
}

/// A positive-weight quadrature rule on `S^{d-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereQuadrature {
    dim: usize,
    exactness: usize,
    nodes: Vec<Vec<f64>>,
    weights: Vec<f64>,
}

impl SphereQuadrature {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Polynomial degree up to which the rule is exact.
    pub fn exactness(&self) -> usize {
        self.exactness
    }

    pub fn nodes(&self) -> &[Vec<f64>] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Integral over the sphere of a function sampled at the nodes.
    pub fn integrate(&self, f: impl Fn(&[f64]) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(x)).sum()
    }
}

/// Default exactness for an expansion truncated at degree `truncation`.
pub fn default_exactness(truncation: usize) -> usize {
    2 * truncation + 4
}

/// Builds a quadrature on `S^{d-1}` exact for spherical polynomials of degree
/// `<= exactness`.
///
/// The circle uses `exactness + 2` equispaced nodes. The 2-sphere uses a
/// Gauss–Legendre rule in the polar cosine times an equispaced azimuth; the
/// 3-sphere adds a Gauss–Chebyshev (second kind) factor for the first polar
/// angle.
pub fn sphere_quadrature(d: usize, exactness: usize) -> Result<SphereQuadrature> {
    let n_azimuth = exactness + 2;
    let azimuth: Vec<f64> = (0..n_azimuth).map(|i| 2.0 * PI * i as f64 / n_azimuth as f64).collect();
    let w_azimuth = 2.0 * PI / n_azimuth as f64;
    let n_polar = exactness / 2 + 1;
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    match d {
        2 => {
            for &phi in &azimuth {
                nodes.push(vec![phi.cos(), phi.sin()]);
                weights.push(w_azimuth);
            }
        }
        3 => {
            let (zs, wz) = gauss_legendre(n_polar);
            for (&z, &wz) in zs.iter().zip(&wz) {
                let s = (1.0 - z * z).sqrt();
                for &phi in &azimuth {
                    nodes.push(vec![s * phi.cos(), s * phi.sin(), z]);
                    weights.push(wz * w_azimuth);
                }
            }
        }
        4 => {
            let (ts, wt) = gauss_chebyshev_second(n_polar);
            let (zs, wz) = gauss_legendre(n_polar);
            for (&t, &wt) in ts.iter().zip(&wt) {
                let st = (1.0 - t * t).sqrt();
                for (&z, &wz) in zs.iter().zip(&wz) {
                    let sz = (1.0 - z * z).sqrt();
                    for &phi in &azimuth {
                        nodes.push(vec![t, st * z, st * sz * phi.cos(), st * sz * phi.sin()]);
                        weights.push(wt * wz * w_azimuth);
                    }
                }
            }
        }
        d => return Err(Error::UnsupportedDimension(d)),
    }
    Ok(SphereQuadrature { dim: d, exactness, nodes, weights })
}

/// Harmonic values at every node of a quadrature, for all modes up to a
/// truncation degree. Rows are nodes, columns are modes.
#[derive(Debug, Clone)]
pub struct AngularTable {
    modes: Vec<ModeIndex>,
    values: Vec<f64>,
}

impl AngularTable {
    pub fn new(truncation: usize, quad: &SphereQuadrature) -> Result<Self> {
        let modes = modes_up_to(truncation, quad.dim)?;
        let mut values = Vec::with_capacity(modes.len() * quad.len());
        for node in &quad.nodes {
            values.extend(harmonics_up_to(truncation, node, quad.dim)?);
        }
        Ok(Self { modes, values })
    }

    pub fn modes(&self) -> &[ModeIndex] {
        &self.modes
    }

    /// Harmonic values at node `i`, in mode order.
    pub fn row(&self, i: usize) -> &[f64] {
        let n = self.modes.len();
        &self.values[i * n..(i + 1) * n]
    }

    /// Fourier–Laplace coefficients of all modes from samples at the nodes.
    pub fn project(&self, quad: &SphereQuadrature, samples: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.modes.len()];
        for (i, (&w, &f)) in quad.weights.iter().zip(samples).enumerate() {
            for (c, y) in out.iter_mut().zip(self.row(i)) {
                *c += w * f * y;
            }
        }
        out
    }
}

/// Fourier–Laplace coefficient `f_{k,l}(r) = sum_i w_i F(r theta_i) Y_{k,l}(theta_i)`
/// of a scalar field given as a closure on points of `R^d`.
pub fn fourier_laplace_coefficient(
    field: impl Fn(&[f64]) -> f64,
    mode: ModeIndex,
    r: f64,
    quad: &SphereQuadrature,
) -> Result<f64> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::OutsideDomain { r, lo: 0.0, hi: f64::INFINITY });
    }
    ModeIndex::new(mode.k, mode.l, quad.dim)?;
    let mut point = vec![0.0; quad.dim];
    let mut sum = 0.0;
    for (theta, w) in quad.nodes.iter().zip(&quad.weights) {
        for (p, t) in point.iter_mut().zip(theta) {
            *p = r * t;
        }
        sum += w * field(&point) * eval_harmonic(mode, theta, quad.dim)?;
    }
    Ok(sum)
}
