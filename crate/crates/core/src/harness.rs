//! Error norms, refinement studies, bound certificates and the two
//! structural checks (orthogonality of the biharmonic residual against
//! harmonic splines, and `L_k` acting on Fourier–Laplace coefficients).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::biharmonic::interpolate_biharmonic;
use crate::error::{Error, Result};
use crate::field::TestField;
use crate::harmonic::{fit_harmonic_mode, interpolate_harmonic};
use crate::quadrature::{gauss_legendre, map_to_interval};
use crate::radial::{default_step, lk_apply, Segment};
use crate::sphere::{
    default_exactness, fourier_laplace_coefficient, harmonics_up_to, modes_up_to, sphere_quadrature,
    AngularTable, ModeIndex, SphereQuadrature,
};
use crate::spline::{AnnularPartition, RadialSpline, SplineExpansion};
use crate::torsion::interpolation_constant;

/// Headroom allowed on every bound inequality.
pub const BOUND_HEADROOM: f64 = 0.01;

/// Errors below this are treated as exact reproduction: certificates with a
/// vanishing right-hand side pass under it and rates are not computed.
pub const REPRODUCTION_FLOOR: f64 = 1e-8;

/// Seed of the random probe splines.
pub const PROBE_SEED: u64 = 0xA5F1;

/// Discretization settings shared by the harness operations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HarnessConfig {
    pub dim: usize,
    /// Expansion truncation `K`.
    pub truncation: usize,
    /// Sphere quadrature exactness; `None` uses `2K + 4`.
    pub exactness: Option<usize>,
    /// Equispaced radial points per annulus (endpoints included) of the
    /// sup-norm grid.
    pub grid_points: usize,
    /// Gauss–Legendre points per annulus for L2 integrals.
    pub radial_order: usize,
}

impl HarnessConfig {
    /// `K = 16` in the plane, `K = 8` in space, `K = 0` (radial only) in 4D.
    pub fn for_dimension(dim: usize) -> Self {
        let truncation = match dim {
            2 => 16,
            3 => 8,
            _ => 0,
        };
        Self { dim, truncation, exactness: None, grid_points: 200, radial_order: 16 }
    }

    pub fn with_truncation(mut self, truncation: usize) -> Self {
        self.truncation = truncation;
        self
    }

    pub fn with_grid_points(mut self, grid_points: usize) -> Self {
        self.grid_points = grid_points;
        self
    }

    pub fn quadrature(&self) -> Result<SphereQuadrature> {
        sphere_quadrature(self.dim, self.exactness.unwrap_or_else(|| default_exactness(self.truncation)))
    }
}

/// Which interpolant an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Interpolant {
    Harmonic,
    Biharmonic,
}

pub fn interpolate(
    field: &(impl TestField + ?Sized),
    part: &AnnularPartition,
    which: Interpolant,
    cfg: &HarnessConfig,
) -> Result<SplineExpansion> {
    let quad = cfg.quadrature()?;
    match which {
        Interpolant::Harmonic => interpolate_harmonic(field, part, cfg.dim, cfg.truncation, &quad),
        Interpolant::Biharmonic => interpolate_biharmonic(field, part, cfg.dim, cfg.truncation, &quad),
    }
}

/// Radial Gauss nodes and weights (including `r^{d-1}`) over all annuli.
fn radial_rule(part: &AnnularPartition, d: usize, order: usize) -> Vec<(f64, f64)> {
    let (x, w) = gauss_legendre(order);
    part.segments()
        .iter()
        .flat_map(|s| {
            let (r, wr) = map_to_interval(&x, &w, s.lo(), s.hi());
            r.into_iter().zip(wr).map(move |(r, w)| (r, w * r.powi(d as i32 - 1)))
        })
        .collect()
}

fn scaled(theta: &[f64], r: f64, buf: &mut [f64]) {
    for (p, t) in buf.iter_mut().zip(theta) {
        *p = r * t;
    }
}

/// `L2` norm over `A(r_1, r_N)`: composite Gauss–Legendre in `r` with weight
/// `r^{d-1}` times a sphere quadrature.
pub fn l2_norm(
    f: impl Fn(&[f64]) -> f64,
    part: &AnnularPartition,
    d: usize,
    radial_order: usize,
    quad: &SphereQuadrature,
) -> Result<f64> {
    if quad.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: quad.dim() });
    }
    let mut buf = vec![0.0; d];
    let mut sum = 0.0;
    for (r, wr) in radial_rule(part, d, radial_order) {
        for (theta, wt) in quad.nodes().iter().zip(quad.weights()) {
            scaled(theta, r, &mut buf);
            sum += wr * wt * f(&buf).powi(2);
        }
    }
    Ok(sum.sqrt())
}

/// Evaluates expansions on whole spheres using a precomputed harmonic table.
struct SphereSampler {
    quad: SphereQuadrature,
    table: AngularTable,
}

impl SphereSampler {
    fn new(cfg: &HarnessConfig, truncation: usize) -> Result<Self> {
        let exactness = cfg.exactness.unwrap_or(0).max(default_exactness(truncation));
        let quad = sphere_quadrature(cfg.dim, exactness)?;
        let table = AngularTable::new(truncation, &quad)?;
        Ok(Self { quad, table })
    }

    /// Values at every node of the sphere of radius `r` from per-mode radial
    /// values (modes in table order, possibly fewer than the table holds).
    fn combine(&self, radial: &[f64]) -> Vec<f64> {
        (0..self.quad.len())
            .map(|i| radial.iter().zip(self.table.row(i)).map(|(u, y)| u * y).sum())
            .collect()
    }
}

/// `L2` norm of `F - S`.
pub fn l2_error(field: &(impl TestField + ?Sized), s: &SplineExpansion, cfg: &HarnessConfig) -> Result<f64> {
    let sampler = SphereSampler::new(cfg, s.truncation)?;
    let mut buf = vec![0.0; cfg.dim];
    let mut sum = 0.0;
    for (r, wr) in radial_rule(&s.partition, cfg.dim, cfg.radial_order) {
        let values = sampler.combine(&s.radial_values(r)?);
        for ((theta, wt), v) in sampler.quad.nodes().iter().zip(sampler.quad.weights()).zip(values) {
            scaled(theta, r, &mut buf);
            sum += wr * wt * (field.value(&buf) - v).powi(2);
        }
    }
    Ok(sum.sqrt())
}

fn radial_grid(part: &AnnularPartition, points: usize) -> Vec<f64> {
    let points = points.max(2);
    let mut out = vec![part.inner()];
    for s in part.segments() {
        for i in 1..points {
            out.push(if i == points - 1 { s.hi() } else { s.lo() + s.width() * i as f64 / (points - 1) as f64 });
        }
    }
    out
}

/// Grid maximum of `|F - S|` over radial grid points times the nodes of a
/// sphere quadrature. A lower bound of the true supremum.
pub fn sup_norm_error(field: &(impl TestField + ?Sized), s: &SplineExpansion, cfg: &HarnessConfig) -> Result<f64> {
    if cfg.grid_points < 50 {
        return Err(Error::InvalidParameter(format!("sup grid needs >= 50 radial points, got {}", cfg.grid_points)));
    }
    let sampler = SphereSampler::new(cfg, s.truncation)?;
    let mut buf = vec![0.0; cfg.dim];
    let mut worst: f64 = 0.0;
    for r in radial_grid(&s.partition, cfg.grid_points) {
        let values = sampler.combine(&s.radial_values(r)?);
        for (theta, v) in sampler.quad.nodes().iter().zip(values) {
            scaled(theta, r, &mut buf);
            worst = worst.max((field.value(&buf) - v).abs());
        }
    }
    Ok(worst)
}

/// Grid maximum of `|f|` on the same grid as [`sup_norm_error`].
pub fn grid_sup(f: impl Fn(&[f64]) -> f64, part: &AnnularPartition, cfg: &HarnessConfig) -> Result<f64> {
    let quad = sphere_quadrature(cfg.dim, cfg.exactness.unwrap_or(0).max(default_exactness(cfg.truncation)))?;
    let mut buf = vec![0.0; cfg.dim];
    let mut worst: f64 = 0.0;
    for r in radial_grid(part, cfg.grid_points) {
        for theta in quad.nodes() {
            scaled(theta, r, &mut buf);
            worst = worst.max(f(&buf).abs());
        }
    }
    Ok(worst)
}

/// Error measure tracked by a refinement study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StudyKind {
    HarmonicSup,
    HarmonicL2,
    BiharmonicL2,
}

impl StudyKind {
    pub fn interpolant(self) -> Interpolant {
        match self {
            StudyKind::HarmonicSup | StudyKind::HarmonicL2 => Interpolant::Harmonic,
            StudyKind::BiharmonicL2 => Interpolant::Biharmonic,
        }
    }

    /// Exponent of `h_max` in the corresponding bound.
    pub fn expected_rate(self) -> f64 {
        match self {
            StudyKind::HarmonicSup | StudyKind::HarmonicL2 => 2.0,
            StudyKind::BiharmonicL2 => 4.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub level: usize,
    pub h_max: f64,
    pub error: f64,
    /// `log2(e_{i-1} / e_i)`; absent on the first row and when either error
    /// is at the reproduction floor.
    pub observed_rate: Option<f64>,
}

/// Error after interpolating on `base` and on `levels - 1` successive
/// bisections of it.
pub fn convergence_study(
    field: &(impl TestField + ?Sized),
    base: &AnnularPartition,
    levels: usize,
    which: StudyKind,
    cfg: &HarnessConfig,
) -> Result<Vec<ConvergenceRow>> {
    if levels < 3 {
        return Err(Error::InvalidParameter(format!("a refinement study needs >= 3 levels, got {levels}")));
    }
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(levels);
    let mut part = base.clone();
    for level in 0..levels {
        let s = interpolate(field, &part, which.interpolant(), cfg)?;
        let error = match which {
            StudyKind::HarmonicSup => sup_norm_error(field, &s, cfg)?,
            StudyKind::HarmonicL2 | StudyKind::BiharmonicL2 => l2_error(field, &s, cfg)?,
        };
        let observed_rate = rows.last().and_then(|prev| {
            (prev.error > REPRODUCTION_FLOOR && error > REPRODUCTION_FLOOR)
                .then(|| (prev.error / error).log2() / (prev.h_max / part.h_max()).log2())
        });
        rows.push(ConvergenceRow { level, h_max: part.h_max(), error, observed_rate });
        part = part.bisect();
    }
    Ok(rows)
}

/// The two interpolation error bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// `sup|F - I_2 F| <= C_d h^2 sup|Delta F|`.
    HarmonicSup,
    /// `||F - I_4 F||_2 <= C_d^2 h^4 ||Delta^2 F||_2`.
    BiharmonicL2,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub bound: Bound,
    /// Measured error norm.
    pub lhs: f64,
    /// Constant times mesh power times the data norm.
    pub rhs: f64,
    /// `lhs / rhs`, absent when `rhs = 0`.
    pub ratio: Option<f64>,
    pub passes: bool,
}

impl BoundCertificate {
    fn new(bound: Bound, lhs: f64, rhs: f64) -> Self {
        let ratio = (rhs > 0.0).then(|| lhs / rhs);
        let passes = lhs <= rhs * (1.0 + BOUND_HEADROOM) || lhs <= REPRODUCTION_FLOOR;
        Self { bound, lhs, rhs, ratio, passes }
    }
}

/// Evaluates both sides of an interpolation bound for `field` on `part`.
pub fn bound_certificate(
    field: &(impl TestField + ?Sized),
    part: &AnnularPartition,
    bound: Bound,
    cfg: &HarnessConfig,
) -> Result<BoundCertificate> {
    let c = interpolation_constant(cfg.dim);
    let h = part.h_max();
    match bound {
        Bound::HarmonicSup => {
            let s = interpolate(field, part, Interpolant::Harmonic, cfg)?;
            let lhs = sup_norm_error(field, &s, cfg)?;
            let rhs = c * h * h * grid_sup(|x| field.laplacian(x), part, cfg)?;
            Ok(BoundCertificate::new(bound, lhs, rhs))
        }
        Bound::BiharmonicL2 => {
            let s = interpolate(field, part, Interpolant::Biharmonic, cfg)?;
            let lhs = l2_error(field, &s, cfg)?;
            let quad = cfg.quadrature()?;
            let rhs = c * c * h.powi(4) * l2_norm(|x| field.bilaplacian(x), part, cfg.dim, cfg.radial_order, &quad)?;
            Ok(BoundCertificate::new(bound, lhs, rhs))
        }
    }
}

/// A harmonic probe spline `phi(x) = p(|x|) Y_{k,l}(x/|x|)`.
#[derive(Debug, Clone)]
pub struct Probe {
    pub mode: ModeIndex,
    pub node_values: Vec<f64>,
}

/// Probes with node values uniform in `[-1, 1]` from [`PROBE_SEED`].
pub fn random_probes(modes: &[ModeIndex], part: &AnnularPartition) -> Vec<Probe> {
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    modes
        .iter()
        .map(|&mode| Probe { mode, node_values: (0..part.len()).map(|_| rng.random_range(-1.0..1.0)).collect() })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeResidual {
    pub mode: ModeIndex,
    pub inner_product: f64,
    pub probe_norm: f64,
    /// `|<g, phi>| / (||g|| ||phi||)`; absent for skipped probes.
    pub normalized: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrthogonalityReport {
    /// `||Delta F - Delta I_4 F||_2`.
    pub residual_norm: f64,
    pub max_normalized: f64,
    /// The residual vanished, so every inner product is trivially zero.
    pub trivially_orthogonal: bool,
    pub probes: Vec<ProbeResidual>,
    /// Probes dropped because their norm is zero.
    pub skipped: Vec<ModeIndex>,
}

/// Inner products of `Delta F - Delta I_4 F` with harmonic splines built on
/// the same partition from random node values.
pub fn orthogonality_check(
    field: &(impl TestField + ?Sized),
    part: &AnnularPartition,
    probe_modes: &[ModeIndex],
    cfg: &HarnessConfig,
) -> Result<OrthogonalityReport> {
    orthogonality_check_with(field, part, &random_probes(probe_modes, part), cfg)
}

/// [`orthogonality_check`] with explicit probes.
pub fn orthogonality_check_with(
    field: &(impl TestField + ?Sized),
    part: &AnnularPartition,
    probes: &[Probe],
    cfg: &HarnessConfig,
) -> Result<OrthogonalityReport> {
    let d = cfg.dim;
    let s = interpolate(field, part, Interpolant::Biharmonic, cfg)?;
    let probe_degree = probes.iter().map(|p| p.mode.k).max().unwrap_or(0);
    let top = cfg.truncation.max(probe_degree);
    let quad = sphere_quadrature(d, cfg.exactness.unwrap_or(0).max(default_exactness(top)))?;
    let all_modes = modes_up_to(top, d)?;
    let splines: Vec<RadialSpline> = probes
        .iter()
        .map(|p| fit_harmonic_mode(&p.node_values, p.mode, d, part))
        .collect::<Result<_>>()?;
    let probe_cols: Vec<usize> = probes
        .iter()
        .map(|p| all_modes.iter().position(|m| *m == p.mode).ok_or(Error::ModeOutOfRange { k: p.mode.k, l: p.mode.l, max: 0 }))
        .collect::<Result<_>>()?;

    let mut buf = vec![0.0; d];
    let mut g_norm2 = 0.0;
    let mut inner = vec![0.0; probes.len()];
    let mut phi_norm2 = vec![0.0; probes.len()];
    for (r, wr) in radial_rule(part, d, cfg.radial_order) {
        let lap_modes = s.radial_laplacians(r)?;
        let probe_radial: Vec<f64> = splines.iter().map(|p| p.eval(r)).collect::<Result<_>>()?;
        for (theta, wt) in quad.nodes().iter().zip(quad.weights()) {
            scaled(theta, r, &mut buf);
            let y = harmonics_up_to(top, theta, d)?;
            let lap_s: f64 = lap_modes.iter().zip(&y).map(|(u, y)| u * y).sum();
            let g = field.laplacian(&buf) - lap_s;
            let w = wr * wt;
            g_norm2 += w * g * g;
            for (i, (&col, &p)) in probe_cols.iter().zip(&probe_radial).enumerate() {
                let phi = p * y[col];
                inner[i] += w * g * phi;
                phi_norm2[i] += w * phi * phi;
            }
        }
    }
    let residual_norm = g_norm2.sqrt();
    let trivially_orthogonal = residual_norm <= REPRODUCTION_FLOOR;
    let mut results = Vec::new();
    let mut skipped = Vec::new();
    let mut max_normalized: f64 = 0.0;
    for (i, p) in probes.iter().enumerate() {
        let probe_norm = phi_norm2[i].sqrt();
        let normalized = if probe_norm == 0.0 {
            skipped.push(p.mode);
            None
        } else if trivially_orthogonal {
            Some(0.0)
        } else {
            Some(inner[i].abs() / (residual_norm * probe_norm))
        };
        if let Some(v) = normalized {
            max_normalized = max_normalized.max(v);
        }
        results.push(ProbeResidual { mode: p.mode, inner_product: inner[i], probe_norm, normalized });
    }
    Ok(OrthogonalityReport { residual_norm, max_normalized, trivially_orthogonal, probes: results, skipped })
}

/// Largest deviation between `L_k` applied (by finite differences) to the
/// sampled coefficient `f_{k,l}(r)` of `F` and the coefficient of `Delta F`,
/// relative to `max(|coefficient of Delta F|, 1)`.
pub fn lk_consistency_check(
    field: &(impl TestField + ?Sized),
    mode: ModeIndex,
    r_samples: &[f64],
    domain: &Segment,
    quad: &SphereQuadrature,
) -> Result<f64> {
    let d = quad.dim();
    let h = default_step(domain);
    let mut worst: f64 = 0.0;
    for &r in r_samples {
        let coefficient = |rho: f64| fourier_laplace_coefficient(|x| field.value(x), mode, rho, quad).unwrap_or(f64::NAN);
        let fd = lk_apply(coefficient, mode.k, d, r, h, (domain.lo(), domain.hi()))?;
        let direct = fourier_laplace_coefficient(|x| field.laplacian(x), mode, r, quad)?;
        worst = worst.max((fd - direct).abs() / direct.abs().max(1.0));
    }
    Ok(worst)
}

/// Pointwise `F - S` on a line of radii along direction `theta`, handy for
/// comparing an error field with a closed form.
pub fn error_along_ray(
    field: &(impl TestField + ?Sized),
    s: &SplineExpansion,
    theta: &[f64],
    radii: &[f64],
) -> Result<Vec<f64>> {
    let mut buf = vec![0.0; s.dim];
    radii
        .iter()
        .map(|&r| {
            scaled(theta, r, &mut buf);
            Ok(field.value(&buf) - s.eval(&buf)?)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ExpDamped, FirstCoordinate, RadialPower, SolidHarmonic};
    use std::f64::consts::PI;

    fn part(r: &[f64]) -> AnnularPartition {
        AnnularPartition::new(r.to_vec()).unwrap()
    }

    #[test]
    fn l2_norm_examples() {
        let q3 = sphere_quadrature(3, 4).unwrap();
        let v = l2_norm(|_| 1.0, &part(&[1.0, 2.0]), 3, 8, &q3).unwrap();
        assert!((v - (4.0 * PI / 3.0 * 7.0).sqrt()).abs() < 1e-10);
        let q2 = sphere_quadrature(2, 4).unwrap();
        let v = l2_norm(|x| (x[0] * x[0] + x[1] * x[1]).sqrt(), &part(&[1.0, 2.0]), 2, 8, &q2).unwrap();
        assert!((v - (2.0 * PI * 15.0 / 4.0).sqrt()).abs() < 1e-10);
        assert!(l2_norm(|_| 1.0, &part(&[1.0, 2.0]), 2, 8, &q3).is_err());
    }

    #[test]
    fn l2_norm_parseval() {
        // ||r^2 Y_21||^2 = int_1^2 r^4 r^2 dr = (2^7 - 1)/7
        let f = SolidHarmonic(ModeIndex { k: 2, l: 1 });
        let q = sphere_quadrature(3, 8).unwrap();
        let v = l2_norm(|x| f.value(x), &part(&[1.0, 2.0]), 3, 10, &q).unwrap();
        assert!((v - (127.0f64 / 7.0).sqrt()).abs() < 1e-9);
    }

    #[test]
    fn sup_error_of_harmonic_field() {
        let cfg = HarnessConfig::for_dimension(3).with_truncation(2);
        let p = part(&[1.0, 1.5, 2.0]);
        let s = interpolate(&FirstCoordinate, &p, Interpolant::Harmonic, &cfg).unwrap();
        assert!(sup_norm_error(&FirstCoordinate, &s, &cfg).unwrap() < 1e-9);
        assert!(sup_norm_error(&FirstCoordinate, &s, &cfg.with_grid_points(10)).is_err());
    }

    #[test]
    fn sup_error_is_grid_stable() {
        let cfg = HarnessConfig::for_dimension(3).with_truncation(0);
        let p = part(&[1.0, 2.0]);
        let s = interpolate(&ExpDamped, &p, Interpolant::Harmonic, &cfg).unwrap();
        let coarse = sup_norm_error(&ExpDamped, &s, &cfg.with_grid_points(1000)).unwrap();
        let fine = sup_norm_error(&ExpDamped, &s, &cfg.with_grid_points(2000)).unwrap();
        assert!((fine - coarse).abs() < 1e-6, "{coarse} vs {fine}");
    }

    #[test]
    fn study_requires_three_levels() {
        let cfg = HarnessConfig::for_dimension(3).with_truncation(0);
        assert!(convergence_study(&RadialPower(2), &part(&[1.0, 2.0]), 2, StudyKind::HarmonicSup, &cfg).is_err());
    }

    #[test]
    fn harmonic_field_has_no_rates() {
        let cfg = HarnessConfig::for_dimension(3).with_truncation(1);
        let rows = convergence_study(&FirstCoordinate, &part(&[1.0, 2.0]), 3, StudyKind::HarmonicSup, &cfg).unwrap();
        assert!(rows.iter().all(|r| r.observed_rate.is_none() && r.error < 1e-9));
    }

    #[test]
    fn certificate_of_reproduced_field() {
        let cfg = HarnessConfig::for_dimension(3).with_truncation(2);
        let f = SolidHarmonic(ModeIndex { k: 2, l: 2 });
        for bound in [Bound::HarmonicSup, Bound::BiharmonicL2] {
            let c = bound_certificate(&f, &part(&[1.0, 2.0]), bound, &cfg).unwrap();
            assert!(c.passes && c.lhs < 1e-9 && c.ratio.is_none());
        }
    }

    #[test]
    fn zero_probe_is_skipped() {
        let cfg = HarnessConfig::for_dimension(3).with_truncation(2);
        let p = part(&[1.0, 1.5, 2.0]);
        let probes = vec![
            Probe { mode: ModeIndex { k: 0, l: 1 }, node_values: vec![0.0; 3] },
            Probe { mode: ModeIndex { k: 0, l: 1 }, node_values: vec![1.0, -0.5, 0.25] },
        ];
        let rep = orthogonality_check_with(&RadialPower(4), &p, &probes, &cfg).unwrap();
        assert_eq!(rep.skipped, vec![ModeIndex { k: 0, l: 1 }]);
        assert!(rep.probes[0].normalized.is_none());
        assert!(rep.max_normalized < 1e-8);
        assert!(!rep.trivially_orthogonal);
    }

    #[test]
    fn biharmonic_field_is_trivially_orthogonal() {
        let cfg = HarnessConfig::for_dimension(2).with_truncation(4);
        let p = part(&[1.0, 1.5, 2.0]);
        let modes = [ModeIndex { k: 1, l: 1 }, ModeIndex { k: 2, l: 2 }];
        let rep = orthogonality_check(&crate::field::SquaredNormTimesX1, &p, &modes, &cfg).unwrap();
        assert!(rep.trivially_orthogonal);
        assert_eq!(rep.max_normalized, 0.0);
    }

    #[test]
    fn lk_consistency_examples() {
        let q = sphere_quadrature(3, 10).unwrap();
        let dom = Segment::new(1.0, 2.0).unwrap();
        let samples = [1.2, 1.5, 1.8];
        let dev = lk_consistency_check(&RadialPower(4), ModeIndex { k: 0, l: 1 }, &samples, &dom, &q).unwrap();
        assert!(dev < 1e-5, "{dev}");
        let f = SolidHarmonic(ModeIndex { k: 2, l: 1 });
        let dev = lk_consistency_check(&f, ModeIndex { k: 2, l: 1 }, &samples, &dom, &q).unwrap();
        assert!(dev < 1e-5, "{dev}");
        assert!(lk_consistency_check(&f, ModeIndex { k: 2, l: 1 }, &[1.0005], &dom, &q).is_err());
    }
}
