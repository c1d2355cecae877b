//! Machine-readable reports behind the command-line front end.
//!
//! Every command returns a serializable report; [`render`] turns it into CSV
//! (one header line, `.` decimal separator, floats with 17 significant
//! digits) or pretty-printed JSON. Identical inputs give byte-identical text.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::field_by_name;
use crate::harness::{
    bound_certificate, convergence_study, interpolate, l2_error, sup_norm_error, Bound, ConvergenceRow,
    HarnessConfig, Interpolant, StudyKind,
};
use crate::spline::AnnularPartition;
use crate::torsion::{torsion_constant, Annulus, TorsionReport};

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidParameter(format!("unknown format `{other}` (expected csv or json)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// Interpolation order: 2 for the harmonic spline, 4 for the biharmonic one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Order {
    Two,
    Four,
}

impl Order {
    pub fn interpolant(self) -> Interpolant {
        match self {
            Order::Two => Interpolant::Harmonic,
            Order::Four => Interpolant::Biharmonic,
        }
    }

    pub fn bound(self) -> Bound {
        match self {
            Order::Two => Bound::HarmonicSup,
            Order::Four => Bound::BiharmonicL2,
        }
    }

    /// Default refinement study: sup norm for order 2, `L2` for order 4.
    pub fn default_study(self) -> StudyKind {
        match self {
            Order::Two => StudyKind::HarmonicSup,
            Order::Four => StudyKind::BiharmonicL2,
        }
    }
}

impl TryFrom<u8> for Order {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            2 => Ok(Order::Two),
            4 => Ok(Order::Four),
            other => Err(Error::InvalidParameter(format!("order must be 2 or 4, got {other}"))),
        }
    }
}

impl From<Order> for u8 {
    fn from(o: Order) -> u8 {
        match o {
            Order::Two => 2,
            Order::Four => 4,
        }
    }
}

impl FromStr for Order {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: u8 = s.parse().map_err(|_| Error::InvalidParameter(format!("order must be 2 or 4, got `{s}`")))?;
        Order::try_from(v)
    }
}

impl FromStr for StudyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "harmonic_sup" => Ok(StudyKind::HarmonicSup),
            "harmonic_l2" => Ok(StudyKind::HarmonicL2),
            "biharmonic_l2" => Ok(StudyKind::BiharmonicL2),
            other => Err(Error::InvalidParameter(format!(
                "unknown study `{other}` (expected harmonic_sup, harmonic_l2 or biharmonic_l2)"
            ))),
        }
    }
}

/// Validated settings shared by all commands.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub dim: usize,
    pub radii: Vec<f64>,
    pub harness: HarnessConfig,
    pub format: Format,
}

impl RunConfig {
    /// Checks the radii and the truncation; `truncation = None` picks the
    /// dimension default of [`HarnessConfig::for_dimension`].
    pub fn new(dim: usize, radii: Vec<f64>, truncation: Option<usize>, format: Format) -> Result<Self> {
        crate::sphere::basis_dimension(0, dim)?;
        AnnularPartition::new(radii.clone())?;
        let mut harness = HarnessConfig::for_dimension(dim);
        if let Some(k) = truncation {
            harness = harness.with_truncation(k);
        }
        crate::sphere::check_truncation(harness.truncation, dim)?;
        Ok(Self { dim, radii, harness, format })
    }

    pub fn partition(&self) -> Result<AnnularPartition> {
        AnnularPartition::new(self.radii.clone())
    }
}

/// Table form of a report.
pub trait Tabular {
    fn header(&self) -> Vec<&'static str>;
    fn rows(&self) -> Vec<Vec<String>>;
}

/// Scientific notation with 17 significant digits, independent of locale.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn format_opt(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

pub fn to_csv(report: &impl Tabular) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(report.header()).expect("writing to memory");
    for row in report.rows() {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is UTF-8")
}

pub fn to_json(report: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize to JSON");
    s.push('\n');
    s
}

pub fn render<T: Tabular + Serialize>(report: &T, format: Format) -> String {
    match format {
        Format::Csv => to_csv(report),
        Format::Json => to_json(report),
    }
}

impl Tabular for TorsionReport {
    fn header(&self) -> Vec<&'static str> {
        vec!["dim", "inner", "outer", "c_value", "h_value", "u_critical", "critical_radius", "lower_bound", "upper_bound"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.dim.to_string(),
            format_float(self.inner),
            format_float(self.outer),
            format_float(self.c_value),
            format_float(self.h_value),
            format_float(self.u_critical),
            format_float(self.critical_radius()),
            format_float(self.lower_bound),
            format_float(self.upper_bound),
        ]]
    }
}

/// The torsion constant of the annulus given by exactly two radii.
pub fn cmd_torsion(cfg: &RunConfig) -> Result<TorsionReport> {
    match cfg.radii[..] {
        [inner, outer] => Ok(torsion_constant(&Annulus::new(inner, outer, cfg.dim)?)),
        _ => Err(Error::InvalidRadii(format!("torsion takes exactly two radii, got {}", cfg.radii.len()))),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterpolationReport {
    pub dim: usize,
    pub field: String,
    pub order: Order,
    pub truncation: usize,
    pub radii: Vec<f64>,
    pub h_max: f64,
    pub sup_error: f64,
    pub l2_error: f64,
    pub bound: Bound,
    pub bound_lhs: f64,
    pub bound_rhs: f64,
    pub ratio: Option<f64>,
    pub passes: bool,
}

impl Tabular for InterpolationReport {
    fn header(&self) -> Vec<&'static str> {
        vec![
            "dim", "field", "order", "truncation", "h_max", "sup_error", "l2_error", "bound", "bound_lhs", "bound_rhs",
            "ratio", "passes",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let bound = match self.bound {
            Bound::HarmonicSup => "harmonic_sup",
            Bound::BiharmonicL2 => "biharmonic_l2",
        };
        vec![vec![
            self.dim.to_string(),
            self.field.clone(),
            u8::from(self.order).to_string(),
            self.truncation.to_string(),
            format_float(self.h_max),
            format_float(self.sup_error),
            format_float(self.l2_error),
            bound.to_string(),
            format_float(self.bound_lhs),
            format_float(self.bound_rhs),
            format_opt(self.ratio),
            self.passes.to_string(),
        ]]
    }
}

/// Interpolates a suite field, measures the sup and `L2` errors and
/// evaluates the matching error bound.
pub fn cmd_interpolate(cfg: &RunConfig, field: &str, order: Order) -> Result<InterpolationReport> {
    let f = field_by_name(field, cfg.dim)?;
    let part = cfg.partition()?;
    let s = interpolate(f.as_ref(), &part, order.interpolant(), &cfg.harness)?;
    let sup_error = sup_norm_error(f.as_ref(), &s, &cfg.harness)?;
    let l2 = l2_error(f.as_ref(), &s, &cfg.harness)?;
    let cert = bound_certificate(f.as_ref(), &part, order.bound(), &cfg.harness)?;
    Ok(InterpolationReport {
        dim: cfg.dim,
        field: f.name(),
        order,
        truncation: cfg.harness.truncation,
        radii: cfg.radii.clone(),
        h_max: part.h_max(),
        sup_error,
        l2_error: l2,
        bound: cert.bound,
        bound_lhs: cert.lhs,
        bound_rhs: cert.rhs,
        ratio: cert.ratio,
        passes: cert.passes,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub dim: usize,
    pub field: String,
    pub study: StudyKind,
    pub truncation: usize,
    pub radii: Vec<f64>,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    /// Observed rate on the finest level.
    pub fn terminal_rate(&self) -> Option<f64> {
        self.rows.last().and_then(|r| r.observed_rate)
    }
}

impl Tabular for ConvergenceReport {
    fn header(&self) -> Vec<&'static str> {
        vec!["level", "h_max", "error", "rate"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| vec![r.level.to_string(), format_float(r.h_max), format_float(r.error), format_opt(r.observed_rate)])
            .collect()
    }
}

/// Refinement study starting from the configured radii.
pub fn cmd_convergence(cfg: &RunConfig, field: &str, study: StudyKind, levels: usize) -> Result<ConvergenceReport> {
    let f = field_by_name(field, cfg.dim)?;
    let rows = convergence_study(f.as_ref(), &cfg.partition()?, levels, study, &cfg.harness)?;
    Ok(ConvergenceReport {
        dim: cfg.dim,
        field: f.name(),
        study,
        truncation: cfg.harness.truncation,
        radii: cfg.radii.clone(),
        rows,
    })
}
