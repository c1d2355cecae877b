//! Torsion function of an annulus and the best constant
//! `c_d(A(r,R)) = sup T_0 = (R-r)^2/(2d) H_d(r/R)`.
//!
//! `T_0` vanishes on both spheres and has `Delta T_0 = -1`. `H_d` and `B_d`
//! are evaluated through `s = -ln(rho)` with `expm1`/`ln_1p` and short power
//! series wherever the direct formulas cancel, which is near `rho = 1` where
//! the numerator of `H_d` vanishes to second order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `A(r, R) = { x in R^d : r < |x| < R }`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Annulus {
    inner: f64,
    outer: f64,
    dim: usize,
}

impl Annulus {
    pub fn new(inner: f64, outer: f64, dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::UnsupportedDimension(dim));
        }
        if !(inner.is_finite() && outer.is_finite() && inner > 0.0 && inner < outer) {
            return Err(Error::InvalidRadii(format!("annulus needs 0 < r < R, got r = {inner}, R = {outer}")));
        }
        Ok(Self { inner, outer, dim })
    }

    pub fn inner(&self) -> f64 {
        self.inner
    }

    pub fn outer(&self) -> f64 {
        self.outer
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ratio(&self) -> f64 {
        self.inner / self.outer
    }
}

/// `D = (d - 2) / 2`.
pub fn half_excess(d: usize) -> f64 {
    (d as f64 - 2.0) / 2.0
}

/// `C_d = max{1/(2d), 1/8}`, the dimension constant of the interpolation
/// error bounds.
pub fn interpolation_constant(d: usize) -> f64 {
    (1.0 / (2.0 * d as f64)).max(0.125)
}

fn radial_harmonic(t: f64, d: usize) -> f64 {
    // t = |x| / R
    if d == 2 {
        t.ln()
    } else {
        t.powi(2 - d as i32) - 1.0
    }
}

/// `T_0` at radius `|x|`.
pub fn torsion_function(x_norm: f64, ann: &Annulus) -> Result<f64> {
    let (r, big_r, d) = (ann.inner, ann.outer, ann.dim);
    if !(x_norm >= r && x_norm <= big_r) {
        return Err(Error::OutsideDomain { r: x_norm, lo: r, hi: big_r });
    }
    let t = x_norm / big_r;
    let rho = r / big_r;
    let u = t * t;
    let ratio = (1.0 - rho * rho) / radial_harmonic(rho, d);
    Ok(big_r * big_r / (2.0 * d as f64) * (1.0 - u - ratio * radial_harmonic(t, d)))
}

fn check_open_ratio(rho: f64) -> Result<()> {
    if !(rho > 0.0 && rho < 1.0) {
        return Err(Error::InvalidParameter(format!("ratio {rho} outside (0, 1)")));
    }
    Ok(())
}

/// `B_d(rho) = rho^{2D} (1 - rho^2) / (1 - rho^{2D})` for `d >= 3`.
pub fn b_d(rho: f64, d: usize) -> Result<f64> {
    if d < 3 {
        return Err(Error::UnsupportedDimension(d));
    }
    check_open_ratio(rho)?;
    let s = -(rho - 1.0).ln_1p();
    let big_d = half_excess(d);
    Ok(-(-2.0 * s).exp_m1() / (2.0 * big_d * s).exp_m1())
}

/// `delta = 1 - D B_d(rho)` as a function of `s = -ln rho`.
fn one_minus_scaled_b(s: f64, big_d: f64) -> f64 {
    let x = 2.0 * s;
    let denom = (big_d * x).exp_m1();
    if x * big_d.max(1.0) < 0.5 {
        // expm1(D x) + D expm1(-x) = sum_{n>=2} x^n (D^n + D (-1)^n) / n!
        let mut num = 0.0;
        let mut xn_over_fact = x;
        let mut dn = big_d;
        let mut sign = -1.0;
        for n in 2..40 {
            xn_over_fact *= x / n as f64;
            dn *= big_d;
            sign = -sign;
            let term = xn_over_fact * (dn + big_d * sign);
            num += term;
            // odd terms vanish when D = 1, so bound the tail by the magnitude
            if xn_over_fact * (dn + big_d) < 1e-18 * num.abs() {
                break;
            }
        }
        num / denom
    } else if denom.is_infinite() {
        1.0
    } else {
        1.0 + big_d * (-x).exp_m1() / denom
    }
}

/// `delta + (1/alpha) ((1 - delta)^alpha - 1)`.
fn critical_gap(delta: f64, alpha: f64) -> f64 {
    if delta.abs() < 0.1 {
        let mut sum = 0.0;
        let mut binom = alpha; // C(alpha, 1)
        let mut pow = -delta;
        for n in 2..80 {
            binom *= (alpha - (n - 1) as f64) / n as f64;
            pow *= -delta;
            let term = binom * pow;
            sum += term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        sum / alpha
    } else {
        delta + (alpha * (-delta).ln_1p()).exp_m1() / alpha
    }
}

/// `(1 - q) + q ln q` with `q = 1 + e`.
fn log_gap(e: f64) -> f64 {
    if e.abs() < 0.1 {
        let mut sum = 0.0;
        let mut pow = e;
        for n in 2..80 {
            pow *= -e;
            let term = -pow / (n * (n - 1)) as f64;
            sum += term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        sum
    } else {
        (1.0 + e) * e.ln_1p() - e
    }
}

/// Critical point `u_0` (in `u = |x|^2/R^2`) and the numerator
/// `G = (1 - rho)^2 H_d(rho)`.
fn critical_point(rho: f64, d: usize) -> (f64, f64) {
    let s = -(rho - 1.0).ln_1p();
    if d == 2 {
        let x = 2.0 * s;
        // q = (1 - rho^2) / (-2 ln rho) = -expm1(-x)/x, e = q - 1
        let e = if x < 0.5 {
            let mut sum = 0.0;
            let mut term = 1.0;
            for n in 1..40 {
                term *= -x / (n + 1) as f64;
                sum += term;
                if term.abs() < 1e-18 * sum.abs() {
                    break;
                }
            }
            sum
        } else {
            -(-x).exp_m1() / x - 1.0
        };
        (1.0 + e, log_gap(e))
    } else {
        let big_d = half_excess(d);
        let alpha = 1.0 / (big_d + 1.0);
        let delta = one_minus_scaled_b(s, big_d);
        let u0 = (alpha * (-delta).ln_1p()).exp();
        (u0, -critical_gap(delta, alpha) / big_d)
    }
}

/// `H_d(rho)` on `[0, 1)`; `H_d(0) = 1` for every `d >= 2`.
pub fn h_d(rho: f64, d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    if !(0.0..1.0).contains(&rho) {
        return Err(Error::InvalidParameter(format!("ratio {rho} outside [0, 1)")));
    }
    if rho == 0.0 {
        return Ok(1.0);
    }
    let (_, g) = critical_point(rho, d);
    Ok(g / ((1.0 - rho) * (1.0 - rho)))
}

/// `lim_{rho -> 1} H_d(rho) = (D + 1)/2`.
pub fn h_d_limit_at_one(d: usize) -> f64 {
    (half_excess(d) + 1.0) / 2.0
}

/// Best constant of an annulus with its bracketing bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TorsionReport {
    pub dim: usize,
    pub inner: f64,
    pub outer: f64,
    pub c_value: f64,
    pub h_value: f64,
    /// Maximizer of `T_0` in the variable `u = |x|^2 / R^2`.
    pub u_critical: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
}

impl TorsionReport {
    /// Radius at which `T_0` attains `c_value`.
    pub fn critical_radius(&self) -> f64 {
        self.outer * self.u_critical.sqrt()
    }
}

/// `c_d(A(r,R)) = (R - r)^2/(2d) H_d(r/R)` and the bounds
/// `min/max{1/(2d), 1/8} (R - r)^2`.
pub fn torsion_constant(ann: &Annulus) -> TorsionReport {
    let d = ann.dim;
    let rho = ann.ratio();
    let (u0, g) = critical_point(rho, d);
    let h = g / ((1.0 - rho) * (1.0 - rho));
    let width2 = (ann.outer - ann.inner).powi(2);
    let a = 1.0 / (2.0 * d as f64);
    TorsionReport {
        dim: d,
        inner: ann.inner,
        outer: ann.outer,
        c_value: width2 / (2.0 * d as f64) * h,
        h_value: h,
        u_critical: u0,
        lower_bound: a.min(0.125) * width2,
        upper_bound: a.max(0.125) * width2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Monotonicity {
    StrictlyDecreasing,
    Constant,
    StrictlyIncreasing,
    Mixed,
}

/// Numerical shape of `H_d` on a uniform grid of `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShapeReport {
    pub dim: usize,
    pub grid_size: usize,
    pub classification: Monotonicity,
    pub h_at_zero: f64,
    pub h_limit_at_one: f64,
    pub min_value: f64,
    pub max_value: f64,
    /// Smallest and largest successive difference.
    pub min_step: f64,
    pub max_step: f64,
}

/// Tolerance under which `H_d` counts as constant.
pub const CONSTANT_TOLERANCE: f64 = 1e-10;

/// Samples `H_d` at `rho_i = i / grid_size`, `i = 0..grid_size`, and classifies
/// the sign pattern of successive differences.
pub fn verify_hd_shape(d: usize, grid_size: usize) -> Result<ShapeReport> {
    if grid_size < 100 {
        return Err(Error::InvalidParameter(format!("grid size {grid_size} below 100")));
    }
    let values = (0..grid_size)
        .map(|i| h_d(i as f64 / grid_size as f64, d))
        .collect::<Result<Vec<_>>>()?;
    let steps: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    let min_step = steps.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_step = steps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min_value = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_value = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let classification = if values.iter().all(|v| (v - values[0]).abs() <= CONSTANT_TOLERANCE) {
        Monotonicity::Constant
    } else if min_step > 0.0 {
        Monotonicity::StrictlyIncreasing
    } else if max_step < 0.0 {
        Monotonicity::StrictlyDecreasing
    } else {
        Monotonicity::Mixed
    };
    Ok(ShapeReport {
        dim: d,
        grid_size,
        classification,
        h_at_zero: values[0],
        h_limit_at_one: h_d_limit_at_one(d),
        min_value,
        max_value,
        min_step,
        max_step,
    })
}
