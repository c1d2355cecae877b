//! Scalar test fields with closed-form Laplacian, bi-Laplacian and radial
//! derivative.

use crate::error::{Error, Result};
use crate::sphere::{basis_dimension, eval_harmonic, max_supported_degree, ModeIndex};

/// A smooth scalar field on an annulus of `R^d` together with its exact
/// derivatives. The dimension is taken from the length of the point.
pub trait TestField: Send + Sync {
    fn name(&self) -> String;
    fn value(&self, x: &[f64]) -> f64;
    fn laplacian(&self, x: &[f64]) -> f64;
    fn bilaplacian(&self, x: &[f64]) -> f64;
    /// `dF/dr` at `x`.
    fn radial_derivative(&self, x: &[f64]) -> f64;
    /// Highest spherical-harmonic degree present on every sphere.
    fn angular_degree(&self) -> usize;
    /// `true` when the Laplacian vanishes identically.
    fn is_harmonic(&self) -> bool {
        false
    }
    /// `true` when the bi-Laplacian vanishes identically.
    fn is_biharmonic(&self) -> bool {
        self.is_harmonic()
    }
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// `|x|^p` for an even integer `p >= 2`.
#[derive(Debug, Clone, Copy)]
pub struct RadialPower(pub i32);

impl TestField for RadialPower {
    fn name(&self) -> String {
        format!("r{}", self.0)
    }
    fn value(&self, x: &[f64]) -> f64 {
        norm(x).powi(self.0)
    }
    fn laplacian(&self, x: &[f64]) -> f64 {
        let (p, d) = (self.0 as f64, x.len() as f64);
        p * (p + d - 2.0) * norm(x).powi(self.0 - 2)
    }
    fn bilaplacian(&self, x: &[f64]) -> f64 {
        let (p, d) = (self.0 as f64, x.len() as f64);
        p * (p + d - 2.0) * (p - 2.0) * (p + d - 4.0) * norm(x).powi(self.0 - 4)
    }
    fn radial_derivative(&self, x: &[f64]) -> f64 {
        self.0 as f64 * norm(x).powi(self.0 - 1)
    }
    fn angular_degree(&self) -> usize {
        0
    }
    fn is_biharmonic(&self) -> bool {
        self.0 == 2
    }
}

/// The first coordinate `x_1`.
#[derive(Debug, Clone, Copy)]
pub struct FirstCoordinate;

impl TestField for FirstCoordinate {
    fn name(&self) -> String {
        "x1".into()
    }
    fn value(&self, x: &[f64]) -> f64 {
        x[0]
    }
    fn laplacian(&self, _: &[f64]) -> f64 {
        0.0
    }
    fn bilaplacian(&self, _: &[f64]) -> f64 {
        0.0
    }
    fn radial_derivative(&self, x: &[f64]) -> f64 {
        x[0] / norm(x)
    }
    fn angular_degree(&self) -> usize {
        1
    }
    fn is_harmonic(&self) -> bool {
        true
    }
}

/// Solid harmonic `|x|^k Y_{k,l}(x/|x|)`.
#[derive(Debug, Clone, Copy)]
pub struct SolidHarmonic(pub ModeIndex);

impl SolidHarmonic {
    fn angular(&self, x: &[f64]) -> (f64, f64) {
        let r = norm(x);
        let theta: Vec<f64> = x.iter().map(|v| v / r).collect();
        let y = eval_harmonic(self.0, &theta, x.len()).expect("solid harmonic mode valid in this dimension");
        (r, y)
    }
}

impl TestField for SolidHarmonic {
    fn name(&self) -> String {
        format!("solid_{}_{}", self.0.k, self.0.l)
    }
    fn value(&self, x: &[f64]) -> f64 {
        let (r, y) = self.angular(x);
        r.powi(self.0.k as i32) * y
    }
    fn laplacian(&self, _: &[f64]) -> f64 {
        0.0
    }
    fn bilaplacian(&self, _: &[f64]) -> f64 {
        0.0
    }
    fn radial_derivative(&self, x: &[f64]) -> f64 {
        if self.0.k == 0 {
            return 0.0;
        }
        let (r, y) = self.angular(x);
        self.0.k as f64 * r.powi(self.0.k as i32 - 1) * y
    }
    fn angular_degree(&self) -> usize {
        self.0.k
    }
    fn is_harmonic(&self) -> bool {
        true
    }
}

/// `|x|^2 x_1`, biharmonic but not harmonic.
#[derive(Debug, Clone, Copy)]
pub struct SquaredNormTimesX1;

impl TestField for SquaredNormTimesX1 {
    fn name(&self) -> String {
        "r2x1".into()
    }
    fn value(&self, x: &[f64]) -> f64 {
        norm(x).powi(2) * x[0]
    }
    fn laplacian(&self, x: &[f64]) -> f64 {
        (2.0 * x.len() as f64 + 4.0) * x[0]
    }
    fn bilaplacian(&self, _: &[f64]) -> f64 {
        0.0
    }
    fn radial_derivative(&self, x: &[f64]) -> f64 {
        3.0 * norm(x) * x[0]
    }
    fn angular_degree(&self) -> usize {
        1
    }
    fn is_biharmonic(&self) -> bool {
        true
    }
}

/// The radial field `exp(-|x|)`.
#[derive(Debug, Clone, Copy)]
pub struct ExpDamped;

impl TestField for ExpDamped {
    fn name(&self) -> String {
        "exp".into()
    }
    fn value(&self, x: &[f64]) -> f64 {
        (-norm(x)).exp()
    }
    fn laplacian(&self, x: &[f64]) -> f64 {
        let r = norm(x);
        (-r).exp() * (1.0 - (x.len() as f64 - 1.0) / r)
    }
    fn bilaplacian(&self, x: &[f64]) -> f64 {
        let r = norm(x);
        let d1 = x.len() as f64 - 1.0;
        let d3 = x.len() as f64 - 3.0;
        (-r).exp() * (r.powi(3) - 2.0 * d1 * r * r + d1 * d3 * (r + 1.0)) / r.powi(3)
    }
    fn radial_derivative(&self, x: &[f64]) -> f64 {
        -(-norm(x)).exp()
    }
    fn angular_degree(&self) -> usize {
        0
    }
}

/// The fixed suite of test fields for dimension `d`: `|x|^2`, `|x|^4`, `x_1`,
/// every solid harmonic of degree `<= 2`, `|x|^2 x_1` and `exp(-|x|)`.
/// In `d = 4` only the radial fields are available.
pub fn standard_suite(d: usize) -> Result<Vec<Box<dyn TestField>>> {
    let max_degree = max_supported_degree(d)?;
    let mut out: Vec<Box<dyn TestField>> = vec![Box::new(RadialPower(2)), Box::new(RadialPower(4))];
    if max_degree.is_none() {
        out.push(Box::new(FirstCoordinate));
        for k in 0..=2 {
            for l in 1..=basis_dimension(k, d)? {
                out.push(Box::new(SolidHarmonic(ModeIndex { k, l })));
            }
        }
        out.push(Box::new(SquaredNormTimesX1));
    }
    out.push(Box::new(ExpDamped));
    Ok(out)
}

/// Looks up a suite field by its name (`r2`, `r4`, `x1`, `r2x1`, `exp`,
/// `solid_<k>_<l>`).
pub fn field_by_name(name: &str, d: usize) -> Result<Box<dyn TestField>> {
    standard_suite(d)?
        .into_iter()
        .find(|f| f.name() == name)
        .ok_or_else(|| Error::UnknownField(name.to_string()))
}
