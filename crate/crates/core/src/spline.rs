//! Containers shared by the harmonic and biharmonic interpolants: the
//! annular partition, per-mode radial splines and the truncated expansion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::radial::{RadialBasisFunction, RadialExpr, Segment};
use crate::sphere::{harmonics_up_to, modes_up_to, unit_direction, ModeIndex};

/// Concentric spheres `r_1 < ... < r_N` splitting `A(r_1, r_N)` into annuli.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnularPartition {
    radii: Vec<f64>,
}

impl AnnularPartition {
    pub fn new(radii: Vec<f64>) -> Result<Self> {
        if radii.len() < 2 {
            return Err(Error::InvalidRadii(format!("need at least two radii, got {}", radii.len())));
        }
        if !radii.iter().all(|r| r.is_finite() && *r > 0.0) {
            return Err(Error::InvalidRadii("radii must be positive and finite".into()));
        }
        if !radii.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidRadii("radii must be strictly increasing".into()));
        }
        Ok(Self { radii })
    }

    /// Uniform partition of `[inner, outer]` into `pieces` annuli.
    pub fn uniform(inner: f64, outer: f64, pieces: usize) -> Result<Self> {
        if pieces == 0 {
            return Err(Error::InvalidRadii("need at least one annulus".into()));
        }
        let radii = (0..=pieces)
            .map(|i| if i == pieces { outer } else { inner + (outer - inner) * i as f64 / pieces as f64 })
            .collect();
        Self::new(radii)
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn inner(&self) -> f64 {
        self.radii[0]
    }

    pub fn outer(&self) -> f64 {
        self.radii[self.radii.len() - 1]
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.radii
            .windows(2)
            .map(|w| Segment::new(w[0], w[1]).expect("validated radii"))
            .collect()
    }

    /// Largest gap `max_j (r_{j+1} - r_j)`.
    pub fn h_max(&self) -> f64 {
        self.radii.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max)
    }

    /// Bisects every annulus, keeping the existing radii.
    pub fn bisect(&self) -> Self {
        let mut radii = Vec::with_capacity(2 * self.radii.len() - 1);
        for w in self.radii.windows(2) {
            radii.push(w[0]);
            radii.push(0.5 * (w[0] + w[1]));
        }
        radii.push(self.outer());
        Self { radii }
    }

    /// Index of the annulus containing `r`; nodes belong to the inner annulus
    /// except `r_1`. Radii within a few ulps outside the boundary spheres
    /// count as on them.
    pub fn segment_index(&self, r: f64) -> Result<usize> {
        let (lo, hi) = (self.inner(), self.outer());
        if !(r >= lo * (1.0 - BOUNDARY_SLACK) && r <= hi * (1.0 + BOUNDARY_SLACK)) {
            return Err(Error::OutsideDomain { r, lo, hi });
        }
        let pos = self.radii.partition_point(|&x| x < r);
        Ok(pos.saturating_sub(1).min(self.radii.len() - 2))
    }
}

/// Relative round-off tolerated when locating a radius on the boundary.
const BOUNDARY_SLACK: f64 = 4.0 * f64::EPSILON;

/// The radial closed form on one annulus: coefficients over a basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplinePiece {
    pub segment: Segment,
    pub basis: Vec<RadialBasisFunction>,
    pub coefs: Vec<f64>,
}

impl SplinePiece {
    pub fn expr(&self) -> RadialExpr {
        RadialExpr { terms: self.basis.iter().zip(&self.coefs).map(|(b, &c)| b.as_term(c)).collect() }
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.basis.iter().zip(&self.coefs).map(|(b, c)| c * b.eval(r)).sum()
    }

    pub fn derivative(&self, r: f64, n: usize) -> f64 {
        self.basis.iter().zip(&self.coefs).map(|(b, c)| c * b.derivative(r, n)).sum()
    }
}

/// Piecewise radial function carried by one `(k, l)` channel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialSpline {
    pub mode: ModeIndex,
    pub dim: usize,
    pub partition: AnnularPartition,
    pub pieces: Vec<SplinePiece>,
}

impl RadialSpline {
    pub fn eval(&self, r: f64) -> Result<f64> {
        Ok(self.pieces[self.partition.segment_index(r)?].eval(r))
    }

    /// `n`-th radial derivative, taken from the annulus containing `r`.
    pub fn derivative(&self, r: f64, n: usize) -> Result<f64> {
        Ok(self.pieces[self.partition.segment_index(r)?].derivative(r, n))
    }

    /// `n`-th derivative from a given annulus; used for one-sided values at
    /// nodes.
    pub fn piece_derivative(&self, piece: usize, r: f64, n: usize) -> f64 {
        self.pieces[piece].derivative(r, n)
    }

    /// Exact `L_k` of the closed form on the annulus containing `r`.
    pub fn lk_eval(&self, r: f64) -> Result<f64> {
        let piece = &self.pieces[self.partition.segment_index(r)?];
        Ok(piece.expr().apply_lk(self.mode.k, self.dim).eval(r))
    }
}

/// Truncated Fourier–Laplace expansion `sum_{k<=K} sum_l u_{k,l}(|x|) Y_{k,l}(x/|x|)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplineExpansion {
    pub dim: usize,
    pub partition: AnnularPartition,
    pub truncation: usize,
    /// One spline per mode, ordered by `(k, l)`.
    pub modes: Vec<RadialSpline>,
}

impl SplineExpansion {
    pub fn new(dim: usize, partition: AnnularPartition, truncation: usize, modes: Vec<RadialSpline>) -> Result<Self> {
        let expected = modes_up_to(truncation, dim)?;
        if expected.len() != modes.len() || expected.iter().zip(&modes).any(|(m, s)| *m != s.mode) {
            return Err(Error::InvalidParameter("expansion must hold every mode up to the truncation, in order".into()));
        }
        Ok(Self { dim, partition, truncation, modes })
    }

    fn split(&self, x: &[f64]) -> Result<(f64, Vec<f64>)> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        self.partition.segment_index(r)?;
        let theta = unit_direction(&x.iter().map(|v| v / r).collect::<Vec<_>>(), self.dim)?;
        Ok((r, theta))
    }

    /// Radial values of every mode at `r`, in mode order.
    pub fn radial_values(&self, r: f64) -> Result<Vec<f64>> {
        let j = self.partition.segment_index(r)?;
        Ok(self.modes.iter().map(|m| m.pieces[j].eval(r)).collect())
    }

    /// `L_k u_{k,l}(r)` of every mode, in mode order.
    pub fn radial_laplacians(&self, r: f64) -> Result<Vec<f64>> {
        self.modes.iter().map(|m| m.lk_eval(r)).collect()
    }

    /// Value of the expansion at `x`.
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        let (r, theta) = self.split(x)?;
        let y = harmonics_up_to(self.truncation, &theta, self.dim)?;
        Ok(self.radial_values(r)?.iter().zip(&y).map(|(u, y)| u * y).sum())
    }

    /// Exact Laplacian of the expansion at an interior point of an annulus.
    pub fn laplacian(&self, x: &[f64]) -> Result<f64> {
        let (r, theta) = self.split(x)?;
        let y = harmonics_up_to(self.truncation, &theta, self.dim)?;
        Ok(self.radial_laplacians(r)?.iter().zip(&y).map(|(u, y)| u * y).sum())
    }

    /// `alpha * a + beta * b` for expansions on the same partition and bases.
    pub fn linear_combination(alpha: f64, a: &Self, beta: f64, b: &Self) -> Result<Self> {
        if a.dim != b.dim || a.partition != b.partition || a.truncation != b.truncation {
            return Err(Error::InvalidParameter("expansions live on different grids".into()));
        }
        let mut out = a.clone();
        for (ma, mb) in out.modes.iter_mut().zip(&b.modes) {
            for (pa, pb) in ma.pieces.iter_mut().zip(&mb.pieces) {
                if pa.basis != pb.basis {
                    return Err(Error::InvalidParameter("expansions use different radial bases".into()));
                }
                for (ca, cb) in pa.coefs.iter_mut().zip(&pb.coefs) {
                    *ca = alpha * *ca + beta * cb;
                }
            }
        }
        Ok(out)
    }
}

/// Evaluates an expansion at a point; see [`SplineExpansion::eval`].
pub fn eval_expansion(expansion: &SplineExpansion, x: &[f64]) -> Result<f64> {
    expansion.eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_validation() {
        assert!(AnnularPartition::new(vec![1.0]).is_err());
        assert!(AnnularPartition::new(vec![1.0, 1.0]).is_err());
        assert!(AnnularPartition::new(vec![2.0, 1.0]).is_err());
        assert!(AnnularPartition::new(vec![-1.0, 1.0]).is_err());
        assert!(AnnularPartition::new(vec![0.5, 1.0, f64::NAN]).is_err());
    }

    #[test]
    fn partition_geometry() {
        let p = AnnularPartition::new(vec![1.0, 1.5, 2.0, 2.2]).unwrap();
        assert!((p.h_max() - 0.5).abs() < 1e-15);
        assert_eq!(p.segment_index(1.0).unwrap(), 0);
        assert_eq!(p.segment_index(1.5).unwrap(), 0);
        assert_eq!(p.segment_index(1.6).unwrap(), 1);
        assert_eq!(p.segment_index(2.2).unwrap(), 2);
        assert!(p.segment_index(0.99).is_err());
        assert_eq!(p.segment_index(2.2 * (1.0 + f64::EPSILON)).unwrap(), 2);
        assert_eq!(p.segment_index(1.0 - f64::EPSILON).unwrap(), 0);
        assert!(p.segment_index(2.2 + 1e-12).is_err());
        let b = p.bisect();
        assert_eq!(b.radii(), &[1.0, 1.25, 1.5, 1.75, 2.0, 2.1, 2.2]);
        assert!((b.h_max() - 0.25).abs() < 1e-15);
        let u = AnnularPartition::uniform(1.0, 2.0, 4).unwrap();
        assert_eq!(u.radii(), &[1.0, 1.25, 1.5, 1.75, 2.0]);
    }
}
