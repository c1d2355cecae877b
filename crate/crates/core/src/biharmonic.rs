//! Biharmonic polyspline interpolation with prescribed radial derivatives on
//! the innermost and outermost spheres.
//!
//! Per channel the unknowns are four coefficients per annulus over the
//! `L_k^2` basis. The rows are, in order: the two node values of every
//! annulus, continuity of the first and second radial derivative at every
//! interior node, and the two boundary derivatives.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::field::TestField;
use crate::harmonic::{check_quadrature, node_coefficients, sphere_coefficients};
use crate::radial::{biharmonic_radial_basis, RadialBasisFunction};
use crate::sphere::{AngularTable, ModeIndex, SphereQuadrature};
use crate::spline::{AnnularPartition, RadialSpline, SplineExpansion, SplinePiece};

/// Relative residual accepted after the solve.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

/// The assembled linear system of one channel.
#[derive(Debug, Clone)]
pub struct ModeSystem {
    pub mode: ModeIndex,
    pub matrix: DMatrix<f64>,
    pub rhs: DVector<f64>,
    pub bases: Vec<[RadialBasisFunction; 4]>,
}

impl ModeSystem {
    /// Assembles the system. Derivative rows are multiplied by the width of
    /// their annulus (once per derivative order) so that all rows are
    /// dimensionless.
    pub fn assemble(
        values: &[f64],
        end_derivs: (f64, f64),
        mode: ModeIndex,
        d: usize,
        part: &AnnularPartition,
    ) -> Result<Self> {
        if values.len() != part.len() {
            return Err(Error::InvalidParameter(format!(
                "expected {} node values, got {}",
                part.len(),
                values.len()
            )));
        }
        let segments = part.segments();
        let m = segments.len();
        let n = 4 * m;
        let bases = segments
            .iter()
            .map(|s| biharmonic_radial_basis(mode.k, d, s))
            .collect::<Result<Vec<_>>>()?;
        let mut a = DMatrix::zeros(n, n);
        let mut b = DVector::zeros(n);
        let mut row = 0;
        for (j, seg) in segments.iter().enumerate() {
            for (r, v) in [(seg.lo(), values[j]), (seg.hi(), values[j + 1])] {
                for (c, f) in bases[j].iter().enumerate() {
                    a[(row, 4 * j + c)] = f.eval(r);
                }
                b[row] = v;
                row += 1;
            }
        }
        for j in 0..m.saturating_sub(1) {
            let r = segments[j].hi();
            let w = 0.5 * (segments[j].width() + segments[j + 1].width());
            for order in 1..=2 {
                let scale = w.powi(order as i32);
                for c in 0..4 {
                    a[(row, 4 * j + c)] = scale * bases[j][c].derivative(r, order);
                    a[(row, 4 * (j + 1) + c)] = -scale * bases[j + 1][c].derivative(r, order);
                }
                row += 1;
            }
        }
        let (first, last) = (&segments[0], &segments[m - 1]);
        for (j, r, s, w) in [(0, first.lo(), end_derivs.0, first.width()), (m - 1, last.hi(), end_derivs.1, last.width())] {
            for c in 0..4 {
                a[(row, 4 * j + c)] = w * bases[j][c].derivative(r, 1);
            }
            b[row] = w * s;
            row += 1;
        }
        debug_assert_eq!(row, n);
        Ok(Self { mode, matrix: a, rhs: b, bases })
    }

    pub fn solve(&self) -> Result<DVector<f64>> {
        let x = self
            .matrix
            .clone()
            .lu()
            .solve(&self.rhs)
            .ok_or(Error::SingularSystem(self.mode))?;
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::SingularSystem(self.mode));
        }
        Ok(x)
    }

    /// `||A x - b|| / ||b||` (or the absolute residual when `b = 0`).
    pub fn relative_residual(&self, x: &DVector<f64>) -> f64 {
        let res = (&self.matrix * x - &self.rhs).norm();
        let b = self.rhs.norm();
        if b > 0.0 {
            res / b
        } else {
            res
        }
    }

    /// 2-norm condition number of the assembled matrix.
    pub fn condition_number(&self) -> f64 {
        let sv = self.matrix.clone().singular_values();
        let max = sv.iter().cloned().fold(0.0, f64::max);
        let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
        max / min
    }
}

/// Fits the C^2 piecewise `L_k^2`-solution through the node values with
/// radial derivatives `end_derivs` at the first and last node.
pub fn fit_biharmonic_mode(
    values: &[f64],
    end_derivs: (f64, f64),
    mode: ModeIndex,
    d: usize,
    part: &AnnularPartition,
) -> Result<RadialSpline> {
    let system = ModeSystem::assemble(values, end_derivs, mode, d, part)?;
    let x = system.solve()?;
    if system.relative_residual(&x) > RESIDUAL_TOLERANCE {
        return Err(Error::SingularSystem(mode));
    }
    let pieces = part
        .segments()
        .into_iter()
        .zip(system.bases)
        .enumerate()
        .map(|(j, (segment, basis))| SplinePiece {
            segment,
            basis: basis.to_vec(),
            coefs: x.rows(4 * j, 4).iter().copied().collect(),
        })
        .collect();
    Ok(RadialSpline { mode, dim: d, partition: part.clone(), pieces })
}

/// Biharmonic polyspline interpolant `I_4(F)` of the degree-`<= K` angular
/// part of `F`, with `dI_4/dr = dF/dr` on the innermost and outermost sphere.
pub fn interpolate_biharmonic(
    field: &(impl TestField + ?Sized),
    part: &AnnularPartition,
    d: usize,
    truncation: usize,
    quad: &SphereQuadrature,
) -> Result<SplineExpansion> {
    check_quadrature(d, truncation, quad)?;
    let table = AngularTable::new(truncation, quad)?;
    let coeffs = node_coefficients(|x| field.value(x), part, quad, &table);
    let inner = sphere_coefficients(|x| field.radial_derivative(x), part.inner(), quad, &table);
    let outer = sphere_coefficients(|x| field.radial_derivative(x), part.outer(), quad, &table);
    let modes = table
        .modes()
        .iter()
        .enumerate()
        .map(|(i, &mode)| {
            let values: Vec<f64> = coeffs.iter().map(|row| row[i]).collect();
            fit_biharmonic_mode(&values, (inner[i], outer[i]), mode, d, part)
        })
        .collect::<Result<Vec<_>>>()?;
    SplineExpansion::new(d, part.clone(), truncation, modes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{RadialPower, SolidHarmonic};
    use crate::radial::lk_apply;
    use crate::sphere::sphere_quadrature;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const M0: ModeIndex = ModeIndex { k: 0, l: 1 };

    #[test]
    fn system_layout() {
        let part = AnnularPartition::new(vec![1.0, 1.2, 1.5, 2.0]).unwrap();
        let s = ModeSystem::assemble(&[1.0; 4], (0.0, 0.0), M0, 3, &part).unwrap();
        assert_eq!(s.matrix.nrows(), 12);
        assert_eq!(s.matrix.ncols(), 12);
        // 2(N-1) value rows, 2(N-2) continuity rows, 2 boundary rows
        assert_eq!(2 * 3 + 2 * 2 + 2, 12);
    }

    #[test]
    fn squared_radius_is_reproduced() {
        let part = AnnularPartition::new(vec![1.0, 1.3, 1.6, 2.0]).unwrap();
        let values: Vec<f64> = part.radii().iter().map(|r| r * r).collect();
        let s = fit_biharmonic_mode(&values, (2.0, 4.0), M0, 3, &part).unwrap();
        for i in 0..=40 {
            let r = 1.0 + i as f64 / 40.0;
            assert!((s.eval(r).unwrap() - r * r).abs() < 1e-12, "r={r}");
        }
    }

    #[test]
    fn single_annulus_random_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for d in 2..=3 {
            for k in 0..6 {
                let part = AnnularPartition::new(vec![0.8, 1.9]).unwrap();
                let v: Vec<f64> = (0..2).map(|_| rng.random_range(-1.0..1.0)).collect();
                let ds = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                let mode = ModeIndex { k, l: 1 };
                let s = fit_biharmonic_mode(&v, ds, mode, d, &part).unwrap();
                assert!((s.eval(0.8).unwrap() - v[0]).abs() < 1e-9);
                assert!((s.eval(1.9).unwrap() - v[1]).abs() < 1e-9);
                assert!((s.derivative(0.8, 1).unwrap() - ds.0).abs() < 1e-9);
                assert!((s.derivative(1.9, 1).unwrap() - ds.1).abs() < 1e-9);
            }
        }
    }

    fn assert_c2(s: &RadialSpline, tol: f64) {
        for j in 0..s.pieces.len() - 1 {
            let r = s.pieces[j].segment.hi();
            for order in 0..=2 {
                let left = s.piece_derivative(j, r, order);
                let right = s.piece_derivative(j + 1, r, order);
                assert!((left - right).abs() <= tol * left.abs().max(1.0), "order {order} at {r}: {left} vs {right}");
            }
        }
    }

    #[test]
    fn fourth_power_is_not_reproduced_but_c2() {
        let part = AnnularPartition::new(vec![1.0, 1.5, 2.0]).unwrap();
        let values: Vec<f64> = part.radii().iter().map(|r| r.powi(4)).collect();
        let s = fit_biharmonic_mode(&values, (4.0, 32.0), M0, 3, &part).unwrap();
        assert_c2(&s, 1e-8);
        assert!((s.eval(1.25).unwrap() - 1.25f64.powi(4)).abs() > 1e-6);
        for (j, &r) in part.radii().iter().enumerate() {
            assert!((s.eval(r).unwrap() - values[j]).abs() < 1e-10 * values[j]);
        }
    }

    #[test]
    fn residuals_continuity_and_biharmonicity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let part = AnnularPartition::new(vec![1.0, 1.25, 1.5, 1.75, 2.0]).unwrap();
        for d in 2..=3 {
            for k in 0..=8 {
                let v: Vec<f64> = (0..part.len()).map(|_| rng.random_range(-1.0..1.0)).collect();
                let ds = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                let mode = ModeIndex { k, l: 1 };
                let sys = ModeSystem::assemble(&v, ds, mode, d, &part).unwrap();
                let x = sys.solve().unwrap();
                assert!(sys.relative_residual(&x) < 1e-9);
                let s = fit_biharmonic_mode(&v, ds, mode, d, &part).unwrap();
                assert_c2(&s, 1e-8);
                for (j, p) in s.pieces.iter().enumerate() {
                    let seg = p.segment;
                    for i in 1..4 {
                        let r = seg.lo() + seg.width() * i as f64 / 4.0;
                        let exact = p.expr().apply_lk(k, d).apply_lk(k, d).eval(r);
                        assert!(exact.abs() < 1e-8);
                        // finite differences of the exact L_k
                        let inner = p.expr().apply_lk(k, d);
                        let fd = lk_apply(|x| inner.eval(x), k, d, r, 1e-3 * seg.width(), (seg.lo(), seg.hi())).unwrap();
                        let scale = inner.eval(r).abs().max(1.0) * (1.0 + (k * k) as f64);
                        assert!(fd.abs() < 1e-6 * scale, "d={d} k={k} j={j}: {fd}");
                    }
                }
            }
        }
    }

    #[test]
    fn conditioning_up_to_degree_fifty() {
        let part = AnnularPartition::new(vec![1.0, 1.25, 1.5, 1.75, 2.0]).unwrap();
        for d in 2..=3 {
            for k in [0, 1, 2, 5, 10, 20, 35, 50] {
                let sys = ModeSystem::assemble(&[0.0; 5], (0.0, 0.0), ModeIndex { k, l: 1 }, d, &part).unwrap();
                let c = sys.condition_number();
                assert!(c < 1e8, "d={d} k={k}: cond {c:e}");
            }
        }
    }

    #[test]
    fn biharmonic_fields_are_reproduced() {
        let part = AnnularPartition::new(vec![1.0, 1.5, 2.0]).unwrap();
        let q = sphere_quadrature(3, 8).unwrap();
        let s = interpolate_biharmonic(&RadialPower(2), &part, 3, 2, &q).unwrap();
        let field = SolidHarmonic(ModeIndex { k: 2, l: 3 });
        let t = interpolate_biharmonic(&field, &part, 3, 2, &q).unwrap();
        for x in [[1.2, 0.3, -0.1], [0.0, 0.0, 1.9], [-0.9, 0.9, 0.5]] {
            assert!((s.eval(&x).unwrap() - RadialPower(2).value(&x)).abs() < 1e-10);
            assert!((t.eval(&x).unwrap() - field.value(&x)).abs() < 1e-10);
        }
    }
}
