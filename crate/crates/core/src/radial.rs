//! Radial operators `L_k` and the closed-form solutions of `L_k u = 0` and
//! `L_k^2 u = 0` on a radial segment.
//!
//! `L_k f = f'' + (d-1)/r f' - k(k+d-2)/r^2 f` is the action of the Laplacian
//! on the degree-`k` spherical-harmonic channel. Every closed form handled
//! here is a finite sum of terms `c (r/s)^a ln(r/s)^j`, so `L_k` and radial
//! derivatives act on them exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A radial interval `[lo, hi]` with `0 < lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    lo: f64,
    hi: f64,
}

impl Segment {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi) {
            return Err(Error::InvalidRadii(format!("segment [{lo}, {hi}] needs 0 < lo < hi")));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, r: f64) -> bool {
        r >= self.lo && r <= self.hi
    }
}

/// `k (k + d - 2)`, the eigenvalue of the Laplace–Beltrami operator.
pub fn angular_eigenvalue(k: usize, d: usize) -> f64 {
    (k * (k + d - 2)) as f64
}

/// One term `coef * (r/scale)^exponent * ln(r/scale)^log_power`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialTerm {
    pub coef: f64,
    pub exponent: i32,
    pub log_power: u32,
    pub scale: f64,
}

impl RadialTerm {
    pub fn eval(&self, r: f64) -> f64 {
        if self.coef == 0.0 {
            return 0.0;
        }
        let t = r / self.scale;
        let mut v = self.coef * t.powi(self.exponent);
        if self.log_power > 0 {
            v *= t.ln().powi(self.log_power as i32);
        }
        v
    }

    fn derivative(&self) -> Vec<RadialTerm> {
        let a = self.exponent;
        let j = self.log_power;
        let c = self.coef / self.scale;
        let mut out = Vec::with_capacity(2);
        if a != 0 {
            out.push(RadialTerm { coef: c * a as f64, exponent: a - 1, log_power: j, scale: self.scale });
        }
        if j > 0 {
            out.push(RadialTerm { coef: c * j as f64, exponent: a - 1, log_power: j - 1, scale: self.scale });
        }
        out
    }

    fn apply_lk(&self, k: usize, d: usize) -> Vec<RadialTerm> {
        let a = self.exponent as f64;
        let j = self.log_power;
        let jf = j as f64;
        let c = self.coef / (self.scale * self.scale);
        let e = self.exponent - 2;
        let mut out = Vec::with_capacity(3);
        let lead = (a - k as f64) * (a + k as f64 + d as f64 - 2.0);
        if lead != 0.0 {
            out.push(RadialTerm { coef: c * lead, exponent: e, log_power: j, scale: self.scale });
        }
        let mid = (2.0 * a + d as f64 - 2.0) * jf;
        if j >= 1 && mid != 0.0 {
            out.push(RadialTerm { coef: c * mid, exponent: e, log_power: j - 1, scale: self.scale });
        }
        if j >= 2 {
            out.push(RadialTerm { coef: c * jf * (jf - 1.0), exponent: e, log_power: j - 2, scale: self.scale });
        }
        out
    }
}

/// A finite sum of [`RadialTerm`]s.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RadialExpr {
    pub terms: Vec<RadialTerm>,
}

impl RadialExpr {
    pub fn eval(&self, r: f64) -> f64 {
        self.terms.iter().map(|t| t.eval(r)).sum()
    }

    pub fn derivative(&self) -> RadialExpr {
        RadialExpr { terms: self.terms.iter().flat_map(RadialTerm::derivative).collect() }
    }

    /// Exact `L_k` of the expression in dimension `d`.
    pub fn apply_lk(&self, k: usize, d: usize) -> RadialExpr {
        RadialExpr { terms: self.terms.iter().flat_map(|t| t.apply_lk(k, d)).collect() }
    }

    pub fn scaled(mut self, factor: f64) -> RadialExpr {
        for t in &mut self.terms {
            t.coef *= factor;
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisKind {
    Power,
    PowerLog,
}

/// `(r/scale_radius)^exponent * ln(r/scale_radius)^log_power`.
///
/// Exponents are integers because `d` and `k` are; that makes coinciding
/// exponents an exact test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialBasisFunction {
    pub exponent: i32,
    pub log_power: u32,
    pub scale_radius: f64,
}

impl RadialBasisFunction {
    fn scaled_for(exponent: i32, log_power: u32, seg: &Segment) -> Self {
        // decaying powers are measured from the inner radius, everything else
        // from the outer one, so all values stay bounded on the segment
        let scale_radius = if exponent < 0 && log_power == 0 { seg.lo } else { seg.hi };
        Self { exponent, log_power, scale_radius }
    }

    pub fn kind(&self) -> BasisKind {
        if self.log_power == 0 {
            BasisKind::Power
        } else {
            BasisKind::PowerLog
        }
    }

    pub fn as_term(&self, coef: f64) -> RadialTerm {
        RadialTerm { coef, exponent: self.exponent, log_power: self.log_power, scale: self.scale_radius }
    }

    pub fn as_expr(&self) -> RadialExpr {
        RadialExpr { terms: vec![self.as_term(1.0)] }
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.as_term(1.0).eval(r)
    }

    /// `n`-th radial derivative at `r`.
    pub fn derivative(&self, r: f64, n: usize) -> f64 {
        let mut e = self.as_expr();
        for _ in 0..n {
            e = e.derivative();
        }
        e.eval(r)
    }
}

fn basis_from_exponents(exponents: &[i32], seg: &Segment) -> Vec<RadialBasisFunction> {
    let mut out: Vec<RadialBasisFunction> = Vec::with_capacity(exponents.len());
    for &a in exponents {
        let repeats = out.iter().filter(|b| b.exponent == a).count() as u32;
        out.push(RadialBasisFunction::scaled_for(a, repeats, seg));
    }
    out
}

fn check_dim(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    Ok(())
}

/// The two solutions `r^k`, `r^{2-d-k}` of `L_k u = 0`, with `ln r` replacing
/// the second when the exponents coincide (`d = 2`, `k = 0`).
pub fn harmonic_radial_basis(k: usize, d: usize, seg: &Segment) -> Result<[RadialBasisFunction; 2]> {
    check_dim(d)?;
    let k = k as i32;
    let d = d as i32;
    let b = basis_from_exponents(&[k, 2 - d - k], seg);
    Ok([b[0], b[1]])
}

/// Four solutions of `L_k^2 u = 0` built from the exponents
/// `k, 2-d-k, k+2, 4-d-k`; a repeated exponent gets an extra `ln r` factor.
pub fn biharmonic_radial_basis(k: usize, d: usize, seg: &Segment) -> Result<[RadialBasisFunction; 4]> {
    check_dim(d)?;
    let k = k as i32;
    let d = d as i32;
    let b = basis_from_exponents(&[k, 2 - d - k, k + 2, 4 - d - k], seg);
    Ok([b[0], b[1], b[2], b[3]])
}

/// Default finite-difference step for a segment.
pub fn default_step(seg: &Segment) -> f64 {
    seg.width() * 1e-3
}

/// `L_k g(r)` with fourth-order centered differences of step `h`. The stencil
/// `[r - 2h, r + 2h]` must lie inside `domain`.
pub fn lk_apply(g: impl Fn(f64) -> f64, k: usize, d: usize, r: f64, h: f64, domain: (f64, f64)) -> Result<f64> {
    check_dim(d)?;
    if !(h > 0.0) {
        return Err(Error::InvalidParameter(format!("step h = {h} must be positive")));
    }
    let (lo, hi) = (r - 2.0 * h, r + 2.0 * h);
    if lo < domain.0 || hi > domain.1 || lo <= 0.0 {
        return Err(Error::StencilOutsideDomain { lo, hi });
    }
    let f0 = g(r);
    let (fp1, fm1) = (g(r + h), g(r - h));
    let (fp2, fm2) = (g(r + 2.0 * h), g(r - 2.0 * h));
    let d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    let d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    Ok(d2 + (d as f64 - 1.0) / r * d1 - angular_eigenvalue(k, d) / (r * r) * f0)
}

/// Richardson-extrapolated [`lk_apply`] from steps `h` and `2h`; needs the
/// stencil `[r - 4h, r + 4h]` inside `domain`.
pub fn lk_apply_richardson(
    g: impl Fn(f64) -> f64,
    k: usize,
    d: usize,
    r: f64,
    h: f64,
    domain: (f64, f64),
) -> Result<f64> {
    let fine = lk_apply(&g, k, d, r, h, domain)?;
    let coarse = lk_apply(&g, k, d, r, 2.0 * h, domain)?;
    Ok((16.0 * fine - coarse) / 15.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg() -> Segment {
        Segment::new(1.0, 2.0).unwrap()
    }

    fn interior(seg: &Segment) -> Vec<f64> {
        (1..=5).map(|i| seg.lo() + seg.width() * i as f64 / 6.0).collect()
    }

    #[test]
    fn segment_validation() {
        assert!(Segment::new(2.0, 1.0).is_err());
        assert!(Segment::new(0.0, 1.0).is_err());
        assert!(Segment::new(1.0, 1.0).is_err());
    }

    #[test]
    fn harmonic_basis_examples() {
        let s = seg();
        let [a, b] = harmonic_radial_basis(0, 2, &s).unwrap();
        assert_eq!((a.exponent, a.log_power), (0, 0));
        assert_eq!((b.exponent, b.log_power, b.scale_radius), (0, 1, 2.0));
        assert!((b.eval(1.5) - (0.75f64).ln()).abs() < 1e-15);

        let [a, b] = harmonic_radial_basis(2, 3, &s).unwrap();
        assert!((a.eval(1.5) - 0.75f64.powi(2)).abs() < 1e-15);
        assert!((b.eval(1.5) - (1.0f64 / 1.5).powi(3)).abs() < 1e-15);
        assert_eq!(a.kind(), BasisKind::Power);
        assert_eq!(b.kind(), BasisKind::Power);
    }

    #[test]
    fn biharmonic_basis_examples() {
        let s = seg();
        let b = biharmonic_radial_basis(0, 3, &s).unwrap();
        let e: Vec<_> = b.iter().map(|f| (f.exponent, f.log_power)).collect();
        assert_eq!(e, vec![(0, 0), (-1, 0), (2, 0), (1, 0)]);

        let b = biharmonic_radial_basis(1, 2, &s).unwrap();
        let e: Vec<_> = b.iter().map(|f| (f.exponent, f.log_power)).collect();
        assert_eq!(e, vec![(1, 0), (-1, 0), (3, 0), (1, 1)]);
        assert_eq!(b[3].kind(), BasisKind::PowerLog);

        let b = biharmonic_radial_basis(0, 2, &s).unwrap();
        let e: Vec<_> = b.iter().map(|f| (f.exponent, f.log_power)).collect();
        assert_eq!(e, vec![(0, 0), (0, 1), (2, 0), (2, 1)]);

        for k in 0..30 {
            let b = biharmonic_radial_basis(k, 3, &s).unwrap();
            assert!(b.iter().all(|f| f.log_power == 0), "k={k}");
        }
    }

    // Independent check: closed-form derivatives of r^a ln(r)^j written out by hand.
    fn lk_by_hand(a: i32, j: u32, s: f64, k: usize, d: usize, r: f64) -> f64 {
        let a = a as f64;
        let t = r / s;
        let l = t.ln();
        let p = t.powf(a);
        let (f, f1, f2) = match j {
            0 => (p, a * p / r, a * (a - 1.0) * p / (r * r)),
            _ => (p * l, p * (a * l + 1.0) / r, p * (a * (a - 1.0) * l + 2.0 * a - 1.0) / (r * r)),
        };
        f2 + (d as f64 - 1.0) / r * f1 - angular_eigenvalue(k, d) / (r * r) * f
    }

    #[test]
    fn term_operator_matches_hand_derivatives() {
        for (a, j) in [(3, 0), (-2, 0), (2, 1), (0, 1), (1, 1), (-3, 1)] {
            for d in 2..=4 {
                for k in 0..4 {
                    let t = RadialTerm { coef: 1.0, exponent: a, log_power: j, scale: 1.7 };
                    let e = RadialExpr { terms: vec![t] }.apply_lk(k, d);
                    for r in [1.1, 1.5, 1.9] {
                        let want = lk_by_hand(a, j, 1.7, k, d, r);
                        assert!((e.eval(r) - want).abs() < 1e-12 * (1.0 + want.abs()), "a={a} j={j} d={d} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn bases_are_annihilated() {
        for d in 2..=3 {
            for k in 0..=12 {
                for s in [seg(), Segment::new(0.3, 0.35).unwrap(), Segment::new(2.0, 5.0).unwrap()] {
                    for f in harmonic_radial_basis(k, d, &s).unwrap() {
                        let e = f.as_expr().apply_lk(k, d);
                        for r in interior(&s) {
                            assert!(e.eval(r).abs() < 1e-10, "harmonic d={d} k={k} {f:?}");
                            let h = default_step(&s);
                            let fd = lk_apply(|x| f.eval(x), k, d, r, h, (s.lo(), s.hi()));
                            if let Ok(v) = fd {
                                let scale = f.eval(r).abs().max(1.0) * angular_eigenvalue(k, d).max(1.0) / (r * r);
                                assert!(v.abs() < 1e-6 * scale, "fd d={d} k={k}: {v}");
                            }
                        }
                    }
                    for f in biharmonic_radial_basis(k, d, &s).unwrap() {
                        let e = f.as_expr().apply_lk(k, d).apply_lk(k, d);
                        for r in interior(&s) {
                            assert!(e.eval(r).abs() < 1e-8, "biharmonic d={d} k={k} {f:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn scaled_bases_stay_bounded() {
        for s in [seg(), Segment::new(1.0, std::f64::consts::E).unwrap(), Segment::new(5.0, 5.5).unwrap()] {
            for d in 2..=3 {
                for k in [0, 1, 2, 10, 50, 200] {
                    let funcs: Vec<_> = harmonic_radial_basis(k, d, &s)
                        .unwrap()
                        .into_iter()
                        .chain(biharmonic_radial_basis(k, d, &s).unwrap())
                        .collect();
                    for f in funcs {
                        for i in 0..=200 {
                            let r = s.lo() + s.width() * i as f64 / 200.0;
                            let v = f.eval(r);
                            assert!(v.is_finite() && v.abs() <= std::f64::consts::E, "{f:?} at {r}: {v}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lk_apply_examples() {
        let dom = (0.5, 3.0);
        for k in 0..4 {
            let v = lk_apply(|r| r.powi(k as i32), k, 3, 1.3, 1e-3, dom).unwrap();
            assert!(v.abs() < 1e-7);
        }
        for r in [1.0, 1.7, 2.5] {
            let v = lk_apply(|r| r * r, 0, 3, r, 1e-3, dom).unwrap();
            assert!((v - 6.0).abs() < 1e-7);
        }
        assert!(matches!(lk_apply(|r| r, 0, 3, 0.501, 1e-2, dom), Err(Error::StencilOutsideDomain { .. })));
        assert!(lk_apply(|r| r, 0, 3, 1.0, 0.0, dom).is_err());
    }

    #[test]
    fn lk_apply_is_fourth_order() {
        // g = sin(r) with k = 2, d = 3; exact L_k from the closed form
        let (k, d, r) = (2usize, 3usize, 1.4f64);
        let exact = -r.sin() + 2.0 / r * r.cos() - 6.0 / (r * r) * r.sin();
        let err = |h: f64| (lk_apply(f64::sin, k, d, r, h, (0.5, 3.0)).unwrap() - exact).abs();
        let ratio = err(0.04) / err(0.02);
        assert!(ratio > 13.0 && ratio < 19.0, "ratio {ratio}");
        let rich = lk_apply_richardson(f64::sin, k, d, r, 0.02, (0.5, 3.0)).unwrap();
        assert!((rich - exact).abs() < err(0.02));
    }
}
