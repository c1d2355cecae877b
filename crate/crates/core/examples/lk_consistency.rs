//! The Fourier–Laplace coefficient of `Delta F` equals `L_k` applied to the
//! coefficient of `F`, checked with a fourth-order finite-difference stencil.
//!
//! Run with `cargo run --example lk_consistency`.

use annular_polyspline::field::standard_suite;
use annular_polyspline::harness::lk_consistency_check;
use annular_polyspline::radial::Segment;
use annular_polyspline::sphere::{modes_up_to, sphere_quadrature};
use annular_polyspline::Result;

fn main() -> Result<()> {
    let d = 3;
    let quad = sphere_quadrature(d, 16)?;
    let domain = Segment::new(1.0, 2.0)?;
    let samples = [1.2, 1.5, 1.8];
    for f in standard_suite(d)? {
        let worst = modes_up_to(3, d)?
            .into_iter()
            .map(|m| lk_consistency_check(f.as_ref(), m, &samples, &domain, &quad))
            .collect::<Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        println!("{:<10} max relative deviation over k <= 3: {worst:.3e}", f.name());
    }
    Ok(())
}
