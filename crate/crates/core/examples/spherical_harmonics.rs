//! Real spherical harmonics, sphere quadrature and Fourier–Laplace
//! coefficients.
//!
//! Run with `cargo run --example spherical_harmonics`.

use annular_polyspline::sphere::{basis_dimension, eval_harmonic, modes_up_to, sphere_quadrature, ModeIndex};
use annular_polyspline::{fourier_laplace_coefficient, Result};

fn main() -> Result<()> {
    for d in [2, 3] {
        let dims: Vec<usize> = (0..6).map(|k| basis_dimension(k, d)).collect::<Result<_>>()?;
        println!("d = {d}: dim H_k for k = 0..5 is {dims:?}");
    }

    // Gram matrix of all harmonics of degree <= 3 on S^2
    let quad = sphere_quadrature(3, 8)?;
    let modes = modes_up_to(3, 3)?;
    let mut worst: f64 = 0.0;
    for &a in &modes {
        for &b in &modes {
            let g = quad.integrate(|t| eval_harmonic(a, t, 3).unwrap() * eval_harmonic(b, t, 3).unwrap());
            worst = worst.max((g - if a == b { 1.0 } else { 0.0 }).abs());
        }
    }
    println!("{} modes on S^2, {} quadrature nodes, max |G - I| = {worst:.2e}", modes.len(), quad.len());

    // F(x) = x1 * x2 on the sphere of radius 2 lives entirely in degree 2
    let f = |x: &[f64]| x[0] * x[1];
    for mode in modes_up_to(2, 3)? {
        let c = fourier_laplace_coefficient(f, mode, 2.0, &quad)?;
        if c.abs() > 1e-12 {
            println!("coefficient of x1 x2 at r = 2 on Y_{{{},{}}}: {c:.12}", mode.k, mode.l);
        }
    }
    let y = eval_harmonic(ModeIndex::new(1, 1, 2)?, &[0.6, 0.8], 2)?;
    println!("Y_{{1,1}}(0.6, 0.8) in the plane = {y:.12}");
    Ok(())
}
