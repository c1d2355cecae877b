//! Harmonic spline interpolation `I_2` and the sharpness identity
//! `|x|^2 - I_2(|x|^2) = -2d T_0`.
//!
//! Run with `cargo run --example harmonic_interpolation`.

use annular_polyspline::field::{ExpDamped, RadialPower, TestField};
use annular_polyspline::harness::{error_along_ray, sup_norm_error, HarnessConfig};
use annular_polyspline::torsion::{torsion_constant, torsion_function, Annulus};
use annular_polyspline::{interpolate_harmonic, AnnularPartition, Result};

fn main() -> Result<()> {
    let d = 3;
    let cfg = HarnessConfig::for_dimension(d);
    let quad = cfg.quadrature()?;
    let part = AnnularPartition::new(vec![1.0, 1.25, 1.6, 2.0])?;

    let s = interpolate_harmonic(&ExpDamped, &part, d, cfg.truncation, &quad)?;
    let x = [0.9, -0.8, 0.7];
    println!("exp(-|x|) = {:.12}, I_2 = {:.12}", ExpDamped.value(&x), s.eval(&x)?);
    println!("grid sup error of I_2 exp(-|x|): {:.3e}", sup_norm_error(&ExpDamped, &s, &cfg)?);

    let one = AnnularPartition::new(vec![1.0, 2.0])?;
    let ann = Annulus::new(1.0, 2.0, d)?;
    let s = interpolate_harmonic(&RadialPower(2), &one, d, cfg.truncation, &quad)?;
    let radii = [1.0, 1.2, 1.4, 1.6, 1.8, 2.0];
    let err = error_along_ray(&RadialPower(2), &s, &[0.0, 0.0, 1.0], &radii)?;
    println!("\n{:>5} {:>18} {:>18}", "r", "F - I_2 F", "-2d T_0");
    for (e, &r) in err.iter().zip(&radii) {
        println!("{r:>5} {e:>18.12} {:>18.12}", -2.0 * d as f64 * torsion_function(r, &ann)?);
    }
    let c = torsion_constant(&ann).c_value;
    println!("2d c_d = {:.12}, grid sup = {:.12}", 2.0 * d as f64 * c, sup_norm_error(&RadialPower(2), &s, &cfg)?);
    Ok(())
}
