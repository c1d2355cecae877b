//! Biharmonic spline interpolation `I_4` with clamped radial derivatives,
//! and the per-mode linear systems behind it.
//!
//! Run with `cargo run --example biharmonic_interpolation`.

use annular_polyspline::field::{RadialPower, SquaredNormTimesX1, TestField};
use annular_polyspline::harness::{l2_error, HarnessConfig};
use annular_polyspline::{interpolate_biharmonic, AnnularPartition, ModeIndex, ModeSystem, Result};

fn main() -> Result<()> {
    let d = 2;
    let cfg = HarnessConfig::for_dimension(d);
    let quad = cfg.quadrature()?;
    let part = AnnularPartition::uniform(1.0, 2.0, 4)?;

    let s = interpolate_biharmonic(&RadialPower(4), &part, d, cfg.truncation, &quad)?;
    println!("|x|^4 on {:?}: L2 error {:.3e}", part.radii(), l2_error(&RadialPower(4), &s, &cfg)?);

    let s = interpolate_biharmonic(&SquaredNormTimesX1, &part, d, cfg.truncation, &quad)?;
    let x = [1.1, -0.9];
    println!("|x|^2 x1 is biharmonic: F = {:.12}, I_4 F = {:.12}", SquaredNormTimesX1.value(&x), s.eval(&x)?);

    println!("\ncondition numbers of the scaled mode systems on {} annuli", part.len() - 1);
    let values = vec![1.0; part.len()];
    for k in [0, 1, 5, 20, 50] {
        let system = ModeSystem::assemble(&values, (0.0, 0.0), ModeIndex { k, l: 1 }, d, &part)?;
        println!("k = {k:>2}: {:.3e}", system.condition_number());
    }
    Ok(())
}
