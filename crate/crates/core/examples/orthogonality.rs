//! The biharmonic residual `Delta F - Delta I_4 F` is orthogonal to every
//! harmonic spline on the same partition.
//!
//! Run with `cargo run --example orthogonality`.

use annular_polyspline::field::{ExpDamped, RadialPower, SquaredNormTimesX1, TestField};
use annular_polyspline::harness::{orthogonality_check, HarnessConfig, PROBE_SEED};
use annular_polyspline::sphere::modes_up_to;
use annular_polyspline::{AnnularPartition, Result};

fn main() -> Result<()> {
    let d = 3;
    let cfg = HarnessConfig::for_dimension(d);
    let part = AnnularPartition::new(vec![1.0, 1.3, 1.5, 2.0])?;
    let probes = modes_up_to(4, d)?;
    println!("{} probe modes, seed {PROBE_SEED:#x}", probes.len());
    let fields: [&dyn TestField; 3] = [&RadialPower(4), &ExpDamped, &SquaredNormTimesX1];
    for f in fields {
        let rep = orthogonality_check(f, &part, &probes, &cfg)?;
        println!(
            "{:<5} ||residual|| = {:.3e}, max normalized inner product = {:.3e}{}",
            f.name(),
            rep.residual_norm,
            rep.max_normalized,
            if rep.trivially_orthogonal { " (trivially orthogonal)" } else { "" }
        );
    }
    Ok(())
}
