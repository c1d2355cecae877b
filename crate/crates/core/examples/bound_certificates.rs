//! Both interpolation error bounds for every field of the standard suite.
//!
//! Run with `cargo run --release --example bound_certificates`.

use annular_polyspline::field::standard_suite;
use annular_polyspline::harness::{bound_certificate, Bound, HarnessConfig};
use annular_polyspline::{AnnularPartition, Result};

fn main() -> Result<()> {
    let part = AnnularPartition::new(vec![1.0, 1.25, 1.5, 1.75, 2.0])?;
    for d in [2, 3] {
        let cfg = HarnessConfig::for_dimension(d);
        println!("d = {d}, radii {:?}", part.radii());
        for f in standard_suite(d)? {
            for bound in [Bound::HarmonicSup, Bound::BiharmonicL2] {
                let c = bound_certificate(f.as_ref(), &part, bound, &cfg)?;
                let ratio = c.ratio.map(|r| format!("{r:.4}")).unwrap_or_else(|| "-".into());
                println!(
                    "  {:<10} {:<13} lhs {:.3e} rhs {:.3e} ratio {ratio:>6} {}",
                    f.name(),
                    format!("{bound:?}"),
                    c.lhs,
                    c.rhs,
                    if c.passes { "ok" } else { "FAILED" }
                );
            }
        }
    }
    Ok(())
}
