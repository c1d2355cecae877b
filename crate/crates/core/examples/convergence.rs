//! Error and observed rate under repeated bisection of the partition.
//!
//! Run with `cargo run --release --example convergence`.

use annular_polyspline::field::{ExpDamped, RadialPower, TestField};
use annular_polyspline::harness::{convergence_study, HarnessConfig, StudyKind};
use annular_polyspline::{AnnularPartition, Result};

fn main() -> Result<()> {
    let base = AnnularPartition::new(vec![1.0, 2.0])?;
    let cfg = HarnessConfig::for_dimension(3);
    let cases: [(&dyn TestField, StudyKind); 4] = [
        (&RadialPower(2), StudyKind::HarmonicSup),
        (&ExpDamped, StudyKind::HarmonicL2),
        (&RadialPower(4), StudyKind::BiharmonicL2),
        (&ExpDamped, StudyKind::BiharmonicL2),
    ];
    for (field, study) in cases {
        println!("{} / {:?} (expected rate {})", field.name(), study, study.expected_rate());
        for row in convergence_study(field, &base, 5, study, &cfg)? {
            let rate = row.observed_rate.map(|r| format!("{r:.4}")).unwrap_or_else(|| "-".into());
            println!("  {:>2} h = {:<8} error = {:.6e} rate = {rate}", row.level, row.h_max, row.error);
        }
    }
    Ok(())
}
