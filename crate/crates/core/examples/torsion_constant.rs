//! Exact interpolation constants `c_d(A(r, R))` and the shape of `H_d`.
//!
//! Run with `cargo run --example torsion_constant`.

use annular_polyspline::torsion::{h_d, torsion_constant, verify_hd_shape, Annulus};

fn main() -> annular_polyspline::Result<()> {
    println!("c_d(A(rho, 1)) with the bounds min/max{{1/(2d), 1/8}} (1 - rho)^2");
    println!("{:>3} {:>5} {:>14} {:>14} {:>14} {:>10}", "d", "rho", "lower", "c_d", "upper", "r*");
    for d in [2, 3, 4, 5, 8] {
        for rho in [0.1, 0.5, 0.9] {
            let r = torsion_constant(&Annulus::new(rho, 1.0, d)?);
            println!(
                "{d:>3} {rho:>5} {:>14.8e} {:>14.8e} {:>14.8e} {:>10.6}",
                r.lower_bound,
                r.c_value,
                r.upper_bound,
                r.critical_radius()
            );
        }
    }

    println!("\nH_d on [0, 1): decreasing for d = 2, 3, constant for d = 4, increasing for d >= 5");
    for d in 2..=6 {
        let shape = verify_hd_shape(d, 1000)?;
        let samples: Vec<String> = [0.0, 0.25, 0.5, 0.75, 0.999]
            .iter()
            .map(|&rho| h_d(rho, d).map(|h| format!("{h:.6}")))
            .collect::<Result<_, _>>()?;
        println!("d = {d}: {:?}, limit at 1 = {}, H = [{}]", shape.classification, shape.h_limit_at_one, samples.join(", "));
    }
    Ok(())
}
