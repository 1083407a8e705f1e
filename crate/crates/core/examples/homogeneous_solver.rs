//! Solve for homogeneous weights and report when none exists.

use ringbounds::rational::{int, render};
use ringbounds::weights::{solve_homogeneous, triangle_holds, IdealConstraints};
use ringbounds::FiniteRing;

fn main() -> ringbounds::Result<()> {
    for spec in ["Z4", "Z6", "Z8", "Z12", "GF(4)", "Z2xZ2", "Z4[x]/(x^2+2)"] {
        let r = FiniteRing::parse(spec)?;
        for constraints in [
            IdealConstraints::AllLeftIdeals,
            IdealConstraints::PrincipalOnly,
        ] {
            let report = solve_homogeneous(&r, &int(1), constraints)?;
            println!("{spec}: {}", report.summary());
            if let Some(w) = report.weight() {
                let table: Vec<String> = w.table().iter().map(render).collect();
                println!("  w = [{}]", table.join(", "));
                println!("  triangle inequality: {}", triangle_holds(&r, w));
            }
        }
    }
    Ok(())
}
