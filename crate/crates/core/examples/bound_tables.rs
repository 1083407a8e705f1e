//! Bound tables for the overweight and the Johnson list bound.

use ringbounds::bounds::{all_overweight_bounds, johnson_homogeneous, plotkin_overweight};
use ringbounds::rational::{int, ratio};
use ringbounds::report::{bound_grid, emit_bounds, Format};
use ringbounds::FiniteRing;

fn main() -> ringbounds::Result<()> {
    let z4 = FiniteRing::parse("Z4")?;
    print!(
        "{}",
        emit_bounds(&all_overweight_bounds(&z4, 2, 3), Format::Table)
    );

    let z8 = FiniteRing::parse("Z8")?;
    let cells: Vec<_> = (1..=5)
        .flat_map(|n| (1..=2 * 5).map(move |d| (n, d)))
        .map(|(n, d)| Ok((n, d, plotkin_overweight(&z8, n, d)?)))
        .collect::<ringbounds::Result<_>>()?;
    println!("\nPlotkin bound on Z8 (n/a where d ≤ nη):");
    print!("{}", bound_grid(&cells).to_text());

    println!("\nJohnson list bound, n = 4, d = 4, γ = 1:");
    let rows: Vec<_> = [0, 1, 2, 3, 4]
        .iter()
        .map(|&k| johnson_homogeneous(4, &int(4), &int(1), &ratio(k, 4)))
        .collect::<ringbounds::Result<_>>()?;
    print!("{}", emit_bounds(&rows, Format::Table));
    Ok(())
}
