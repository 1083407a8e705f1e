//! Greedy codes and the covering lower bound they are guaranteed to meet.

use ringbounds::rational::{int, render};
use ringbounds::search::{greedy_gv, WordOrdering};
use ringbounds::weights::overweight;
use ringbounds::FiniteRing;

fn main() -> ringbounds::Result<()> {
    for spec in ["Z4", "Z9", "Z2xZ4"] {
        let r = FiniteRing::parse(spec)?;
        let w = overweight(&r);
        for n in 2..=3 {
            for d in 1..=2 * n as i64 {
                for ordering in [WordOrdering::Lexicographic, WordOrdering::WeightThenLex] {
                    let res = greedy_gv(&r, &w, n, &int(d), ordering, &[], 1 << 16)?;
                    let guarantee = res
                        .gv_guarantee
                        .as_ref()
                        .map(|g| render(&g.value))
                        .unwrap_or_else(|| "-".into());
                    println!(
                        "{spec:<6} n={n} d={d} {ordering:<16} |C| = {:>4}  (GV ≥ {guarantee})",
                        res.code.len()
                    );
                }
            }
        }
    }
    Ok(())
}
