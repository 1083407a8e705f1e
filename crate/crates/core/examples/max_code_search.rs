//! Certified maximum codes by branch and bound, compared with the Plotkin bound.
//!
//! cargo run --release --example max_code_search -- Z8 2

use ringbounds::bounds::plotkin_overweight;
use ringbounds::rational::int;
use ringbounds::search::{max_code, MaxCodeOptions};
use ringbounds::weights::overweight;
use ringbounds::FiniteRing;

fn main() -> ringbounds::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "Z4".into());
    let max_n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let r = FiniteRing::parse(&spec)?;
    let w = overweight(&r);
    for n in 1..=max_n {
        for d in 1..=2 * n {
            let res = max_code(&r, &w, n, &int(d as i64), &MaxCodeOptions::default())?;
            let plotkin = plotkin_overweight(&r, n, d)
                .map(|b| b.summary())
                .unwrap_or_else(|e| e.to_string());
            println!(
                "A({spec}, n={n}, d={d}) {} {:>4}   nodes {:>8}   Plotkin: {plotkin}",
                if res.certified_optimal { "=" } else { "≥" },
                res.code.len(),
                res.nodes_explored
            );
        }
    }
    Ok(())
}
