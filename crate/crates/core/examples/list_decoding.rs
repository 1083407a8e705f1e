//! Exact list profiles of greedy codes against the Johnson list bound.

use ringbounds::rational::{int, render};
use ringbounds::search::{greedy_gv, WordOrdering};
use ringbounds::verify::{johnson_rho_grid, verify_johnson};
use ringbounds::weights::homogeneous;
use ringbounds::FiniteRing;

fn main() -> ringbounds::Result<()> {
    let r = FiniteRing::parse("Z4")?;
    let h = homogeneous(&r, &int(1))?.expect("Z4 has a homogeneous weight");
    for (n, d) in [(3, 3), (4, 4), (4, 5)] {
        let code = greedy_gv(
            &r,
            &h,
            n,
            &int(d),
            WordOrdering::Lexicographic,
            &[],
            1 << 16,
        )?
        .code;
        println!("greedy code, n = {n}, d ≥ {d}, |C| = {}", code.len());
        for rho in johnson_rho_grid(h.gamma()) {
            let check = verify_johnson(&r, &code, &h, &rho, 1 << 16)?;
            println!(
                "  ρ = {:<4} radius {:<3} list size {:>3}  bound {:>4}  [{}]",
                render(&rho),
                render(&(&rho * int(n as i64))),
                check.profile_max,
                check
                    .list_bound
                    .map(|b| b.to_string())
                    .unwrap_or_else(|| "-".into()),
                check.condition
            );
        }
    }
    Ok(())
}
