//! Overweight ball volumes: closed form, generic weight distribution and brute force.

use ringbounds::geometry::{ball_enumerate, ball_volume, ball_volume_overweight};
use ringbounds::rational::int;
use ringbounds::weights::{homogeneous, overweight};
use ringbounds::FiniteRing;

fn main() -> ringbounds::Result<()> {
    let r = FiniteRing::parse("Z8")?;
    let w = overweight(&r);
    println!(
        "{}: u = {}, v = {}",
        r.name(),
        r.unit_count(),
        r.nonzero_nonunit_count()
    );
    println!(
        "{:>3}{:>4}{:>12}{:>12}{:>12}",
        "n", "e", "formula", "by weight", "enumerated"
    );
    for n in 1..=3 {
        for e in 0..=2 * n {
            let brute = ball_enumerate(&r, &w, &vec![0; n], &int(e as i64), 1 << 20)?.len();
            println!(
                "{n:>3}{e:>4}{:>12}{:>12}{brute:>12}",
                ball_volume_overweight(&r, n, e),
                ball_volume(&w, n, &int(e as i64))
            );
        }
    }
    let h = homogeneous(&r, &int(1))?.expect("Z8 has a homogeneous weight");
    println!("\nhomogeneous weight on Z8, n = 4:");
    for radius in 0..=4 {
        println!("  radius {radius}: {}", ball_volume(&h, 4, &int(radius)));
    }
    Ok(())
}
