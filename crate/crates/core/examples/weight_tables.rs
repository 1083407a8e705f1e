//! Hamming, Lee and overweight tables side by side, with the triangle check.

use ringbounds::rational::render;
use ringbounds::weights::{hamming, lee, overweight, triangle_holds};
use ringbounds::FiniteRing;

fn main() -> ringbounds::Result<()> {
    for spec in ["Z4", "Z6", "Z9"] {
        let r = FiniteRing::parse(spec)?;
        let tables = [hamming(&r), lee(&r)?, overweight(&r)];
        println!("{spec}");
        println!(
            "  {:<6}{:>10}{:>10}{:>12}",
            "x", "hamming", "lee", "overweight"
        );
        for x in 0..r.order() {
            println!(
                "  {:<6}{:>10}{:>10}{:>12}",
                r.label(x),
                render(tables[0].weight(x)),
                render(tables[1].weight(x)),
                render(tables[2].weight(x))
            );
        }
        for w in &tables {
            println!(
                "  {:<11} average {:>5}, triangle inequality {}",
                w.kind().to_string(),
                render(w.gamma()),
                if triangle_holds(&r, w) {
                    "holds"
                } else {
                    "fails"
                }
            );
        }
    }
    println!("\nCSV export of the Z4 overweight:");
    let z4 = FiniteRing::parse("Z4")?;
    print!("{}", overweight(&z4).to_csv(&z4));
    Ok(())
}
