//! Tabulate a few rings and print their structure.
//!
//! cargo run --example ring_structure -- "Z4[x]/(x^2+2)"

use ringbounds::weights::eta;
use ringbounds::FiniteRing;

fn main() -> ringbounds::Result<()> {
    let specs: Vec<String> = std::env::args().skip(1).collect();
    let specs = if specs.is_empty() {
        ["Z8", "GF(9)", "Z2xZ4", "Z2[x]/(x^2)"]
            .map(String::from)
            .to_vec()
    } else {
        specs
    };
    for spec in specs {
        let r = FiniteRing::parse(&spec)?;
        println!("{} (order {})", r.name(), r.order());
        println!("  elements: {}", r.labels().join(" "));
        let units: Vec<&str> = r.units().iter().map(|&u| r.label(u)).collect();
        println!("  units ({}): {}", units.len(), units.join(" "));
        match r.locality().maximal_ideal_order() {
            Some(j) => {
                let q = r.locality().residue_field_order.unwrap();
                print!("  local, |J| = {j}, q = {q}");
                match eta(&r) {
                    Ok(e) => println!(", eta = {}", ringbounds::rational::render(&e)),
                    Err(_) => println!(" (field)"),
                }
            }
            None => println!("  not local"),
        }
        println!("  left ideals:");
        for ideal in r.left_ideals() {
            let labels: Vec<&str> = ideal.iter().map(|&x| r.label(x)).collect();
            println!("    {{{}}}", labels.join(", "));
        }
        let classes: Vec<String> = r
            .associate_classes()
            .iter()
            .map(|c| {
                format!(
                    "[{}]",
                    c.iter().map(|&x| r.label(x)).collect::<Vec<_>>().join(" ")
                )
            })
            .collect();
        println!("  associate classes: {}", classes.join(" "));
    }
    Ok(())
}
