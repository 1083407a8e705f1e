//! Direct checks of the averaging inequalities, then seeded randomized suites.

use ringbounds::geometry::Code;
use ringbounds::rational::int;
use ringbounds::verify::{
    check_hamming_average, check_maxwt_on_ring, check_pair_sum, check_probineq, maxwt_suite,
    pair_sum_suite, probineq_suite, Distribution,
};
use ringbounds::weights::homogeneous;
use ringbounds::FiniteRing;

fn main() -> ringbounds::Result<()> {
    let z4 = FiniteRing::parse("Z4")?;
    let z8 = FiniteRing::parse("Z8")?;
    let all4 = [0, 1, 2, 3];
    println!(
        "{}",
        check_hamming_average(&z4, &[0, 2], &Distribution::uniform(&z4, &[0, 2])?)?.summary()
    );
    println!(
        "{}",
        check_probineq(&z4, &Distribution::uniform(&z4, &all4)?)?.summary()
    );
    println!(
        "{}",
        check_probineq(
            &z8,
            &Distribution::uniform(&z8, &(0..8).collect::<Vec<_>>())?
        )?
        .summary()
    );
    let c = Code::new(&z4, 2, vec![vec![0, 0], vec![2, 2]])?;
    println!("{}", check_pair_sum(&z4, &c)?.summary());
    let c = Code::new(&z4, 2, vec![vec![0, 0], vec![1, 1]])?;
    println!("{}", check_maxwt_on_ring(&z4, &c, &int(1))?.summary());

    println!();
    for spec in ["Z4", "Z8", "Z9", "Z4[x]/(x^2+2)"] {
        let r = FiniteRing::parse(spec)?;
        println!("{}", probineq_suite(&r, 2000, 1)?.summary());
        println!("{}", pair_sum_suite(&r, 2000, 2, 3, 8)?.summary());
        if let Some(h) = homogeneous(&r, &int(1))? {
            println!("{}", maxwt_suite(&r, &h, 2000, 3, 3, 8)?.summary());
        }
    }
    Ok(())
}
