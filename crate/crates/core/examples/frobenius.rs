//! Graded Frobenius characteristic computed three ways, plus its Hilbert
//! series and the classical specializations.

use springer_lab::delta::Params;
use springer_lab::partition::Partition;
use springer_lab::symfunc::{
    frob_battery, frob_rnk, frob_sigma, hilbert, modified_hall_littlewood,
};

fn main() -> springer_lab::Result<()> {
    let p = Params::new(4, Partition::new(vec![2, 1])?, 3)?;
    let by_sigma = frob_sigma(&p);
    let by_battery = frob_battery(&p)?;
    assert_eq!(by_sigma, by_battery);
    println!("Frob {p} = {by_sigma}");
    println!("at q = 1: {}", by_sigma.at_q_one());
    println!("Hilbert series: {}", hilbert(&by_sigma));

    let lambda = Partition::new(vec![2, 2])?;
    let hl = Params::new(4, lambda.clone(), 2)?;
    println!("\nn = k, s = 2: {}", frob_sigma(&hl));
    println!(
        "modified Hall-Littlewood H~_(2,2): {}",
        modified_hall_littlewood(&lambda)
    );

    let rnk = Params::new(4, Partition::new(vec![1, 1])?, 2)?;
    println!("\nlambda = 1^2, s = 2: {}", frob_sigma(&rnk));
    println!("R_(4,2): {}", frob_rnk(4, 2));
    Ok(())
}
