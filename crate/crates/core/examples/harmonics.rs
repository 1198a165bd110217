//! Ideal membership decided two ways: row reduction, and the harmonic oracle
//! that polarizes against Garnir polynomials.

use springer_lab::delta::Params;
use springer_lab::partition::Partition;
use springer_lab::poly::{polarization, rat_from, HarmonicOracle, IdealSlices, Polynomial};

fn main() -> springer_lab::Result<()> {
    let p = Params::new(3, Partition::new(vec![2])?, 2)?;
    let slices = IdealSlices::new(&p)?;
    let oracle = HarmonicOracle::new(&p);
    println!("{p}: {} Garnir generators", oracle.generators().len());
    for g in oracle.generators() {
        println!("  {g}");
    }

    let x = |i| Polynomial::var(3, i);
    let e1 = &(&x(0) + &x(1)) + &x(2);
    let candidates = [
        ("x1 + x2 + x3", e1.clone()),
        ("x1", x(0)),
        ("x1^2", &x(0) * &x(0)),
        ("x1 x2 - x2 x3", &(&x(0) * &x(1)) - &(&x(1) * &x(2))),
    ];
    for (name, f) in &candidates {
        println!(
            "{name:>14}: elimination {}, harmonic {}",
            slices.contains(f),
            oracle.contains(f)
        );
    }

    let f = Polynomial::monomial(vec![1, 0, 0], rat_from(1));
    let g = Polynomial::monomial(vec![2, 1, 0], rat_from(3));
    println!("\nd/dx1 acting on 3 x1^2 x2: {}", polarization(&f, &g));
    Ok(())
}
