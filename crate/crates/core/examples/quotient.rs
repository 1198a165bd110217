//! Exact linear algebra in C[x]/I for a triple: quotient dimension, graded
//! ranks, and whether the descent monomials span.

use springer_lab::delta::{enumerate_d_nls, Params};
use springer_lab::partition::Partition;
use springer_lab::poly::{ideal_generators, IdealSlices};

fn main() -> springer_lab::Result<()> {
    let p = Params::new(4, Partition::new(vec![2, 1])?, 3)?;
    let gens = ideal_generators(&p);
    println!("{p}: {} generators", gens.len());
    for g in gens.iter().take(6) {
        println!("  {g}");
    }

    let slices = IdealSlices::new(&p)?;
    println!("algebra dimension s^n = {}", slices.algebra_dimension());
    println!("ideal rank per degree {:?}", slices.graded_ranks());
    println!("quotient dimension {}", slices.quotient_dimension());
    println!("Hilbert series {}", slices.hilbert());

    let words = enumerate_d_nls(&p);
    println!(
        "{} descent monomials span the quotient: {}",
        words.len(),
        slices.spans(&words)
    );
    Ok(())
}
