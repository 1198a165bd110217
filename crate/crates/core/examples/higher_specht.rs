//! Higher Specht polynomials: snaking sums, the Young idempotent formula, and
//! the basis check for a two-row triple.

use springer_lab::delta::Params;
use springer_lab::partition::Partition;
use springer_lab::specht::{
    enumerate_snakings, gr_counterexample_check, higher_specht, snaking_sum,
    verify_higher_specht_basis, young_idempotent_sum,
};
use springer_lab::tableau::{enumerate_syt, Tableau};

fn main() -> springer_lab::Result<()> {
    let t = Tableau::from_rows(vec![vec![1, 2], vec![3, 4]])?;
    println!(
        "{} snakings of {:?}",
        enumerate_snakings(&t)?.len(),
        t.rows()
    );
    for s in enumerate_syt(&t.shape()) {
        let f = higher_specht(&s, &t)?.poly;
        assert_eq!(snaking_sum(&s, &t)?, young_idempotent_sum(&s, &t)?);
        println!("  F_T^S for S = {:?}: {f}", s.rows());
    }

    let p = Params::new(4, Partition::new(vec![2, 1])?, 2)?;
    let v = verify_higher_specht_basis(&p)?;
    println!("\n{p}: rank {} of {} -> {}", v.rank, v.expected, v.verdict);

    let r = gr_counterexample_check()?;
    println!(
        "shape (4,4,1,1), S = {:?}: {} tableaux T, {} nonzero F_T^S",
        r.s_tab.rows(),
        r.tableaux_checked,
        r.nonzero
    );
    Ok(())
}
