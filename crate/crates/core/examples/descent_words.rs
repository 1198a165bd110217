//! Descent words, Σ pairs and battery-powered tableaux for one triple, and the
//! maps between them.
//!
//! cargo run --example descent_words -- 4 2,1 3

use springer_lab::delta::{
    enumerate_d_nls, enumerate_sigma, pairs_to_word, psi, word_to_pair, Params,
};
use springer_lab::partition::parse_partition;

fn digits(w: &[u32]) -> String {
    w.iter().map(|d| d.to_string()).collect()
}

fn main() -> springer_lab::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().map_or(Ok(4), |a| a.parse()).expect("n");
    let lambda = parse_partition(args.get(1).map_or("2,1", String::as_str))?;
    let s = args.get(2).map_or(Ok(3), |a| a.parse()).expect("s");
    let p = Params::new(n, lambda, s)?;

    let words = enumerate_d_nls(&p);
    println!("{p}: {} descent words", words.len());
    for a in &words {
        let (w, mu) = word_to_pair(a, &p)?;
        assert_eq!(&pairs_to_word(&w, &mu, p.k() as u32), a);
        println!("  {}  <->  w = {:?}, mu = {mu}", digits(a), w.letters());
    }

    let sigma = enumerate_sigma(&p);
    println!("\n{} pairs (S, mu) and their battery tableaux", sigma.len());
    for pair in &sigma {
        let t = psi(pair, &p)?;
        println!(
            "  S = {:?}, mu = {}  ->  device {:?}, battery {:?}, cocharge {}",
            pair.tableau.rows(),
            pair.mu,
            t.device.rows(),
            t.battery.rows(),
            t.cocharge()
        );
    }
    Ok(())
}
