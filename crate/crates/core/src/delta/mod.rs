//! Generalized descent words, the indexing set Σ_{n,λ,s}, battery-powered
//! tableaux and the correspondences between them.

mod battery;
mod sigma;
mod words;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use battery::{
    enumerate_battery, psi, psi_inverse, psi_standard, psi_tilde, BatteryTableau, PsiTable,
};
pub use sigma::{
    enumerate_pairs, enumerate_sigma, in_sigma_lambda, mu_from_exponents, mu_to_exponents,
    SigmaPair,
};
pub use words::{
    boosted_cocharge, d_gamma, descent_words, enumerate_d_nls, enumerate_d_nls_brute,
    is_descent_word, pairs_to_word, word_to_pair,
};

/// A parameter triple `(n, λ, s)` with `|λ| = k ≤ n` and `s ≥ max(1, ℓ(λ))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub lambda: Partition,
    pub s: usize,
}

impl Params {
    pub fn new(n: usize, lambda: Partition, s: usize) -> Result<Self> {
        if lambda.size() > n {
            return Err(Error::InvalidParameters(format!(
                "|λ| = {} exceeds n = {n}",
                lambda.size()
            )));
        }
        if s < lambda.len() || s == 0 {
            return Err(Error::InvalidParameters(format!(
                "s = {s} must be positive and at least ℓ(λ) = {}",
                lambda.len()
            )));
        }
        Ok(Params { n, lambda, s })
    }

    pub fn k(&self) -> usize {
        self.lambda.size()
    }

    /// `Λ_{n,λ,s}`: `(n−k) + λ_i` for `i = 1..=s`.
    pub fn big_lambda(&self) -> Vec<usize> {
        let nk = self.n - self.k();
        self.lambda.padded(self.s).iter().map(|l| l + nk).collect()
    }

    /// Cocharge offset `C(s−1, 2)·(n−k)` carried by the battery.
    pub fn battery_offset(&self) -> usize {
        let s = self.s;
        if s < 2 {
            return 0;
        }
        (s - 1) * (s - 2) / 2 * (self.n - self.k())
    }

    /// Every valid triple with `n ≤ max_n`, `λ ⊢ k ≤ n`, `ℓ(λ) ≤ s ≤ max_s`.
    pub fn grid(max_n: usize, max_s: usize) -> Vec<Params> {
        let mut out = Vec::new();
        for n in 0..=max_n {
            for k in 0..=n {
                for lambda in crate::partition::partitions_of(k) {
                    for s in lambda.len().max(1)..=max_s {
                        out.push(Params {
                            n,
                            lambda: lambda.clone(),
                            s,
                        });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.lambda, self.s)
    }
}
