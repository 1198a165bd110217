use serde::{Deserialize, Serialize};

use super::Params;
use crate::partition::{dominates_unchecked, partitions_in_box, Partition};
use crate::tableau::{enumerate_all_syt, Tableau};
use crate::word::{all_permutations, ctype_of_tableau, rsk, Permutation};

/// An element `(S, μ)` of Σ_{n,λ,s}.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SigmaPair {
    pub tableau: Tableau,
    pub mu: Partition,
}

/// `ctype(S|_k) ⊵ λ`.
pub fn in_sigma_lambda(s_tab: &Tableau, lambda: &Partition) -> bool {
    let k = lambda.size() as u32;
    let restricted = s_tab.restrict(k);
    let ct = ctype_of_tableau(&restricted);
    dominates_unchecked(ct.parts(), lambda.parts())
}

/// Σ_{n,λ,s}, ordered by tableau then `μ` (by size, then reverse lex).
pub fn enumerate_sigma(p: &Params) -> Vec<SigmaPair> {
    let nk = p.n - p.k();
    let mut out = Vec::new();
    for s_tab in enumerate_all_syt(p.n) {
        let des = s_tab.des();
        if des >= p.s || !in_sigma_lambda(&s_tab, &p.lambda) {
            continue;
        }
        for mu in partitions_in_box(nk, p.s - des - 1) {
            out.push(SigmaPair {
                tableau: s_tab.clone(),
                mu,
            });
        }
    }
    out.sort();
    out
}

/// All `(w, μ)` with `(P(w), μ) ∈ Σ_{n,λ,s}`.
pub fn enumerate_pairs(p: &Params) -> Vec<(Permutation, Partition)> {
    let sigma = enumerate_sigma(p);
    let mut out = Vec::new();
    for w in all_permutations(p.n) {
        let (ins, _) = rsk(&w);
        let lo = sigma.partition_point(|sp| sp.tableau < ins);
        for sp in sigma[lo..].iter().take_while(|sp| sp.tableau == ins) {
            out.push((w.clone(), sp.mu.clone()));
        }
    }
    out
}

/// `(i₁, …, i_m)` with `i_m = μ_m` and `i_j = μ_j − μ_{j+1}`.
pub fn mu_to_exponents(mu: &Partition, m: usize) -> Vec<usize> {
    let padded = mu.padded(m.max(mu.len()));
    (0..m)
        .map(|j| padded[j] - padded.get(j + 1).copied().unwrap_or(0))
        .collect()
}

/// Inverse of [`mu_to_exponents`]: `μ_j = i_j + ⋯ + i_m`.
pub fn mu_from_exponents(exps: &[usize]) -> Partition {
    let mut parts = vec![0; exps.len()];
    let mut acc = 0;
    for j in (0..exps.len()).rev() {
        acc += exps[j];
        parts[j] = acc;
    }
    Partition::new(parts).expect("suffix sums decrease")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn sigma_table_for_4_21_3() {
        let pr = Params::new(4, p(&[2, 1]), 3).unwrap();
        let sigma = enumerate_sigma(&pr);
        assert_eq!(sigma.len(), 10);
        let count = |tab: Tableau| sigma.iter().filter(|sp| sp.tableau == tab).count();
        assert_eq!(count(t(&[&[1, 2, 3, 4]])), 3);
        assert_eq!(count(t(&[&[1, 2, 3], &[4]])), 2);
        assert_eq!(count(t(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(count(t(&[&[1, 2, 4], &[3]])), 2);
        assert_eq!(count(t(&[&[1, 2], &[3], &[4]])), 1);
    }

    #[test]
    fn sigma_with_n_equal_k_has_empty_mu() {
        for k in 1..=5 {
            for lambda in partitions_of(k) {
                let pr = Params::new(k, lambda.clone(), lambda.len()).unwrap();
                for sp in enumerate_sigma(&pr) {
                    assert!(sp.mu.is_empty());
                    assert!(dominates_unchecked(
                        ctype_of_tableau(&sp.tableau).parts(),
                        lambda.parts()
                    ));
                }
            }
        }
    }

    #[test]
    fn sigma_for_column_lambda_is_descent_bounded() {
        for n in 1..=5 {
            for k in 1..=n {
                let pr = Params::new(n, Partition::new(vec![1; k]).unwrap(), k).unwrap();
                let mut expected = Vec::new();
                for s_tab in enumerate_all_syt(n) {
                    let des = s_tab.des();
                    if des < k {
                        for mu in partitions_in_box(n - k, k - des - 1) {
                            expected.push(SigmaPair {
                                tableau: s_tab.clone(),
                                mu,
                            });
                        }
                    }
                }
                expected.sort();
                assert_eq!(enumerate_sigma(&pr), expected);
            }
        }
    }

    #[test]
    fn exponent_conversion_round_trips() {
        let mu = p(&[3, 1, 1]);
        assert_eq!(mu_to_exponents(&mu, 3), vec![2, 0, 1]);
        assert_eq!(mu_from_exponents(&[2, 0, 1]), mu);
        assert_eq!(mu_to_exponents(&Partition::empty(), 2), vec![0, 0]);
        for m in 0..=3 {
            for mu in partitions_in_box(m, 3) {
                assert_eq!(mu_from_exponents(&mu_to_exponents(&mu, m)), mu);
            }
        }
    }
}
