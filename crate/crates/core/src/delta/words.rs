use std::collections::BTreeSet;

use super::sigma::{enumerate_pairs, in_sigma_lambda};
use super::Params;
use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};
use crate::word::{all_permutations, cocharge_word, is_cocharge_word, rsk, Permutation};

/// `D_n = {rev(cc(w)) : w ∈ S_n}`, sorted.
pub fn descent_words(n: usize) -> Vec<Vec<u32>> {
    let set: BTreeSet<Vec<u32>> = all_permutations(n)
        .iter()
        .map(|w| {
            let mut z = cocharge_word(w);
            z.reverse();
            z
        })
        .collect();
    set.into_iter().collect()
}

/// Membership in `D_m`, `m = a.len()`.
pub fn is_descent_word(a: &[u32]) -> bool {
    let mut z = a.to_vec();
    z.reverse();
    a.is_empty() || is_cocharge_word(&z)
}

/// `D_{n,λ,s}` by brute force: every ordered set partition `(A | B)` with
/// `|A_i| = λ'_i`, every choice of `A`-subwords from `D_{λ'_i}` and every
/// `B`-value in `0..s`.
pub fn enumerate_d_nls_brute(p: &Params) -> Vec<Vec<u32>> {
    let n = p.n;
    let cols = p.lambda.conjugate().parts().to_vec();
    let per_size: Vec<Vec<Vec<u32>>> = (0..=cols.first().copied().unwrap_or(0))
        .map(descent_words)
        .collect();
    let mut out = BTreeSet::new();
    let mut word = vec![0u32; n];
    let mut free = vec![true; n];

    #[allow(clippy::too_many_arguments)]
    fn blocks(
        i: usize,
        cols: &[usize],
        per_size: &[Vec<Vec<u32>>],
        s: u32,
        word: &mut Vec<u32>,
        free: &mut Vec<bool>,
        out: &mut BTreeSet<Vec<u32>>,
    ) {
        if i == cols.len() {
            let rest: Vec<usize> = (0..word.len()).filter(|&j| free[j]).collect();
            fill_b(0, &rest, s, word, out);
            return;
        }
        let avail: Vec<usize> = (0..word.len()).filter(|&j| free[j]).collect();
        for subset in subsets(&avail, cols[i]) {
            for f in &subset {
                free[*f] = false;
            }
            for d in &per_size[cols[i]] {
                for (slot, &v) in subset.iter().zip(d) {
                    word[*slot] = v;
                }
                blocks(i + 1, cols, per_size, s, word, free, out);
            }
            for f in &subset {
                free[*f] = true;
            }
        }
    }

    fn fill_b(j: usize, rest: &[usize], s: u32, word: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        if j == rest.len() {
            out.insert(word.clone());
            return;
        }
        for v in 0..s {
            word[rest[j]] = v;
            fill_b(j + 1, rest, s, word, out);
        }
    }

    blocks(
        0, &cols, &per_size, p.s as u32, &mut word, &mut free, &mut out,
    );
    out.into_iter().collect()
}

fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(
        items: &[usize],
        start: usize,
        size: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, i + 1, size, cur, out);
            cur.pop();
        }
    }
    rec(items, 0, size, &mut cur, &mut out);
    out
}

/// `D_{n,λ,s}` as the image of `(w, μ) ↦ rev(cc(w, μ))`, sorted.
pub fn enumerate_d_nls(p: &Params) -> Vec<Vec<u32>> {
    let k = p.k() as u32;
    let set: BTreeSet<Vec<u32>> = enumerate_pairs(p)
        .iter()
        .map(|(w, mu)| pairs_to_word(w, mu, k))
        .collect();
    set.into_iter().collect()
}

/// Boosted cocharge word: `cc(w)_i + μ_{n−w_i+1}` when `w_i > k`.
pub fn boosted_cocharge(w: &Permutation, mu: &Partition, k: u32) -> Vec<u32> {
    let n = w.len() as u32;
    let mut z = cocharge_word(w);
    for (i, &l) in w.letters().iter().enumerate() {
        if l > k {
            z[i] += mu.get((n - l) as usize) as u32;
        }
    }
    z
}

/// `rev(cc(w, μ))`.
pub fn pairs_to_word(w: &Permutation, mu: &Partition, k: u32) -> Vec<u32> {
    let mut z = boosted_cocharge(w, mu, k);
    z.reverse();
    z
}

/// Inverse of [`pairs_to_word`] on `D_{n,λ,s}`: letters of `w` follow the
/// reading order of `u = rev(a)` and `μ` is recovered from consecutive gaps.
pub fn word_to_pair(a: &[u32], p: &Params) -> Result<(Permutation, Partition)> {
    let n = p.n;
    let k = p.k();
    if a.len() != n {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: n,
        });
    }
    let u: Vec<u32> = a.iter().rev().copied().collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (u[i], i));
    let mut letters = vec![0u32; n];
    for (rank, &i) in order.iter().enumerate() {
        letters[i] = rank as u32 + 1;
    }
    let w = Permutation::new(letters).expect("ranks form a permutation");

    let nk = n - k;
    let mut mu = vec![0i64; nk + 1];
    for j in (1..=nk).rev() {
        let pb = order[n - j];
        let step = match (n - j).checked_sub(1) {
            Some(r) => {
                let pa = order[r];
                i64::from(u[pb]) - i64::from(u[pa]) - i64::from(pa > pb)
            }
            None => i64::from(u[pb]),
        };
        mu[j - 1] = mu[j] + step;
    }
    mu.pop();
    if mu.iter().any(|&m| m < 0) || mu.windows(2).any(|x| x[0] < x[1]) {
        return Err(Error::NotInDescentSet(a.to_vec()));
    }
    let mu = Partition::new(mu.iter().map(|&m| m as usize).collect())
        .map_err(|_| Error::NotInDescentSet(a.to_vec()))?;

    let (ins, _) = rsk(&w);
    let des = ins.des();
    let fits = des < p.s && mu.get(0) < p.s - des && mu.len() <= nk;
    if !fits || !in_sigma_lambda(&ins, &p.lambda) || pairs_to_word(&w, &mu, k as u32) != a {
        return Err(Error::NotInDescentSet(a.to_vec()));
    }
    Ok((w, mu))
}

/// Members of `D_{n,λ,s}` strictly increasing within each block of `γ`.
pub fn d_gamma(p: &Params, gamma: &Composition) -> Result<Vec<Vec<u32>>> {
    if gamma.size() != p.n {
        return Err(Error::SizeMismatch {
            left: gamma.size(),
            right: p.n,
        });
    }
    let mut bounds = Vec::new();
    let mut start = 0;
    for &g in gamma.parts() {
        bounds.push((start, start + g));
        start += g;
    }
    Ok(enumerate_d_nls(p)
        .into_iter()
        .filter(|a| {
            bounds
                .iter()
                .all(|&(lo, hi)| a[lo..hi].windows(2).all(|x| x[0] < x[1]))
        })
        .collect())
}
