use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use super::{rat_from, Exponents, Polynomial};
use crate::delta::Params;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::Tableau;
use crate::word::next_permutation;

/// `f(∂/∂x_1, …, ∂/∂x_n)` applied to `g`.
pub fn polarization(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let n = g.nvars().max(f.nvars());
    let mut out = Polynomial::zero(n);
    for (a, x) in f.terms() {
        for (b, y) in g.terms() {
            if a.iter().zip(b).any(|(i, j)| i > j) {
                continue;
            }
            let mut c = BigInt::one();
            for (&i, &j) in a.iter().zip(b) {
                for t in j - i + 1..=j {
                    c *= t;
                }
            }
            let e: Exponents = a.iter().zip(b).map(|(i, j)| j - i).collect();
            out.add_term(e, x * y * BigRational::from_integer(c));
        }
    }
    out
}

/// `Δ(A) = Π_{i<j} (x_{a_j} − x_{a_i})` over 0-based indices in increasing order.
pub fn vandermonde(a: &[usize], n: usize) -> Polynomial {
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    let mut out = Polynomial::one(n);
    for j in 0..sorted.len() {
        for i in 0..j {
            let diff = &Polynomial::var(n, sorted[j]) - &Polynomial::var(n, sorted[i]);
            out = &out * &diff;
        }
    }
    out
}

/// Columns of `U` read bottom to top, as 0-based variables, after checking
/// that `U` is injective and column-strict with entries in `1..=n`.
fn columns(u: &Tableau, n: usize) -> Result<Vec<Vec<usize>>> {
    if u.is_skew() {
        return Err(Error::InvalidTableau(
            "Garnir fillings have straight shape".into(),
        ));
    }
    let mut seen = vec![false; n];
    for (_, _, e) in u.cells() {
        let e = e as usize;
        if e == 0 || e > n || std::mem::replace(&mut seen[e - 1], true) {
            return Err(Error::InvalidTableau(format!(
                "entries must be distinct and in 1..={n}"
            )));
        }
    }
    let width = u.rows().first().map_or(0, Vec::len);
    let cols: Vec<Vec<usize>> = (0..width)
        .map(|c| {
            u.rows()
                .iter()
                .filter_map(|r| r.get(c))
                .map(|&e| e as usize - 1)
                .collect()
        })
        .collect();
    if cols.iter().any(|c| c.windows(2).any(|w| w[0] >= w[1])) {
        return Err(Error::InvalidTableau("columns must increase upward".into()));
    }
    Ok(cols)
}

fn unused_power(cols: &[Vec<usize>], n: usize, s: usize) -> Exponents {
    let mut e = vec![(s - 1) as u32; n];
    for &i in cols.iter().flatten() {
        e[i] = 0;
    }
    e
}

/// `Δ_U`, the product of the column Vandermondes of `U`.
pub fn garnir(u: &Tableau, n: usize) -> Result<Polynomial> {
    let cols = columns(u, n)?;
    Ok(cols
        .iter()
        .fold(Polynomial::one(n), |acc, c| &acc * &vandermonde(c, n)))
}

/// `Δ_{U,s} = Δ_U · Π_{i ∉ U} x_i^{s−1}`.
pub fn garnir_ext(u: &Tableau, n: usize, s: usize) -> Result<Polynomial> {
    let cols = columns(u, n)?;
    let base = cols
        .iter()
        .fold(Polynomial::one(n), |acc, c| &acc * &vandermonde(c, n));
    let tail = Polynomial::monomial(unused_power(&cols, n, s.max(1)), BigRational::one());
    Ok(&base * &tail)
}

/// `Δ_{U,s}` as the signed sum of `x_D` over fillings `D` that rearrange each
/// column of `U`, with the unused letters at height `s − 1`.
pub fn garnir_ext_by_tableaux(u: &Tableau, n: usize, s: usize) -> Result<Polynomial> {
    let cols = columns(u, n)?;
    let tail = unused_power(&cols, n, s.max(1));
    let mut terms: Vec<(Exponents, i64)> = vec![(tail, 1)];
    for col in &cols {
        let mut next = Vec::new();
        let mut order: Vec<usize> = (0..col.len()).collect();
        loop {
            let inversions = (0..order.len())
                .flat_map(|i| (i + 1..order.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| order[i] > order[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            for (e, c) in &terms {
                let mut e = e.clone();
                for (h, &o) in order.iter().enumerate() {
                    e[col[o]] += h as u32;
                }
                next.push((e, c * sign));
            }
            if !next_permutation(&mut order) {
                break;
            }
        }
        terms = next;
    }
    Ok(Polynomial::from_terms(
        n,
        terms.into_iter().map(|(e, c)| (e, rat_from(c))),
    ))
}

/// `Inj(λ, ≤ n)`: injective fillings of `λ` by `1..=n` increasing up columns.
pub fn enumerate_injective_fillings(lambda: &Partition, n: usize) -> Vec<Tableau> {
    let heights = lambda.conjugate().parts().to_vec();
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<u32>> = Vec::new();
    let mut used = vec![false; n + 1];

    fn pick_column(
        heights: &[usize],
        lambda: &Partition,
        n: usize,
        chosen: &mut Vec<Vec<u32>>,
        used: &mut Vec<bool>,
        out: &mut Vec<Tableau>,
    ) {
        let c = chosen.len();
        if c == heights.len() {
            let rows = (0..lambda.len())
                .map(|r| (0..lambda.get(r)).map(|col| chosen[col][r]).collect())
                .collect();
            out.push(Tableau::from_rows(rows).expect("straight shape"));
            return;
        }
        let mut col = Vec::with_capacity(heights[c]);
        fill(
            heights, lambda, n, 1, heights[c], &mut col, chosen, used, out,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        heights: &[usize],
        lambda: &Partition,
        n: usize,
        start: u32,
        h: usize,
        col: &mut Vec<u32>,
        chosen: &mut Vec<Vec<u32>>,
        used: &mut Vec<bool>,
        out: &mut Vec<Tableau>,
    ) {
        if col.len() == h {
            chosen.push(col.clone());
            pick_column(heights, lambda, n, chosen, used, out);
            chosen.pop();
            return;
        }
        for e in start..=n as u32 {
            if used[e as usize] {
                continue;
            }
            used[e as usize] = true;
            col.push(e);
            fill(heights, lambda, n, e + 1, h, col, chosen, used, out);
            col.pop();
            used[e as usize] = false;
        }
    }

    if lambda.size() <= n {
        pick_column(&heights, lambda, n, &mut chosen, &mut used, &mut out);
    }
    out
}

/// Membership in `I_{n,λ,s}` decided by `∂f · Δ_{U,s} = 0` for every
/// `U ∈ Inj(λ, ≤ n)`.
#[derive(Clone, Debug)]
pub struct HarmonicOracle {
    n: usize,
    garnirs: Vec<Polynomial>,
}

impl HarmonicOracle {
    pub fn new(p: &Params) -> Self {
        let garnirs = enumerate_injective_fillings(&p.lambda, p.n)
            .iter()
            .map(|u| garnir_ext(u, p.n, p.s).expect("enumerated fillings are valid"))
            .collect();
        HarmonicOracle { n: p.n, garnirs }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.garnirs
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        assert!(f.is_zero() || f.nvars() == self.n, "variable count");
        self.garnirs
            .par_iter()
            .all(|g| polarization(f, g).is_zero())
    }
}

/// One-shot form of [`HarmonicOracle::contains`].
pub fn harmonic_membership(f: &Polynomial, p: &Params) -> bool {
    HarmonicOracle::new(p).contains(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ideal_generators, IdealSlices};

    fn mono(e: &[u32], c: i64) -> Polynomial {
        Polynomial::monomial(e.to_vec(), rat_from(c))
    }

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn polarization_examples() {
        let f = mono(&[3, 2, 3, 1, 1, 2, 0, 0, 1], 1);
        let g = mono(&[3, 2, 3, 1, 1, 3, 0, 0, 3], 1);
        assert_eq!(
            polarization(&f, &g),
            mono(&[0, 0, 0, 0, 0, 1, 0, 0, 2], 6 * 2 * 6 * 6 * 3)
        );
        let g = &mono(&[1, 2], 3) - &mono(&[0, 1], 1);
        assert_eq!(polarization(&Polynomial::one(2), &g), g);
        assert!(polarization(&Polynomial::var(2, 0), &Polynomial::var(2, 1)).is_zero());
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(
            vandermonde(&[0, 1], 2),
            &Polynomial::var(2, 1) - &Polynomial::var(2, 0)
        );
        let v = vandermonde(&[0, 2, 3], 4);
        assert_eq!(v.degree(), Some(3));
        assert_eq!(v.num_terms(), 6);
        assert_eq!(v.coeff(&[0, 0, 1, 2]), rat_from(1));
    }

    #[test]
    fn six_term_garnir() {
        let u = tab(&[&[1, 2], &[3], &[5]]);
        let g = garnir_ext(&u, 5, 4).unwrap();
        let expected = [
            ([0, 0, 1, 3, 2], 1),
            ([0, 0, 2, 3, 1], -1),
            ([1, 0, 0, 3, 2], -1),
            ([2, 0, 0, 3, 1], 1),
            ([1, 0, 2, 3, 0], 1),
            ([2, 0, 1, 3, 0], -1),
        ];
        let e = Polynomial::from_terms(5, expected.iter().map(|(e, c)| (e.to_vec(), rat_from(*c))));
        assert_eq!(g, e);
        assert_eq!(garnir_ext_by_tableaux(&u, 5, 4).unwrap(), e);
    }

    #[test]
    fn invalid_fillings_rejected() {
        assert!(garnir(&tab(&[&[1, 2], &[1]]), 3).is_err());
        assert!(garnir(&tab(&[&[2, 1], &[1]]), 3).is_err());
        assert!(garnir(&tab(&[&[3], &[1]]), 3).is_err());
        assert!(garnir(&tab(&[&[4]]), 3).is_err());
    }

    #[test]
    fn tableau_formulation_agrees() {
        for n in 1..=6 {
            for k in 0..=n.min(5) {
                for lambda in crate::partition::partitions_of(k) {
                    let s = lambda.len().max(1) + 1;
                    for u in enumerate_injective_fillings(&lambda, n) {
                        assert_eq!(
                            garnir_ext(&u, n, s).unwrap(),
                            garnir_ext_by_tableaux(&u, n, s).unwrap(),
                            "{u:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn injective_filling_counts() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        // choose the 2-column then the 1-column: C(4,2)·2
        assert_eq!(enumerate_injective_fillings(&lam, 4).len(), 12);
        assert_eq!(
            enumerate_injective_fillings(&Partition::empty(), 3).len(),
            1
        );
    }

    #[test]
    fn oracle_agrees_with_elimination_on_generators() {
        let p = Params::new(4, Partition::new(vec![2, 1]).unwrap(), 3).unwrap();
        let oracle = HarmonicOracle::new(&p);
        let slices = IdealSlices::new(&p).unwrap();
        for g in ideal_generators(&p) {
            assert!(oracle.contains(&g));
            assert!(slices.contains(&g));
        }
        assert!(!oracle.contains(&Polynomial::one(4)));
        for i in 0..4 {
            let x = Polynomial::var(4, i);
            assert_eq!(oracle.contains(&x), slices.contains(&x));
        }
    }
}
