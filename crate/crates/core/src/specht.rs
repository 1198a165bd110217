//! Higher Specht polynomials `F_T^S`, the sets `C_{n,λ,s}`, and checks of
//! their basis and vanishing properties.

use std::collections::{HashMap, HashSet};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::delta::{enumerate_sigma, in_sigma_lambda, mu_to_exponents, Params};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::{
    integer_row, partial_elementary, rat_from, Echelon, Exponents, HarmonicOracle, IdealSlices,
    Polynomial,
};
use crate::tableau::{enumerate_all_syt, enumerate_ssyt, enumerate_syt, Tableau};
use crate::word::{cocharge_semistandard_labels, cocharge_tableau, next_permutation};

const BITS: u32 = 6;
const MAX_VARS: usize = (u64::BITS / BITS) as usize;

/// A `T`-snaking: a filling of `shape(T)` by `1..=n` in which entries sharing a
/// column of `T` sit in different rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snaking {
    pub filling: Tableau,
    pub sign: i32,
}

/// `F_T^S` together with the tableaux it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HigherSpechtPolynomial {
    pub s_tab: Tableau,
    pub t_tab: Tableau,
    pub poly: Polynomial,
}

fn check_standard(t: &Tableau) -> Result<()> {
    if t.is_skew() || !t.is_standard() {
        return Err(Error::InvalidTableau(format!(
            "{:?} is not a standard tableau",
            t.rows()
        )));
    }
    if t.size() > MAX_VARS {
        return Err(Error::Budget {
            what: "variables",
            requested: t.size(),
            limit: MAX_VARS,
        });
    }
    Ok(())
}

fn check_same_shape(labels: &Tableau, t: &Tableau) -> Result<()> {
    if labels.is_skew() || labels.shape() != t.shape() {
        return Err(Error::InvalidTableau(
            "fillings must have the same straight shape".into(),
        ));
    }
    if labels.cells().any(|c| c.2 >= 1 << BITS) {
        return Err(Error::InvalidParameters("exponent too large".into()));
    }
    Ok(())
}

/// Walks every `T`-snaking, reporting the value placed in each cell (cells in
/// reading order), the packed exponent key of `x_P^labels` and the sign.
fn for_each_snaking(t: &Tableau, labels: &[u32], mut visit: impl FnMut(&[u32], u64, i32)) {
    let cells: Vec<(usize, usize)> = t.cells().map(|(c, r, _)| (c, r)).collect();
    let n = cells.len();
    let mut tcol = vec![0usize; n + 1];
    for &(c, _, e) in &t.cells().collect::<Vec<_>>() {
        tcol[e as usize] = c;
    }
    let width = t.rows().first().map_or(0, Vec::len);

    struct State<'a> {
        cells: &'a [(usize, usize)],
        labels: &'a [u32],
        tcol: &'a [usize],
        filling: Vec<u32>,
        row_of: Vec<usize>,
        col_rows: Vec<u64>,
    }

    fn rec(v: usize, st: &mut State, key: u64, sign: i32, visit: &mut dyn FnMut(&[u32], u64, i32)) {
        let n = st.cells.len();
        if v > n {
            visit(&st.filling, key, sign);
            return;
        }
        let c = st.tcol[v];
        for i in 0..n {
            if st.filling[i] != 0 {
                continue;
            }
            let r = st.cells[i].1;
            if st.col_rows[c] >> r & 1 == 1 {
                continue;
            }
            let flips = (1..v)
                .filter(|&u| st.tcol[u] == c && st.row_of[u] > r)
                .count();
            st.filling[i] = v as u32;
            st.row_of[v] = r;
            st.col_rows[c] |= 1 << r;
            let k = key + (u64::from(st.labels[i]) << (BITS * (v as u32 - 1)));
            rec(
                v + 1,
                st,
                k,
                if flips % 2 == 0 { sign } else { -sign },
                visit,
            );
            st.col_rows[c] &= !(1 << r);
            st.filling[i] = 0;
        }
    }

    let mut st = State {
        cells: &cells,
        labels,
        tcol: &tcol,
        filling: vec![0; n],
        row_of: vec![0; n + 1],
        col_rows: vec![0; width],
    };
    rec(1, &mut st, 0, 1, &mut visit);
}

fn unpack(key: u64, n: usize) -> Exponents {
    (0..n)
        .map(|i| ((key >> (BITS * i as u32)) & ((1 << BITS) - 1)) as u32)
        .collect()
}

fn packed_to_polynomial(n: usize, acc: HashMap<u64, i64>) -> Polynomial {
    Polynomial::from_terms(
        n,
        acc.into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(k, c)| (unpack(k, n), rat_from(c))),
    )
}

/// All `T`-snakings with their signs.
pub fn enumerate_snakings(t: &Tableau) -> Result<Vec<Snaking>> {
    check_standard(t)?;
    let zeros = vec![0; t.size()];
    let mut out = Vec::new();
    for_each_snaking(t, &zeros, |filling, _, sign| {
        out.push(Snaking {
            filling: t.refill(filling),
            sign,
        });
    });
    Ok(out)
}

/// `x_P^S = Π x_{P(u)}^{S(u)}` for a filling `S` of exponents and a filling
/// `P` with content `1^n`.
pub fn filling_monomial(labels: &Tableau, p: &Tableau) -> Result<Exponents> {
    if labels.shape() != p.shape() || labels.inner() != p.inner() {
        return Err(Error::InvalidTableau(
            "fillings must have the same shape".into(),
        ));
    }
    let n = p.size();
    let mut e = vec![0; n];
    let mut seen = vec![false; n];
    for ((_, _, l), (_, _, v)) in labels.cells().zip(p.cells()) {
        if v == 0 || v as usize > n || std::mem::replace(&mut seen[v as usize - 1], true) {
            return Err(Error::InvalidTableau("P must have content 1^n".into()));
        }
        e[v as usize - 1] = l;
    }
    Ok(e)
}

/// `x_T^{cc(S)}`.
pub fn hs_monomial(s: &Tableau, t: &Tableau) -> Result<Exponents> {
    check_standard(s)?;
    check_standard(t)?;
    if s.shape() != t.shape() {
        return Err(Error::InvalidTableau(
            "S and T must have the same shape".into(),
        ));
    }
    filling_monomial(&cocharge_tableau(s), t)
}

/// `Σ_{P ∈ snake(T)} (−1)^P x_P^labels`.
pub fn snaking_sum(labels: &Tableau, t: &Tableau) -> Result<Polynomial> {
    check_standard(t)?;
    check_same_shape(labels, t)?;
    let mut acc: HashMap<u64, i64> = HashMap::new();
    for_each_snaking(t, &labels.reading_word(), |_, key, sign| {
        *acc.entry(key).or_insert(0) += i64::from(sign);
    });
    Ok(packed_to_polynomial(t.size(), acc))
}

/// Every product of permutations of the given blocks of `1..=n`, as value
/// maps, with signs.
fn block_permutations(blocks: &[Vec<u32>], n: usize) -> Vec<(Vec<u32>, i32)> {
    let mut out = vec![((0..=n as u32).collect::<Vec<u32>>(), 1)];
    for block in blocks {
        let mut next = Vec::new();
        let mut order: Vec<usize> = (0..block.len()).collect();
        loop {
            let inv = (0..order.len())
                .flat_map(|i| (i + 1..order.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| order[i] > order[j])
                .count();
            for (map, sign) in &out {
                let mut m = map.clone();
                for (i, &o) in order.iter().enumerate() {
                    m[block[i] as usize] = block[o];
                }
                next.push((m, if inv % 2 == 0 { *sign } else { -sign }));
            }
            if !next_permutation(&mut order) {
                break;
            }
        }
        out = next;
    }
    out
}

/// `ε_T · x_T^labels` as the double sum over row and column groups of `T`.
pub fn young_idempotent_sum(labels: &Tableau, t: &Tableau) -> Result<Polynomial> {
    check_standard(t)?;
    check_same_shape(labels, t)?;
    let n = t.size();
    let rows: Vec<Vec<u32>> = t.rows().to_vec();
    let width = rows.first().map_or(0, Vec::len);
    let cols: Vec<Vec<u32>> = (0..width)
        .map(|c| rows.iter().filter_map(|r| r.get(c).copied()).collect())
        .collect();
    let row_group = block_permutations(&rows, n);
    let col_group = block_permutations(&cols, n);
    let pairs: Vec<(u32, u32)> = labels
        .cells()
        .zip(t.cells())
        .map(|(l, v)| (l.2, v.2))
        .collect();
    let mut acc: HashMap<Exponents, i64> = HashMap::new();
    for (sigma, _) in &row_group {
        for (tau, sign) in &col_group {
            let mut e = vec![0u32; n];
            for &(l, v) in &pairs {
                e[tau[sigma[v as usize] as usize] as usize - 1] += l;
            }
            *acc.entry(e).or_insert(0) += i64::from(*sign);
        }
    }
    Ok(Polynomial::from_terms(
        n,
        acc.into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(e, c)| (e, rat_from(c))),
    ))
}

/// `F_T^S = Σ_{P ∈ snake(T)} (−1)^P x_P^{cc(S)}`.
pub fn higher_specht(s: &Tableau, t: &Tableau) -> Result<HigherSpechtPolynomial> {
    check_standard(s)?;
    if s.shape() != t.shape() {
        return Err(Error::InvalidTableau(
            "S and T must have the same shape".into(),
        ));
    }
    Ok(HigherSpechtPolynomial {
        s_tab: s.clone(),
        t_tab: t.clone(),
        poly: snaking_sum(&cocharge_tableau(s), t)?,
    })
}

/// `C_{n,λ,s}`: `F_T^S · e_1^{i_1} ⋯ e_{n−k}^{i_{n−k}}` for `(S, μ) ∈ Σ_{n,λ,s}` and
/// `T` of the shape of `S`, in the order of `Σ` then `T`.
pub fn build_c_nls(p: &Params) -> Result<Vec<Polynomial>> {
    let n = p.n;
    let nk = n - p.k();
    let all: Vec<usize> = (0..n).collect();
    let elementary: Vec<Polynomial> = (0..=nk).map(|j| partial_elementary(j, &all, n)).collect();
    let mut cache: HashMap<Tableau, Vec<Polynomial>> = HashMap::new();
    let mut out = Vec::new();
    for pair in enumerate_sigma(p) {
        if !cache.contains_key(&pair.tableau) {
            let fs = enumerate_syt(&pair.tableau.shape())
                .par_iter()
                .map(|t| higher_specht(&pair.tableau, t).map(|h| h.poly))
                .collect::<Result<Vec<_>>>()?;
            cache.insert(pair.tableau.clone(), fs);
        }
        let mut factor = Polynomial::one(n);
        for (j, &i) in mu_to_exponents(&pair.mu, nk).iter().enumerate() {
            factor = &factor * &elementary[j + 1].pow(i as u32);
        }
        out.extend(cache[&pair.tableau].iter().map(|f| f * &factor));
    }
    Ok(out)
}

/// Which statement a verdict tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Claim {
    #[serde(rename = "thmC")]
    ThmC,
    #[serde(rename = "conjA")]
    ConjA,
    #[serde(rename = "vanishing")]
    Vanishing,
}

/// Machine-readable outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub s: usize,
    pub claim: Claim,
    pub verdict: bool,
    pub rank: usize,
    pub expected: usize,
}

/// Rank of `C_{n,λ,s}` modulo `I_{n,λ,s}` against the quotient dimension.
/// Two-row `λ` with `s = ℓ(λ)` is reported as the theorem, anything else as
/// evidence for the conjecture.
pub fn verify_higher_specht_basis(p: &Params) -> Result<Verdict> {
    let slices = IdealSlices::new(p)?;
    let polys = build_c_nls(p)?;
    let rank = slices.relative_rank(&polys)?;
    let expected = slices.quotient_dimension();
    let claim = if p.lambda.len() <= 2 && p.s == p.lambda.len() {
        Claim::ThmC
    } else {
        Claim::ConjA
    };
    Ok(Verdict {
        n: p.n,
        lambda: p.lambda.parts().to_vec(),
        s: p.s,
        claim,
        verdict: rank == expected && polys.len() == expected,
        rank,
        expected,
    })
}

/// For two-row `λ`: every `F_T^S` with `ctype(S|_k) ⋭ λ` lies in `I_{n,λ,s}`.
/// `rank` counts the members found, `expected` the pairs checked.
pub fn verify_vanishing_two_row(p: &Params) -> Result<Verdict> {
    if p.lambda.len() > 2 {
        return Err(Error::InvalidParameters(format!(
            "{} has more than two rows",
            p.lambda
        )));
    }
    let oracle = HarmonicOracle::new(p);
    let mut pairs = Vec::new();
    for s_tab in enumerate_all_syt(p.n) {
        if in_sigma_lambda(&s_tab, &p.lambda) {
            continue;
        }
        for t in enumerate_syt(&s_tab.shape()) {
            pairs.push((s_tab.clone(), t));
        }
    }
    let found = pairs
        .par_iter()
        .map(|(s_tab, t)| higher_specht(s_tab, t).map(|h| oracle.contains(&h.poly)))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&b| b)
        .count();
    Ok(Verdict {
        n: p.n,
        lambda: p.lambda.parts().to_vec(),
        s: p.s,
        claim: Claim::Vanishing,
        verdict: found == pairs.len(),
        rank: found,
        expected: pairs.len(),
    })
}

/// Cocharge labels of a semistandard tableau, placed in its cells.
pub fn cocharge_tableau_semistandard(s: &Tableau) -> Result<Tableau> {
    Ok(s.refill(&cocharge_semistandard_labels(&s.reading_word())?))
}

/// Standardization of a semistandard tableau with at most two rows and
/// weight `(μ₁, μ₂)`: the 1s become `1..=μ₁`, then the 2s of the first row,
/// then the 2s of the second row.
pub fn standardize_two_row(s: &Tableau) -> Result<Tableau> {
    if s.rows().len() > 2 || !s.is_semistandard() || s.cells().any(|c| c.2 == 0 || c.2 > 2) {
        return Err(Error::InvalidTableau(
            "expected a two-row tableau with entries 1 and 2".into(),
        ));
    }
    let original = s.rows();
    let mut rows = original.to_vec();
    let mut next = 1;
    for (r, value) in [(0, 1), (0, 2), (1, 2)] {
        let Some(row) = original.get(r) else { continue };
        for (j, _) in row.iter().enumerate().filter(|(_, &e)| e == value) {
            rows[r][j] = next;
            next += 1;
        }
    }
    Tableau::from_rows(rows)
}

/// Comparison of the two higher Specht sets for `R_μ` with two-row `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoRowComparison {
    pub mu: Vec<usize>,
    pub semistandard: usize,
    pub sigma: usize,
    pub labels_agree: bool,
    pub sets_equal: bool,
}

/// `C'_μ` (semistandard `S` of weight `μ`) against `C_μ` (`S ∈ Σ_μ`).
pub fn compare_two_row_sets(mu: &Partition) -> Result<TwoRowComparison> {
    if mu.len() > 2 || mu.is_empty() {
        return Err(Error::InvalidParameters(format!(
            "{mu} must have one or two rows"
        )));
    }
    let n = mu.size();
    let p = Params::new(n, mu.clone(), mu.len())?;
    let sigma: Vec<Tableau> = enumerate_sigma(&p)
        .into_iter()
        .map(|sp| sp.tableau)
        .collect();
    let sigma_set: HashSet<&Tableau> = sigma.iter().collect();

    let mut left: Vec<Polynomial> = Vec::new();
    let mut semistandard = 0;
    let mut labels_agree = true;
    for shape in partitions_of(n).into_iter().filter(|l| l.len() <= 2) {
        let ts = enumerate_syt(&shape);
        for s in enumerate_ssyt(&shape, mu.parts()) {
            semistandard += 1;
            let cc = cocharge_tableau_semistandard(&s)?;
            let st = standardize_two_row(&s)?;
            labels_agree &=
                st.is_standard() && sigma_set.contains(&st) && cocharge_tableau(&st) == cc;
            for t in &ts {
                left.push(snaking_sum(&cc, t)?);
            }
        }
    }
    let mut right: Vec<Polynomial> = Vec::new();
    for s in &sigma {
        for t in enumerate_syt(&s.shape()) {
            right.push(higher_specht(s, &t)?.poly);
        }
    }
    let key = |v: &[Polynomial]| {
        let mut k: Vec<String> = v
            .iter()
            .map(|f| serde_json::to_string(f).expect("serializable"))
            .collect();
        k.sort();
        k
    };
    Ok(TwoRowComparison {
        mu: mu.parts().to_vec(),
        semistandard,
        sigma: sigma.len(),
        labels_agree,
        sets_equal: key(&left) == key(&right),
    })
}

/// Outcome of the shape `(4,4,1,1)`, weight `2^5` vanishing check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingReport {
    pub s_tab: Tableau,
    pub cocharge: Tableau,
    pub tableaux_checked: usize,
    pub snakings: u64,
    pub nonzero: usize,
    pub swap_preserves_monomial: bool,
}

/// `F_T^S` for the semistandard `S` with rows `1124 / 2345 / 3 / 5` (bottom to
/// top) and every `T ∈ SYT(4,4,1,1)`. The two single-cell rows carry equal
/// labels and the first column of `T` must meet every row, so swapping those
/// two cells is a sign-reversing involution on snakings and every sum should
/// cancel.
pub fn gr_counterexample_check() -> Result<VanishingReport> {
    let s_tab = Tableau::from_rows(vec![vec![1, 1, 2, 4], vec![2, 3, 4, 5], vec![3], vec![5]])?;
    let cocharge = cocharge_tableau_semistandard(&s_tab)?;
    let expected = Tableau::from_rows(vec![vec![0, 0, 0, 2], vec![1, 1, 1, 3], vec![2], vec![2]])?;
    if cocharge != expected {
        return Err(Error::Verification(format!(
            "unexpected cocharge labels {:?}",
            cocharge.rows()
        )));
    }
    let shape = s_tab.shape();
    let swap_preserves_monomial =
        cocharge.get(0, 2) == cocharge.get(0, 3) && shape.conjugate().get(0) == shape.len();
    let labels = cocharge.reading_word();
    let results: Vec<(u64, bool)> = enumerate_syt(&shape)
        .par_iter()
        .map(|t| {
            let mut acc: HashMap<u64, i64> = HashMap::new();
            let mut count = 0u64;
            for_each_snaking(t, &labels, |_, key, sign| {
                count += 1;
                *acc.entry(key).or_insert(0) += i64::from(sign);
            });
            (count, acc.values().any(|&c| c != 0))
        })
        .collect();
    Ok(VanishingReport {
        s_tab,
        cocharge,
        tableaux_checked: results.len(),
        snakings: results.iter().map(|r| r.0).sum(),
        nonzero: results.iter().filter(|r| r.1).count(),
        swap_preserves_monomial,
    })
}

/// Dimension of the span of a list of polynomials.
pub fn span_rank(polys: &[Polynomial]) -> usize {
    let mut index: HashMap<&Exponents, usize> = HashMap::new();
    for f in polys {
        for (e, _) in f.terms() {
            let next = index.len();
            index.entry(e).or_insert(next);
        }
    }
    let mut ech = Echelon::new(index.len());
    for f in polys {
        let mut v = vec![BigRational::from_integer(0.into()); index.len()];
        for (e, c) in f.terms() {
            v[index[e]] = c.clone();
        }
        ech.insert(integer_row(&v));
    }
    ech.rank()
}
