use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::linalg::{integer_row, Echelon};
use super::{partial_elementary, Exponents, Polynomial};
use crate::delta::Params;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::QPoly;

/// Default cap on `s^n`, the dimension of `Q[x]/(x_i^s)`.
pub const DEFAULT_MAX_ALGEBRA_DIM: usize = 50_000;

/// A generator of `I_{n,λ,s}`, variables 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Generator {
    Power(usize),
    Elementary { d: usize, vars: Vec<usize> },
}

fn generator_specs(p: &Params) -> Vec<Generator> {
    let n = p.n;
    let conj = p.lambda.conjugate().padded(n);
    let mut out: Vec<Generator> = (0..n).map(Generator::Power).collect();
    for mask in 1u64..(1u64 << n) {
        let vars: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let m = vars.len();
        let tail: usize = conj[n - m..].iter().sum();
        let bound = m.saturating_sub(tail);
        for d in bound + 1..=m {
            out.push(Generator::Elementary {
                d,
                vars: vars.clone(),
            });
        }
    }
    out
}

fn generator_polynomial(g: &Generator, n: usize, s: usize) -> Polynomial {
    match g {
        Generator::Power(i) => {
            let mut e = vec![0; n];
            e[*i] = s as u32;
            Polynomial::monomial(e, BigRational::one())
        }
        Generator::Elementary { d, vars } => partial_elementary(*d, vars, n),
    }
}

/// Generators of `I_{n,λ,s}`: every `x_i^s`, then `e_d(S)` for each nonempty
/// `S ⊆ [n]` and `|S| − (λ'_n + ⋯ + λ'_{n−|S|+1}) < d ≤ |S|`.
pub fn ideal_generators(p: &Params) -> Vec<Polynomial> {
    generator_specs(p)
        .iter()
        .map(|g| generator_polynomial(g, p.n, p.s))
        .collect()
}

/// Generators of `I_{n,k,s} = (x_i^s, e_n, …, e_{n−k+1})`.
pub fn kn_ideal_generators(n: usize, k: usize, s: usize) -> Vec<Polynomial> {
    let all: Vec<usize> = (0..n).collect();
    let mut out: Vec<Polynomial> = (0..n)
        .map(|i| generator_polynomial(&Generator::Power(i), n, s))
        .collect();
    for d in (n + 1 - k.min(n)..=n).rev() {
        out.push(partial_elementary(d, &all, n));
    }
    out
}

#[derive(Clone, Debug)]
struct Slice {
    monomials: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
    basis: Echelon,
}

impl Slice {
    fn row(&self, f: &Polynomial) -> Vec<BigInt> {
        let mut v = vec![BigRational::zero(); self.monomials.len()];
        for (e, c) in f.terms() {
            v[self.index[e]] = c.clone();
        }
        integer_row(&v)
    }
}

/// The image of an ideal containing every `x_i^s` inside `A = Q[x]/(x_i^s)`,
/// one row-reduced slice per degree `0..=n(s−1)`.
#[derive(Clone, Debug)]
pub struct IdealSlices {
    n: usize,
    s: usize,
    slices: Vec<Slice>,
}

fn check_budget(n: usize, s: usize, max_dim: usize) -> Result<()> {
    let dim = (s as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if dim > max_dim as u128 {
        return Err(Error::Budget {
            what: "s^n",
            requested: usize::try_from(dim).unwrap_or(usize::MAX),
            limit: max_dim,
        });
    }
    Ok(())
}

fn monomials_by_degree(n: usize, s: usize) -> Vec<Vec<Exponents>> {
    let top = n * (s.max(1) - 1);
    let mut buckets = vec![Vec::new(); top + 1];
    let mut e = vec![0u32; n];
    loop {
        let d: u32 = e.iter().sum();
        buckets[d as usize].push(e.clone());
        let Some(i) = (0..n).rev().find(|&i| (e[i] as usize) + 1 < s) else {
            break;
        };
        e[i] += 1;
        for x in e.iter_mut().skip(i + 1) {
            *x = 0;
        }
    }
    for b in &mut buckets {
        b.sort_unstable_by(|a, b| b.cmp(a));
    }
    buckets
}

fn shifted(m: &[u32], g: &Polynomial, s: u32) -> Polynomial {
    Polynomial::from_terms(
        m.len(),
        g.terms().filter_map(|(e, c)| {
            let prod: Exponents = e.iter().zip(m).map(|(a, b)| a + b).collect();
            prod.iter().all(|&x| x < s).then(|| (prod, c.clone()))
        }),
    )
}

impl IdealSlices {
    /// Slices of `I_{n,λ,s}` with the default budget.
    pub fn new(p: &Params) -> Result<Self> {
        Self::with_budget(p, DEFAULT_MAX_ALGEBRA_DIM)
    }

    pub fn with_budget(p: &Params, max_dim: usize) -> Result<Self> {
        check_budget(p.n, p.s, max_dim)?;
        Self::from_generators(p.n, p.s, &ideal_generators(p), max_dim)
    }

    /// Slices of the ideal generated by `gens` together with every `x_i^s`.
    /// Generators must be homogeneous.
    pub fn from_generators(
        n: usize,
        s: usize,
        gens: &[Polynomial],
        max_dim: usize,
    ) -> Result<Self> {
        check_budget(n, s, max_dim)?;
        let mut reduced: Vec<(usize, Polynomial)> = Vec::new();
        for g in gens {
            if g.nvars() != n && !g.is_zero() {
                return Err(Error::SizeMismatch {
                    left: g.nvars(),
                    right: n,
                });
            }
            if !g.is_homogeneous() {
                return Err(Error::InvalidParameters(format!(
                    "generator {g} is not homogeneous"
                )));
            }
            let t = g.truncate(s as u32);
            if let Some(d) = t.degree() {
                reduced.push((d as usize, t));
            }
        }
        let buckets = monomials_by_degree(n, s);
        let slices = (0..buckets.len())
            .into_par_iter()
            .map(|d| {
                let monomials = buckets[d].clone();
                let index = monomials
                    .iter()
                    .enumerate()
                    .map(|(i, e)| (e.clone(), i))
                    .collect();
                let mut slice = Slice {
                    basis: Echelon::new(monomials.len()),
                    monomials,
                    index,
                };
                'gens: for (gd, g) in reduced.iter().filter(|(gd, _)| *gd <= d) {
                    for m in &buckets[d - gd] {
                        if slice.basis.is_full() {
                            break 'gens;
                        }
                        let prod = shifted(m, g, s as u32);
                        if !prod.is_zero() {
                            let row = slice.row(&prod);
                            slice.basis.insert(row);
                        }
                    }
                }
                slice
            })
            .collect();
        Ok(IdealSlices { n, s, slices })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn max_degree(&self) -> usize {
        self.slices.len() - 1
    }

    pub fn algebra_dimension(&self) -> usize {
        self.slices.iter().map(|sl| sl.monomials.len()).sum()
    }

    pub fn monomials(&self, d: usize) -> &[Exponents] {
        &self.slices[d].monomials
    }

    pub fn rank(&self, d: usize) -> usize {
        self.slices.get(d).map_or(0, |sl| sl.basis.rank())
    }

    pub fn graded_ranks(&self) -> Vec<usize> {
        self.slices.iter().map(|sl| sl.basis.rank()).collect()
    }

    pub fn quotient_dimension(&self) -> usize {
        self.slices
            .iter()
            .map(|sl| sl.monomials.len() - sl.basis.rank())
            .sum()
    }

    pub fn hilbert(&self) -> QPoly {
        QPoly::new(
            self.slices
                .iter()
                .map(|sl| (sl.monomials.len() - sl.basis.rank()) as i64)
                .collect(),
        )
    }

    /// Membership of `f` in the ideal.
    pub fn contains(&self, f: &Polynomial) -> bool {
        assert!(f.is_zero() || f.nvars() == self.n, "variable count");
        f.truncate(self.s as u32)
            .components()
            .into_iter()
            .all(|(d, part)| {
                self.slices[d as usize]
                    .basis
                    .contains(self.slices[d as usize].row(&part))
            })
    }

    /// Whether the candidate monomials project to a basis of the quotient:
    /// each degree's slice together with the candidates spans the whole
    /// degree and the count equals the quotient dimension.
    pub fn spans(&self, monomials: &[Exponents]) -> bool {
        if monomials.len() != self.quotient_dimension() {
            return false;
        }
        let mut by_degree: Vec<Vec<&Exponents>> = vec![Vec::new(); self.slices.len()];
        for e in monomials {
            if e.len() != self.n || e.iter().any(|&x| x as usize >= self.s) {
                return false;
            }
            by_degree[e.iter().sum::<u32>() as usize].push(e);
        }
        self.slices
            .par_iter()
            .zip(by_degree.par_iter())
            .all(|(sl, cands)| {
                let mut basis = sl.basis.clone();
                for e in cands {
                    let mut v = vec![BigInt::zero(); sl.monomials.len()];
                    v[sl.index[*e]] = BigInt::one();
                    basis.insert(v);
                }
                basis.is_full()
            })
    }

    /// Dimension of the span of homogeneous polynomials modulo the ideal.
    pub fn relative_rank(&self, polys: &[Polynomial]) -> Result<usize> {
        let mut by_degree: Vec<Vec<Polynomial>> = vec![Vec::new(); self.slices.len()];
        for f in polys {
            if !f.is_homogeneous() {
                return Err(Error::InvalidParameters(format!("{f} is not homogeneous")));
            }
            let t = f.truncate(self.s as u32);
            if let Some(d) = t.degree() {
                by_degree[d as usize].push(t);
            }
        }
        Ok(self
            .slices
            .par_iter()
            .zip(by_degree.par_iter())
            .map(|(sl, fs)| {
                let mut basis = sl.basis.clone();
                fs.iter().filter(|f| basis.insert(sl.row(f))).count()
            })
            .sum())
    }

    /// Linear independence of homogeneous polynomials modulo the ideal.
    pub fn independent(&self, polys: &[Polynomial]) -> Result<bool> {
        Ok(self.relative_rank(polys)? == polys.len())
    }
}

/// `dim Q[x]/I_{n,λ,s}` by graded elimination.
pub fn quotient_dimension(p: &Params) -> Result<usize> {
    Ok(IdealSlices::new(p)?.quotient_dimension())
}

/// Graded Hilbert series of `Q[x]/I_{n,λ,s}`.
pub fn graded_quotient_hilbert(p: &Params) -> Result<QPoly> {
    Ok(IdealSlices::new(p)?.hilbert())
}

/// Whether `{x^a}` descends to a basis of `Q[x]/I_{n,λ,s}`.
pub fn spans_quotient(monomials: &[Exponents], p: &Params) -> Result<bool> {
    Ok(IdealSlices::new(p)?.spans(monomials))
}

/// `ν = ((q+1)^r, q^{s−r})` for `k = qs + r`.
fn balanced_partition(k: usize, s: usize) -> Partition {
    let (q, r) = (k / s, k % s);
    let mut parts = vec![q + 1; r];
    parts.extend(std::iter::repeat_n(q, s - r));
    Partition::new(parts).expect("weakly decreasing")
}

/// `I_{n,k,s} = I_{n,ν,s}` for `s < k ≤ n`: every generator of the first
/// lies in the second and the graded ranks agree.
pub fn ideal_equality_small_s(n: usize, k: usize, s: usize) -> Result<bool> {
    if !(s >= 1 && s < k && k <= n) {
        return Err(Error::InvalidParameters(format!(
            "need 1 ≤ s < k ≤ n, got n={n} k={k} s={s}"
        )));
    }
    let nu = balanced_partition(k, s);
    let balanced = IdealSlices::new(&Params::new(n, nu, s)?)?;
    let gens = kn_ideal_generators(n, k, s);
    let kn = IdealSlices::from_generators(n, s, &gens, DEFAULT_MAX_ALGEBRA_DIM)?;
    Ok(gens.iter().all(|g| balanced.contains(g)) && kn.graded_ranks() == balanced.graded_ranks())
}

/// The map `φ_A` on generators of `I_{n,λ,s}` for a 0-based variable set `A`
/// with `|A| = λ'_1`: each tensor summand `e_i(A∩S) ⊗ e_{d−i}(S∖A)` must have
/// a factor in `I_{λ'_1}(x_A)` or in `I_{n−λ'_1,λ̂,s}(x_B)`, where `λ̂` drops
/// the first column of `λ`.
pub fn phi_a_check(p: &Params, a: &[usize]) -> Result<bool> {
    let hat = Partition::new(p.lambda.parts().iter().map(|&x| x - 1).collect())?;
    phi_a_check_with(p, a, &hat)
}

/// [`phi_a_check`] with an arbitrary partition in place of `λ̂`.
pub fn phi_a_check_with(p: &Params, a: &[usize], hat: &Partition) -> Result<bool> {
    let m = p.lambda.len();
    let mut a_sorted = a.to_vec();
    a_sorted.sort_unstable();
    a_sorted.dedup();
    if a_sorted.len() != m || a_sorted.iter().any(|&i| i >= p.n) {
        return Err(Error::InvalidParameters(format!(
            "A = {a:?} must be {m} distinct variables below {}",
            p.n
        )));
    }
    let b: Vec<usize> = (0..p.n)
        .filter(|i| a_sorted.binary_search(i).is_err())
        .collect();
    let pos = |set: &[usize], i: usize| set.binary_search(&i).expect("member");

    let ring_a = IdealSlices::new(&Params::new(m, Partition::new(vec![1; m])?, p.s)?)?;
    let ring_b = IdealSlices::new(&Params::new(b.len(), hat.clone(), p.s)?)?;
    let mut cache_a: HashMap<(usize, Vec<usize>), bool> = HashMap::new();
    let mut cache_b: HashMap<(usize, Vec<usize>), bool> = HashMap::new();
    let member = |ring: &IdealSlices,
                  cache: &mut HashMap<(usize, Vec<usize>), bool>,
                  d: usize,
                  vars: Vec<usize>| {
        *cache
            .entry((d, vars.clone()))
            .or_insert_with(|| ring.contains(&partial_elementary(d, &vars, ring.nvars())))
    };

    for g in generator_specs(p) {
        let ok = match g {
            Generator::Power(i) => {
                let (ring, local) = match a_sorted.binary_search(&i) {
                    Ok(j) => (&ring_a, j),
                    Err(_) => (&ring_b, pos(&b, i)),
                };
                let mut e = vec![0; ring.nvars()];
                e[local] = p.s as u32;
                ring.contains(&Polynomial::monomial(e, BigRational::one()))
            }
            Generator::Elementary { d, vars } => {
                let in_a: Vec<usize> = vars
                    .iter()
                    .filter_map(|&i| a_sorted.binary_search(&i).ok())
                    .collect();
                let in_b: Vec<usize> = vars
                    .iter()
                    .filter(|i| a_sorted.binary_search(i).is_err())
                    .map(|&i| pos(&b, i))
                    .collect();
                let lo = d.saturating_sub(in_b.len());
                let hi = d.min(in_a.len());
                (lo..=hi).all(|i| {
                    member(&ring_a, &mut cache_a, i, in_a.clone())
                        || member(&ring_b, &mut cache_b, d - i, in_b.clone())
                })
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
