//! Graded Frobenius characters in the Schur basis, Hilbert series and
//! pairings with elementary symmetric functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::{Deserialize, Serialize};

use crate::delta::{enumerate_battery, enumerate_pairs, enumerate_sigma, Params};
use crate::error::{Error, Result};
use crate::partition::{enumerate_compositions_containing, partitions_of, Composition, Partition};
use crate::tableau::{enumerate_all_syt, enumerate_ssyt_of_weight, kostka};
use crate::word::{ascent_set, cocharge_of_tableau, cocharge_semistandard, cocharge_value};

/// Polynomial in `q` with integer coefficients, index = power of `q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct QPoly(Vec<i64>);

impl From<Vec<i64>> for QPoly {
    fn from(coeffs: Vec<i64>) -> Self {
        QPoly::new(coeffs)
    }
}

impl From<QPoly> for Vec<i64> {
    fn from(p: QPoly) -> Self {
        p.0
    }
}

impl QPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn one() -> Self {
        QPoly(vec![1])
    }

    /// `c·q^d`.
    pub fn monomial(d: usize, c: i64) -> Self {
        let mut v = vec![0; d + 1];
        v[d] = c;
        QPoly::new(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scale(&self, c: i64) -> QPoly {
        QPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// `[m]_q = 1 + q + ⋯ + q^{m−1}`.
    pub fn q_integer(m: usize) -> QPoly {
        QPoly::new(vec![1; m])
    }

    pub fn q_factorial(m: usize) -> QPoly {
        (1..=m).fold(QPoly::one(), |acc, i| &acc * &QPoly::q_integer(i))
    }

    /// Gaussian binomial `[m choose r]_q`, zero outside `0 ≤ r ≤ m`.
    pub fn q_binomial(m: usize, r: usize) -> QPoly {
        if r > m {
            return QPoly::zero();
        }
        // Pascal recurrence [m, r] = [m−1, r−1] + q^r [m−1, r].
        let mut row = vec![QPoly::one()];
        for i in 1..=m {
            let mut next = vec![QPoly::one(); i + 1];
            for j in 1..i {
                next[j] = &row[j - 1] + &(&QPoly::monomial(j, 1) * &row[j]);
            }
            row = next;
        }
        row[r].clone()
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let len = self.0.len().max(rhs.0.len());
        QPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".into(),
                (1, c) => format!("{c}q"),
                (d, 1) => format!("q^{d}"),
                (d, c) => format!("{c}q^{d}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// A symmetric function `Σ_λ c_λ(q) s_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, QPoly>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, shape: Partition, coeff: &QPoly) {
        let entry = self.terms.entry(shape).or_default();
        *entry += coeff;
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn coeff(&self, shape: &Partition) -> QPoly {
        self.terms.get(shape).cloned().unwrap_or_default()
    }

    /// Terms with shapes in reverse lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.terms.iter().rev()
    }

    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(QPoly::is_nonnegative)
    }

    /// Every coefficient evaluated at `q = 1`.
    pub fn at_q_one(&self) -> SchurExpansion {
        let mut out = SchurExpansion::new();
        for (shape, c) in &self.terms {
            out.add_term(shape.clone(), &QPoly::new(vec![c.at_one()]));
        }
        out
    }

    /// `q^{-d}` times the expansion; fails if a negative power would appear.
    pub fn shift_down(&self, d: usize) -> Result<SchurExpansion> {
        let mut out = SchurExpansion::new();
        for (shape, c) in &self.terms {
            if c.coeffs().iter().take(d).any(|&x| x != 0) {
                return Err(Error::Verification(format!(
                    "coefficient {c} of s{shape} is not divisible by q^{d}"
                )));
            }
            out.add_term(
                shape.clone(),
                &QPoly::new(c.coeffs()[d.min(c.coeffs().len())..].to_vec()),
            );
        }
        Ok(out)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms()
            .map(|(shape, c)| format!("({c})s{shape}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Ungraded character `Σ_{α ⊇ λ} h_α`, expanded through Kostka numbers.
pub fn frob_ungraded(p: &Params) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for alpha in enumerate_compositions_containing(p.n, p.s, &p.lambda) {
        for shape in partitions_of(p.n) {
            let k = kostka(&shape, &alpha).expect("sizes agree");
            if k > 0 {
                out.add_term(shape, &QPoly::new(vec![k as i64]));
            }
        }
    }
    out
}

/// `Σ_{(S,μ) ∈ Σ_{n,λ,s}} q^{cocharge(S)+|μ|} s_{shape(S)}`.
pub fn frob_sigma(p: &Params) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for pair in enumerate_sigma(p) {
        let d = cocharge_of_tableau(&pair.tableau) as usize + pair.mu.size();
        out.add_term(pair.tableau.shape(), &QPoly::monomial(d, 1));
    }
    out
}

/// `q^{−C(s−1,2)(n−k)} Σ_{T} q^{cocharge(T)} s_{shape(device)}`.
pub fn frob_battery(p: &Params) -> Result<SchurExpansion> {
    let mut raw = SchurExpansion::new();
    for t in enumerate_battery(p) {
        raw.add_term(t.device.shape(), &QPoly::monomial(t.cocharge() as usize, 1));
    }
    raw.shift_down(p.battery_offset())
}

/// `Σ_{S ∈ SYT_n, des(S) < k} [n−des(S)−1 choose n−k]_q q^{maj(S)} s_{shape(S)}`.
pub fn frob_rnk(n: usize, k: usize) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for s_tab in enumerate_all_syt(n) {
        let des = s_tab.des();
        if des >= k || n < k {
            continue;
        }
        let c = &QPoly::q_binomial(n - des - 1, n - k) * &QPoly::monomial(s_tab.maj() as usize, 1);
        out.add_term(s_tab.shape(), &c);
    }
    out
}

/// Modified Hall–Littlewood `Σ_μ Σ_{T ∈ SSYT(μ, λ)} q^{cocharge(T)} s_μ`.
pub fn modified_hall_littlewood(lambda: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for t in enumerate_ssyt_of_weight(lambda.parts()) {
        let c = cocharge_semistandard(&t.reading_word()).expect("partition weight");
        out.add_term(t.shape(), &QPoly::monomial(c as usize, 1));
    }
    out
}

/// `Σ_λ c_λ(q) · #SYT(λ)`.
pub fn hilbert(f: &SchurExpansion) -> QPoly {
    let mut out = QPoly::zero();
    for (shape, c) in f.terms() {
        out += &c.scale(shape.hook_length_count() as i64);
    }
    out
}

/// `⟨e_γ, f⟩ = Σ_λ c_λ(q) K_{λᵗ,γ}`.
pub fn e_gamma_pairing(f: &SchurExpansion, gamma: &Composition) -> Result<QPoly> {
    let mut out = QPoly::zero();
    for (shape, c) in f.terms() {
        let k = kostka(&shape.conjugate(), gamma.parts())?;
        out += &c.scale(k as i64);
    }
    Ok(out)
}

/// `{γ_l, γ_l+γ_{l−1}, …, γ_l+⋯+γ₂}`: the allowed ascent positions of `w`
/// for the γ-antisymmetric part, i.e. proper prefix sums of reversed `γ`.
pub fn ascent_blocks(gamma: &Composition) -> Vec<u32> {
    gamma
        .reversed()
        .partial_sums()
        .iter()
        .map(|&x| x as u32)
        .collect()
}

/// `Σ q^{cocharge(w)+|μ|}` over pairs with `Asc(w)` inside [`ascent_blocks`].
pub fn hilb_antisym(p: &Params, gamma: &Composition) -> Result<QPoly> {
    if gamma.size() != p.n {
        return Err(Error::SizeMismatch {
            left: gamma.size(),
            right: p.n,
        });
    }
    let allowed = ascent_blocks(gamma);
    let mut out = QPoly::zero();
    for (w, mu) in enumerate_pairs(p) {
        if ascent_set(w.letters()).iter().all(|a| allowed.contains(a)) {
            out += &QPoly::monomial(cocharge_value(&w) as usize + mu.size(), 1);
        }
    }
    Ok(out)
}

/// JSON layout of a Frobenius character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusJson {
    pub n: usize,
    pub lambda: Partition,
    pub s: usize,
    pub method: String,
    pub terms: Vec<FrobeniusTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusTerm {
    pub shape: Partition,
    pub coeffs: QPoly,
}

impl FrobeniusJson {
    pub fn new(p: &Params, method: &str, f: &SchurExpansion) -> Self {
        FrobeniusJson {
            n: p.n,
            lambda: p.lambda.clone(),
            s: p.s,
            method: method.to_string(),
            terms: f
                .terms()
                .map(|(shape, c)| FrobeniusTerm {
                    shape: shape.clone(),
                    coeffs: c.clone(),
                })
                .collect(),
        }
    }

    pub fn expansion(&self) -> SchurExpansion {
        let mut out = SchurExpansion::new();
        for t in &self.terms {
            out.add_term(t.shape.clone(), &t.coeffs);
        }
        out
    }
}
