//! Exact multivariate polynomials over `Q`, graded elimination inside
//! `Q[x]/(x_i^s)`, and the harmonic (polarization) membership oracle.

mod harmonic;
mod ideal;
mod linalg;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use harmonic::{
    enumerate_injective_fillings, garnir, garnir_ext, garnir_ext_by_tableaux, harmonic_membership,
    polarization, vandermonde, HarmonicOracle,
};
pub use ideal::{
    graded_quotient_hilbert, ideal_equality_small_s, ideal_generators, kn_ideal_generators,
    phi_a_check, phi_a_check_with, quotient_dimension, spans_quotient, IdealSlices,
    DEFAULT_MAX_ALGEBRA_DIM,
};
pub use linalg::{integer_row, Echelon};

/// Exponent vector of a monomial; its length is the number of variables.
pub type Exponents = Vec<u32>;

/// A polynomial in `n` variables with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Exponents, BigRational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], BigRational::one())
    }

    pub fn monomial(exps: Exponents, coeff: BigRational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    /// `x_i`, 0-based index.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponents, BigRational)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Homogeneous components keyed by degree.
    pub fn components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(e.iter().sum())
                .or_insert_with(|| Polynomial::zero(self.n))
                .add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        Polynomial::from_terms(self.n, self.terms.iter().map(|(e, x)| (e.clone(), x * c)))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(self.n), |acc, _| &acc * self)
    }

    /// Substitute `x_i ↦ x_{perm[i]}` (0-based).
    pub fn permute_variables(&self, perm: &[usize]) -> Polynomial {
        Polynomial::from_terms(
            self.n,
            self.terms.iter().map(|(e, c)| {
                let mut out = vec![0; self.n];
                for (i, &x) in e.iter().enumerate() {
                    out[perm[i]] = x;
                }
                (out, c.clone())
            }),
        )
    }

    /// Drop every term with some exponent `≥ s`.
    pub fn truncate(&self, s: u32) -> Polynomial {
        Polynomial::from_terms(
            self.n,
            self.terms
                .iter()
                .filter(|(e, _)| e.iter().all(|&x| x < s))
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    /// Integer coefficients scaled to be coprime with positive leading term;
    /// zero stays zero.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        let Some((_, lead)) = self.terms.iter().next_back() else {
            return self.clone();
        };
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c.numer() * &den / c.denom()));
        }
        let mut factor = BigRational::new(den, g);
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "variable counts differ");
        let mut out = Polynomial::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e: Exponents = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{x}", i + 1)
                    }
                })
                .collect();
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Exponents,
    num: serde_json::Value,
    den: serde_json::Value,
}

fn int_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

fn int_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(e, c)| TermJson {
                exps: e.clone(),
                num: int_to_json(c.numer()),
                den: int_to_json(c.denom()),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(deserializer)?;
        let n = terms.first().map_or(0, |t| t.exps.len());
        let mut p = Polynomial::zero(n);
        for t in terms {
            if t.exps.len() != n {
                return Err(D::Error::custom("exponent vectors of different lengths"));
            }
            let num = int_from_json(&t.num).ok_or_else(|| D::Error::custom("bad numerator"))?;
            let den = int_from_json(&t.den).ok_or_else(|| D::Error::custom("bad denominator"))?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            p.add_term(t.exps, BigRational::new(num, den));
        }
        Ok(p)
    }
}

/// `e_d(S)`: sum of squarefree degree-`d` monomials in the 0-based variables `S`.
pub fn partial_elementary(d: usize, vars: &[usize], n: usize) -> Polynomial {
    let mut out = Polynomial::zero(n);
    if d > vars.len() {
        return out;
    }
    let mut chosen = Vec::with_capacity(d);
    fn rec(
        vars: &[usize],
        start: usize,
        d: usize,
        chosen: &mut Vec<usize>,
        n: usize,
        out: &mut Polynomial,
    ) {
        if chosen.len() == d {
            let mut e = vec![0; n];
            for &v in chosen.iter() {
                e[v] = 1;
            }
            out.add_term(e, BigRational::one());
            return;
        }
        for i in start..vars.len() {
            chosen.push(vars[i]);
            rec(vars, i + 1, d, chosen, n, out);
            chosen.pop();
        }
    }
    rec(vars, 0, d, &mut chosen, n, &mut out);
    out
}

/// Total order on exponent vectors: compare the sorted-decreasing vectors
/// lexicographically, then the vectors themselves.
pub fn descent_order_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let sorted = |v: &[u32]| {
        let mut s = v.to_vec();
        s.sort_unstable_by(|x, y| y.cmp(x));
        s
    };
    sorted(a).cmp(&sorted(b)).then_with(|| a.cmp(b))
}

pub fn rat_from(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
