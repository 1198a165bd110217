use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Row space of an integer matrix kept in reduced echelon form.
///
/// Rows are stored primitive (content 1) with a positive pivot, and every
/// pivot column is zero in all other rows. Elimination is fraction-free: a
/// row `v` is reduced by a pivot row `r` as `r[c]·v − v[c]·r`, then divided
/// by its content.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, Vec<BigInt>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ncols, "row length");
        for (&c, r) in &self.rows {
            if v[c].is_zero() {
                continue;
            }
            let a = r[c].clone();
            let b = v[c].clone();
            for (x, y) in v.iter_mut().zip(r) {
                *x = &a * &*x - &b * y;
            }
            normalize(&mut v);
        }
        v
    }

    pub fn contains(&self, v: Vec<BigInt>) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if v[c].is_negative() {
            for x in v.iter_mut() {
                *x = -&*x;
            }
        }
        normalize(&mut v);
        for r in self.rows.values_mut() {
            if r[c].is_zero() {
                continue;
            }
            let b = r[c].clone();
            for (x, y) in r.iter_mut().zip(&v) {
                *x = &v[c] * &*x - &b * y;
            }
            normalize(r);
        }
        self.rows.insert(c, v);
        true
    }
}

fn normalize(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g > BigInt::one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Clears denominators of a rational row.
pub fn integer_row(v: &[BigRational]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for x in v {
        if !x.is_zero() {
            den = den.lcm(x.denom());
        }
    }
    v.iter().map(|x| x.numer() * &den / x.denom()).collect()
}
