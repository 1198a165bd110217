//! Partitions, compositions and dominance order.
//!
//! Diagrams are drawn in French notation: part `i` (0-based) is row `i`
//! counted from the bottom.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers, stored without
/// trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length-`len` tuple padded with zeros. Panics if `len < self.len()`.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        assert!(len >= self.0.len(), "cannot pad {self} to length {len}");
        let mut v = self.0.clone();
        v.resize(len, 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.get(0);
        Partition(
            (1..=width)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// Dominance `self ⊵ other`; sizes must agree.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(dominates_unchecked(&self.0, &other.0))
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// `Σ C(λ'_i, 2)`; always equal to [`Partition::n_stat`].
    pub fn n_stat_by_columns(&self) -> usize {
        self.conjugate()
            .0
            .iter()
            .map(|&c| c * c.saturating_sub(1) / 2)
            .sum()
    }

    /// Componentwise containment `other ⊆ self` of diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Adds a cell at the end of row `row` if the result is a partition.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row > self.len() {
            return None;
        }
        if row > 0 && self.get(row) + 1 > self.get(row - 1) {
            return None;
        }
        let mut v = self.0.clone();
        if row == v.len() {
            v.push(1);
        } else {
            v[row] += 1;
        }
        Some(Partition(v))
    }

    /// λ with a new part of size 1 appended at the top.
    pub fn with_extra_row_of_one(&self) -> Partition {
        let mut v = self.0.clone();
        v.push(1);
        Partition(v)
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn hook_length_count(&self) -> u128 {
        let n = self.size() as u128;
        let conj = self.conjugate();
        let mut num: u128 = (1..=n).product();
        let mut hooks: u128 = 1;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = conj.get(c) - r - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        num /= hooks;
        num
    }

    /// Cells `(column, row)` in reading order: rows top to bottom, left to right.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in (0..self.len()).rev() {
            for c in 0..self.0[r] {
                out.push((c, r));
            }
        }
        out
    }
}

pub(crate) fn dominates_unchecked(mu: &[usize], lambda: &[usize]) -> bool {
    let (mut a, mut b) = (0usize, 0usize);
    for i in 0..mu.len().max(lambda.len()) {
        a += mu.get(i).copied().unwrap_or(0);
        b += lambda.get(i).copied().unwrap_or(0);
        if a < b {
            return false;
        }
    }
    true
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with parts `≤ max_part` and at most `max_len` parts,
/// in reverse lexicographic order.
pub fn partitions_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    fn rec(
        n: usize,
        max_part: usize,
        max_len: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Partitions fitting inside the `rows × cols` box (at most `rows` parts,
/// each at most `cols`), every size, ordered by size then reverse lex.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    (0..=rows * cols)
        .flat_map(|m| partitions_bounded(m, cols, rows))
        .collect()
}

/// A sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameters(format!(
                "composition {parts:?} has a zero part"
            )));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Proper prefix sums `{γ₁, γ₁+γ₂, …, γ₁+…+γ_{l-1}}`.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }
}

/// All compositions of `n` (positive parts), lexicographic.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=n {
            cur.push(p);
            rec(n - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Weak compositions `α = (α₁,…,α_s)` of `n` (zero parts allowed, length
/// exactly `s`) with `λ_i ≤ α_i` for all `i`, in reverse lexicographic order.
pub fn enumerate_compositions_containing(
    n: usize,
    s: usize,
    lambda: &Partition,
) -> Vec<Vec<usize>> {
    if lambda.len() > s || lambda.size() > n {
        return Vec::new();
    }
    let lam = lambda.padded(s);
    let spare = n - lambda.size();
    let mut out = Vec::new();
    let mut extra = vec![0usize; s];
    fn rec(
        i: usize,
        left: usize,
        extra: &mut Vec<usize>,
        lam: &[usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        if i + 1 == extra.len() {
            extra[i] = left;
            out.push(lam.iter().zip(extra.iter()).map(|(a, b)| a + b).collect());
            return;
        }
        for e in (0..=left).rev() {
            extra[i] = e;
            rec(i + 1, left - e, extra, lam, out);
        }
    }
    if s == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, spare, &mut extra, &lam, &mut out);
    out
}

/// Parses `"2,1"` into a partition; the empty string is `∅`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::InvalidParameters(format!("bad part {t:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Column lengths read off the drawn diagram, one cell at a time.
    fn conjugate_by_cells(l: &Partition) -> Vec<usize> {
        let mut cols = vec![0usize; l.get(0)];
        for (c, _) in l.cells() {
            cols[c] += 1;
        }
        cols
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        let l = p(&[4, 4, 1, 1]);
        assert_eq!(conjugate_by_cells(&l), vec![4, 2, 2, 2]);
        assert_eq!(l.conjugate(), p(&[4, 2, 2, 2]));
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])).unwrap());
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])).unwrap());
        assert!(p(&[2, 2, 1]).dominates(&p(&[2, 2, 1])).unwrap());
        assert!(p(&[3]).dominates(&p(&[2])).is_err());
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(p(&[1, 1, 1]).n_stat(), 3);
        assert_eq!(p(&[3]).n_stat(), 0);
        // 0·2 + 1·2 + 2·1 by rows; C(3,2) + C(2,2) by columns.
        assert_eq!(p(&[2, 2, 1]).n_stat(), 4);
        assert_eq!(p(&[2, 2, 1]).n_stat_by_columns(), 4);
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p(&[2, 1]).hook_length_count(), 2);
        assert_eq!(p(&[2, 2]).hook_length_count(), 2);
        assert_eq!(p(&[4, 4, 1, 1]).hook_length_count(), 300);
        assert_eq!(Partition::empty().hook_length_count(), 1);
    }

    /// Brute force over all length-`s` tuples with entries `0..=n`.
    fn weak_compositions_brute(n: usize, s: usize, lambda: &Partition) -> Vec<Vec<usize>> {
        let lam = lambda.padded(s);
        let mut out = Vec::new();
        let total = (n + 1).pow(s as u32);
        for code in 0..total {
            let mut v = Vec::with_capacity(s);
            let mut c = code;
            for _ in 0..s {
                v.push(c % (n + 1));
                c /= n + 1;
            }
            if v.iter().sum::<usize>() == n && v.iter().zip(&lam).all(|(a, b)| a >= b) {
                out.push(v);
            }
        }
        out.sort();
        out.reverse();
        out
    }

    #[test]
    fn compositions_containing_examples() {
        assert_eq!(
            enumerate_compositions_containing(2, 2, &p(&[1])),
            vec![vec![2, 0], vec![1, 1]]
        );
        assert_eq!(
            enumerate_compositions_containing(4, 3, &p(&[2, 1])),
            vec![vec![3, 1, 0], vec![2, 2, 0], vec![2, 1, 1]]
        );
        assert_eq!(
            enumerate_compositions_containing(3, 2, &p(&[2, 1])),
            vec![vec![2, 1]]
        );
        for n in 0..=5 {
            for s in 1..=3 {
                for k in 0..=n {
                    for lam in partitions_bounded(k, k, s) {
                        assert_eq!(
                            enumerate_compositions_containing(n, s, &lam),
                            weak_compositions_brute(n, s, &lam)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=12 {
            for l in partitions_of(n) {
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order_reversed_by_conjugation() {
        for n in 0..=8 {
            let ps = partitions_of(n);
            for a in &ps {
                assert!(a.dominates(a).unwrap());
                for b in &ps {
                    let ab = a.dominates(b).unwrap();
                    let ba = b.dominates(a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    assert_eq!(ab, b.conjugate().dominates(&a.conjugate()).unwrap());
                    for c in &ps {
                        if ab && b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_serialize() {
        assert_eq!(parse_partition("2,1").unwrap(), p(&[2, 1]));
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert!(parse_partition("1,2").is_err());
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
        let back: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(back, p(&[3, 1]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
