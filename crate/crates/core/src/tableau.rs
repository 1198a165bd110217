//! Fillings of (skew) Young diagrams, standard and semistandard tableaux,
//! and Kostka numbers.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// A filling of a skew diagram, rows listed bottom-up (French).
///
/// Row `r` occupies columns `inner[r] .. inner[r] + rows[r].len()`.
/// For straight shapes `inner` is all zeros.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    inner: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inner: Option<Vec<usize>>,
    rows: Vec<Vec<u32>>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let skew = self.inner.iter().any(|&i| i > 0);
        TableauJson {
            shape: self.outer_row_lengths(),
            inner: skew.then(|| self.inner.clone()),
            rows: self.rows.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = TableauJson::deserialize(deserializer)?;
        let inner = raw.inner.unwrap_or_else(|| vec![0; raw.rows.len()]);
        let t = Tableau::skew(inner, raw.rows).map_err(serde::de::Error::custom)?;
        if t.outer_row_lengths() != raw.shape {
            return Err(serde::de::Error::custom("shape does not match rows"));
        }
        Ok(t)
    }
}

impl Tableau {
    /// Straight-shape filling; row lengths must be weakly decreasing.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let inner = vec![0; rows.len()];
        Self::skew(inner, rows)
    }

    pub fn skew(inner: Vec<usize>, rows: Vec<Vec<u32>>) -> Result<Self> {
        if inner.len() != rows.len() {
            return Err(Error::InvalidTableau(
                "inner offsets do not match rows".into(),
            ));
        }
        let outer: Vec<usize> = inner.iter().zip(&rows).map(|(i, r)| i + r.len()).collect();
        if outer.windows(2).any(|w| w[0] < w[1]) || inner.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!(
                "not a skew shape: outer {outer:?}, inner {inner:?}"
            )));
        }
        Ok(Tableau { inner, rows })
    }

    /// Straight shape filling from a shape and a flat reading word
    /// (rows top to bottom, left to right).
    pub fn from_reading_word(shape: &Partition, word: &[u32]) -> Result<Self> {
        if shape.size() != word.len() {
            return Err(Error::SizeMismatch {
                left: shape.size(),
                right: word.len(),
            });
        }
        let mut rows = vec![Vec::new(); shape.len()];
        let mut idx = 0;
        for r in (0..shape.len()).rev() {
            rows[r] = word[idx..idx + shape.get(r)].to_vec();
            idx += shape.get(r);
        }
        Tableau::from_rows(rows)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn is_skew(&self) -> bool {
        self.inner.iter().any(|&i| i > 0)
    }

    pub fn outer_row_lengths(&self) -> Vec<usize> {
        self.inner
            .iter()
            .zip(&self.rows)
            .map(|(i, r)| i + r.len())
            .collect()
    }

    /// Outer shape as a partition.
    pub fn shape(&self) -> Partition {
        Partition::new(self.outer_row_lengths()).expect("outer shape is a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `(column, row, entry)` for every cell, in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.rows.len()).rev().flat_map(move |r| {
            self.rows[r]
                .iter()
                .enumerate()
                .map(move |(j, &e)| (self.inner[r] + j, r, e))
        })
    }

    pub fn get(&self, col: usize, row: usize) -> Option<u32> {
        let r = self.rows.get(row)?;
        col.checked_sub(self.inner[row])
            .and_then(|j| r.get(j).copied())
    }

    /// Rows top to bottom, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.cells().map(|(_, _, e)| e).collect()
    }

    /// Same cells, new entries taken from `word` in reading order.
    pub fn refill(&self, word: &[u32]) -> Tableau {
        assert_eq!(word.len(), self.size());
        let mut rows = self.rows.clone();
        let mut idx = 0;
        for r in (0..rows.len()).rev() {
            for e in rows[r].iter_mut() {
                *e = word[idx];
                idx += 1;
            }
        }
        Tableau {
            inner: self.inner.clone(),
            rows,
        }
    }

    /// Weight `(m₁, m₂, …)`: `m_i` is the number of entries equal to `i`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.cells().map(|c| c.2).max().unwrap_or(0) as usize;
        let mut out = vec![0; max];
        for (_, _, e) in self.cells() {
            if e > 0 {
                out[e as usize - 1] += 1;
            }
        }
        out
    }

    /// Rows weakly increase, columns strictly increase upward.
    pub fn is_semistandard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1])) && self.columns_strict()
    }

    fn columns_strict(&self) -> bool {
        for r in 1..self.rows.len() {
            for (j, &e) in self.rows[r].iter().enumerate() {
                let c = self.inner[r] + j;
                if let Some(below) = self.get(c, r - 1) {
                    if below >= e {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Semistandard with content `1..=n` each once.
    pub fn is_standard(&self) -> bool {
        let n = self.size() as u32;
        let mut seen: Vec<u32> = self.cells().map(|c| c.2).collect();
        seen.sort_unstable();
        seen.iter().copied().eq(1..=n)
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self.columns_strict()
    }

    /// Row index of each entry `1..=n` of a standard filling.
    pub fn row_of_entries(&self) -> Vec<usize> {
        let mut out = vec![0; self.size() + 1];
        for (_, r, e) in self.cells() {
            out[e as usize] = r;
        }
        out
    }

    /// Cells holding entries `≤ k`; empty rows at the top are dropped.
    pub fn restrict(&self, k: u32) -> Tableau {
        let mut rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&e| e <= k).collect())
            .collect();
        let mut inner = self.inner.clone();
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
            inner.pop();
        }
        Tableau { inner, rows }
    }

    /// Transpose of a straight-shape filling.
    pub fn transpose(&self) -> Tableau {
        let shape = self.shape().conjugate();
        let rows = (0..shape.len())
            .map(|c| (0..shape.get(c)).map(|r| self.rows[r][c]).collect())
            .collect();
        Tableau {
            inner: vec![0; shape.len()],
            rows,
        }
    }

    /// `Des(S) = {i : i+1 lies strictly above i}` for a standard filling.
    pub fn descent_set(&self) -> Vec<u32> {
        let row = self.row_of_entries();
        (1..self.size())
            .filter(|&i| row[i + 1] > row[i])
            .map(|i| i as u32)
            .collect()
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn maj(&self) -> u32 {
        self.descent_set().iter().sum()
    }
}

/// All standard tableaux of shape `lambda`.
pub fn enumerate_syt(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.size();
    let target = lambda.parts().to_vec();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); target.len()];
    let mut out = Vec::new();
    fn rec(next: u32, n: u32, target: &[usize], rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        if next > n {
            out.push(Tableau::from_rows(rows.clone()).expect("valid shape"));
            return;
        }
        for r in 0..target.len() {
            let len = rows[r].len();
            if len < target[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                rec(next + 1, n, target, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(1, n as u32, &target, &mut rows, &mut out);
    out
}

/// Standard tableaux of every shape of size `n`.
pub fn enumerate_all_syt(n: usize) -> Vec<Tableau> {
    partitions_of(n).iter().flat_map(enumerate_syt).collect()
}

/// Semistandard fillings of `outer / inner` with weight `weight`
/// (weak compositions allowed: zero entries simply skip a value).
pub fn enumerate_ssyt_skew(outer: &Partition, inner: &Partition, weight: &[usize]) -> Vec<Tableau> {
    if !outer.contains(inner) || outer.size() - inner.size() != weight.iter().sum::<usize>() {
        return Vec::new();
    }
    let nrows = outer.len();
    let outer_v = outer.padded(nrows);
    let inner_v = inner.padded(nrows);
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); nrows];
    let mut out = Vec::new();

    // Adds a horizontal strip of `count` cells filled with `value`, choosing
    // row by row from the top so that earlier choices never block later ones.
    #[allow(clippy::too_many_arguments)]
    fn strip(
        value: usize,
        row: usize,
        remaining: usize,
        cur: &mut Vec<usize>,
        before: &[usize],
        outer: &[usize],
        inner: &[usize],
        weight: &[usize],
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if row == cur.len() {
            if remaining == 0 {
                next_value(value + 1, cur, outer, inner, weight, rows, out);
            }
            return;
        }
        let cap_below = if row == 0 { outer[0] } else { before[row - 1] };
        let max_len = outer[row].min(cap_below);
        let start = before[row];
        let most = max_len.saturating_sub(start).min(remaining);
        for add in 0..=most {
            cur[row] = start + add;
            for _ in 0..add {
                rows[row].push(value as u32);
            }
            strip(
                value,
                row + 1,
                remaining - add,
                cur,
                before,
                outer,
                inner,
                weight,
                rows,
                out,
            );
            for _ in 0..add {
                rows[row].pop();
            }
            cur[row] = start;
        }
    }

    fn next_value(
        value: usize,
        cur: &mut Vec<usize>,
        outer: &[usize],
        inner: &[usize],
        weight: &[usize],
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if value > weight.len() {
            if cur.as_slice() == outer {
                let t = Tableau::skew(inner.to_vec(), rows.clone()).expect("valid skew shape");
                out.push(t);
            }
            return;
        }
        let before = cur.clone();
        strip(
            value,
            0,
            weight[value - 1],
            cur,
            &before,
            outer,
            inner,
            weight,
            rows,
            out,
        );
    }

    let mut cur = inner_v.clone();
    next_value(1, &mut cur, &outer_v, &inner_v, weight, &mut rows, &mut out);
    out
}

pub fn enumerate_ssyt(shape: &Partition, weight: &[usize]) -> Vec<Tableau> {
    enumerate_ssyt_skew(shape, &Partition::empty(), weight)
}

/// Semistandard tableaux of weight `weight` and any straight shape.
pub fn enumerate_ssyt_of_weight(weight: &[usize]) -> Vec<Tableau> {
    let n = weight.iter().sum();
    partitions_of(n)
        .iter()
        .flat_map(|l| enumerate_ssyt(l, weight))
        .collect()
}

/// `K_{λ,μ} = |SSYT(λ, μ)|`.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> Result<u64> {
    let m: usize = mu.iter().sum();
    if lambda.size() != m {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: m,
        });
    }
    Ok(count_ssyt(lambda, mu))
}

fn count_ssyt(lambda: &Partition, mu: &[usize]) -> u64 {
    // Horizontal-strip recursion, peeling the largest value off first.
    fn rec(shape: &[usize], mu: &[usize]) -> u64 {
        let Some((&last, rest)) = mu.split_last() else {
            return u64::from(shape.iter().all(|&p| p == 0));
        };
        let mut total = 0;
        let mut smaller = shape.to_vec();
        strips(shape, 0, last, &mut smaller, rest, &mut total);
        total
    }
    fn strips(
        shape: &[usize],
        row: usize,
        left: usize,
        cur: &mut Vec<usize>,
        rest: &[usize],
        total: &mut u64,
    ) {
        if row == shape.len() {
            if left == 0 {
                *total += rec(cur, rest);
            }
            return;
        }
        let floor = shape.get(row + 1).copied().unwrap_or(0);
        let most = (shape[row] - floor).min(left);
        for take in 0..=most {
            cur[row] = shape[row] - take;
            strips(shape, row + 1, left - take, cur, rest, total);
        }
        cur[row] = shape[row];
    }
    rec(lambda.parts(), mu)
}

/// `|{T ∈ SYT(λ) : Des(T) ⊆ {μ₁, μ₁+μ₂, …}}|`, an independent route to `K_{λ,μ}`.
pub fn kostka_by_descents(lambda: &Partition, mu: &[usize]) -> u64 {
    let mut allowed = BTreeSet::new();
    let mut acc = 0u32;
    for &m in mu {
        acc += m as u32;
        allowed.insert(acc);
    }
    enumerate_syt(lambda)
        .iter()
        .filter(|t| t.descent_set().iter().all(|d| allowed.contains(d)))
        .count() as u64
}
