//! Words and permutations: RSK, descents, cocharge labelings and the
//! catabolism insertion computing catabolizability type.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::Tableau;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &l in &letters {
            let l = l as usize;
            if l == 0 || l > n || seen[l] {
                return Err(Error::NotAPermutation(letters));
            }
            seen[l] = true;
        }
        Ok(Permutation(letters))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// Parses a digit string such as `"3516247"` (only for n ≤ 9).
    pub fn from_digits(text: &str) -> Result<Self> {
        let letters = text
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::InvalidParameters(format!("bad digit {c:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::new(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Permutation {
        let mut v = self.0.clone();
        v.reverse();
        Permutation(v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &l) in self.0.iter().enumerate() {
            inv[l as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    /// Subword of letters `≤ k`.
    pub fn restrict(&self, k: u32) -> Permutation {
        Permutation(self.0.iter().copied().filter(|&l| l <= k).collect())
    }

    /// 0-based position of every letter: `pos[l]` for `l` in `1..=n`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len() + 1];
        for (i, &l) in self.0.iter().enumerate() {
            pos[l as usize] = i;
        }
        pos
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![Permutation(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(Permutation(cur.clone()));
    }
    out
}

pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Schensted row insertion: `(P(w), Q(w))`.
pub fn rsk(w: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &letter) in w.letters().iter().enumerate() {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step as u32 + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(j) => {
                    std::mem::swap(&mut p[r][j], &mut x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step as u32 + 1);
                    break;
                }
            }
        }
    }
    (
        Tableau::from_rows(p).expect("insertion tableau has partition shape"),
        Tableau::from_rows(q).expect("recording tableau has partition shape"),
    )
}

/// `{i : w_i > w_{i+1}}`, 1-based.
pub fn descent_set(w: &[u32]) -> Vec<u32> {
    (1..w.len())
        .filter(|&i| w[i - 1] > w[i])
        .map(|i| i as u32)
        .collect()
}

/// `{i : w_i < w_{i+1}}`, 1-based.
pub fn ascent_set(w: &[u32]) -> Vec<u32> {
    (1..w.len())
        .filter(|&i| w[i - 1] < w[i])
        .map(|i| i as u32)
        .collect()
}

pub fn maj(w: &[u32]) -> u32 {
    descent_set(w).iter().sum()
}

/// Cocharge word of a permutation, returned positionally.
pub fn cocharge_word(w: &Permutation) -> Vec<u32> {
    let pos = w.positions();
    let mut out = vec![0; w.len()];
    for l in 2..=w.len() {
        let prev = out[pos[l - 1]];
        out[pos[l]] = if pos[l] > pos[l - 1] { prev } else { prev + 1 };
    }
    out
}

pub fn cocharge_value(w: &Permutation) -> u32 {
    cocharge_word(w).iter().sum()
}

/// Whether `z` is the cocharge word of some permutation.
pub fn is_cocharge_word(z: &[u32]) -> bool {
    let Some(&max) = z.iter().max() else {
        return true;
    };
    if !z.contains(&0) {
        return false;
    }
    (0..max).all(|c| match z.iter().rposition(|&x| x == c) {
        Some(right) => z[..right].contains(&(c + 1)),
        None => false,
    })
}

/// A permutation whose cocharge word is `z`: letters are assigned in order of
/// (label, position). Fails when `z` is not a cocharge word.
pub fn permutation_from_cocharge_word(z: &[u32]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..z.len()).collect();
    order.sort_by_key(|&i| (z[i], i));
    let mut w = vec![0; z.len()];
    for (rank, &i) in order.iter().enumerate() {
        w[i] = rank as u32 + 1;
    }
    let w = Permutation(w);
    if cocharge_word(&w) != z {
        return Err(Error::InvalidParameters(format!(
            "{z:?} is not a cocharge word"
        )));
    }
    Ok(w)
}

/// Cocharge tableau of a standard (possibly skew) tableau.
pub fn cocharge_tableau(s: &Tableau) -> Tableau {
    let row = s.row_of_entries();
    let n = s.size();
    let mut label = vec![0u32; n + 1];
    for i in 2..=n {
        label[i] = label[i - 1] + u32::from(row[i] > row[i - 1]);
    }
    let word: Vec<u32> = s
        .reading_word()
        .iter()
        .map(|&e| label[e as usize])
        .collect();
    s.refill(&word)
}

/// Sum of the cocharge labels of a standard tableau.
pub fn cocharge_of_tableau(s: &Tableau) -> u32 {
    cocharge_tableau(s).cells().map(|c| c.2).sum()
}

/// Cocharge labels of a word with partition content, by cyclic subword
/// extraction: take the rightmost unused 1, then search leftward (wrapping to
/// the right end) for 2, 3, ….
pub fn cocharge_semistandard_labels(w: &[u32]) -> Result<Vec<u32>> {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    let mut content = vec![0usize; max];
    for &l in w {
        if l == 0 {
            return Err(Error::ContentNotPartition(content));
        }
        content[l as usize - 1] += 1;
    }
    if content.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::ContentNotPartition(content));
    }
    let n = w.len();
    let mut used = vec![false; n];
    let mut labels = vec![0u32; n];
    let mut remaining = n;
    while remaining > 0 {
        let Some(mut at) = (0..n).rev().find(|&i| !used[i] && w[i] == 1) else {
            return Err(Error::ContentNotPartition(content));
        };
        let mut label = 0;
        used[at] = true;
        labels[at] = 0;
        remaining -= 1;
        let mut value = 2;
        loop {
            let found = (1..n)
                .map(|step| (at + n - step) % n)
                .find(|&i| !used[i] && w[i] == value);
            let Some(next) = found else { break };
            if next < at {
                label += 1;
            }
            used[next] = true;
            labels[next] = label;
            remaining -= 1;
            at = next;
            value += 1;
        }
    }
    Ok(labels)
}

/// Lascoux–Schützenberger cocharge of a word with partition content.
pub fn cocharge_semistandard(w: &[u32]) -> Result<u32> {
    Ok(cocharge_semistandard_labels(w)?.iter().sum())
}

/// Catabolizability type of a permutation via catabolism insertion on its
/// cocharge word, along with the recording filling `T_w` (1-based positions).
pub fn ctype(w: &Permutation) -> (Partition, Tableau) {
    ctype_of_cocharge_word(&cocharge_word(w))
}

pub fn ctype_of_cocharge_word(z: &[u32]) -> (Partition, Tableau) {
    let mut queue: VecDeque<(u32, u32)> = z
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i as u32 + 1))
        .collect();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    while let Some((label, pos)) = queue.pop_back() {
        let r = label as usize;
        let fits = if r < rows.len() {
            r == 0 || rows[r - 1].len() > rows[r].len()
        } else {
            r == rows.len()
        };
        if fits {
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].push(pos);
        } else {
            queue.push_front((label + 1, pos));
        }
    }
    let shape =
        Partition::new(rows.iter().map(Vec::len).collect()).expect("boxes added keep a partition");
    (shape, Tableau::from_rows(rows).expect("partition shape"))
}

/// Catabolizability type of a standard tableau (via its reading word).
pub fn ctype_of_tableau(s: &Tableau) -> Partition {
    let w = Permutation::new(s.reading_word())
        .expect("standard tableau has a permutation reading word");
    ctype(&w).0
}
