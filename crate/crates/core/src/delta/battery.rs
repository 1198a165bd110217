use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::sigma::{enumerate_sigma, SigmaPair};
use super::Params;
use crate::error::{Error, Result};
use crate::partition::{dominates_unchecked, enumerate_compositions_containing, Partition};
use crate::tableau::{enumerate_ssyt_of_weight, Tableau};
use crate::word::{
    cocharge_of_tableau, cocharge_semistandard, cocharge_tableau, ctype, Permutation,
};

/// A device of partition shape together with its `(s−1) × (n−k)` battery.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BatteryTableau {
    pub device: Tableau,
    pub battery: Tableau,
    #[serde(rename = "Lambda")]
    pub big_lambda: Vec<usize>,
}

impl BatteryTableau {
    /// Device stacked on top of the battery, which sits to the right of the
    /// device's bottom row.
    pub fn combined(&self) -> Tableau {
        stack(&self.device, &self.battery)
    }

    pub fn reading_word(&self) -> Vec<u32> {
        self.combined().reading_word()
    }

    pub fn cocharge(&self) -> u32 {
        cocharge_semistandard(&self.reading_word()).expect("battery tableau content is a partition")
    }
}

fn stack(device: &Tableau, battery: &Tableau) -> Tableau {
    let width = device.rows().first().map_or(0, Vec::len);
    let mut inner = vec![width; battery.rows().len()];
    let mut rows: Vec<Vec<u32>> = battery.rows().to_vec();
    inner.extend(std::iter::repeat_n(0, device.rows().len()));
    rows.extend(device.rows().iter().cloned());
    Tableau::skew(inner, rows).expect("device above battery is a skew shape")
}

/// Battery with `m_v` columns missing value `v`, columns sorted so that the
/// missing value weakly decreases from left to right.
fn battery_for(missing: &[usize], s: usize) -> Tableau {
    let mut cols: Vec<u32> = Vec::new();
    for v in (1..=s).rev() {
        cols.extend(std::iter::repeat_n(v as u32, missing[v - 1]));
    }
    let rows = if cols.is_empty() {
        Vec::new()
    } else {
        (0..s - 1)
            .map(|r| {
                cols.iter()
                    .map(|&v| {
                        if (r as u32) + 1 < v {
                            r as u32 + 1
                        } else {
                            r as u32 + 2
                        }
                    })
                    .collect()
            })
            .collect()
    };
    Tableau::from_rows(rows).expect("rectangle")
}

/// All battery-powered tableaux of parameters `p`, sorted.
pub fn enumerate_battery(p: &Params) -> Vec<BatteryTableau> {
    let big = p.big_lambda();
    let lam = p.lambda.padded(p.s);
    let mut out = Vec::new();
    for alpha in enumerate_compositions_containing(p.n, p.s, &p.lambda) {
        let missing: Vec<usize> = alpha.iter().zip(&lam).map(|(a, l)| a - l).collect();
        let battery = battery_for(&missing, p.s);
        for device in enumerate_ssyt_of_weight(&alpha) {
            out.push(BatteryTableau {
                device,
                battery: battery.clone(),
                big_lambda: big.clone(),
            });
        }
    }
    out.sort();
    out
}

/// `Ψ̃(S, μ)`: boosted cocharge tableau of `S` with the superstandard
/// battery labels appended below and to the right.
pub fn psi_tilde(pair: &SigmaPair, p: &Params) -> Tableau {
    let k = p.k() as u32;
    let n = p.n as u32;
    let cc = cocharge_tableau(&pair.tableau);
    let word: Vec<u32> = pair
        .tableau
        .reading_word()
        .iter()
        .zip(cc.reading_word())
        .map(|(&e, c)| {
            if e > k {
                c + pair.mu.get((n - e) as usize) as u32
            } else {
                c
            }
        })
        .collect();
    let device = cc.refill(&word);
    let nk = p.n - p.k();
    let battery_rows = if nk == 0 { 0 } else { p.s - 1 };
    let battery = Tableau::from_rows((0..battery_rows).map(|r| vec![r as u32; nk]).collect())
        .expect("rectangle");
    stack(&device, &battery)
}

/// The standard skew filling whose cocharge labels are `Ψ̃(S, μ)`.
///
/// Within one label value the entries must run through the cells in reading
/// order, so the filling is unique; it is checked to be standard, to carry the
/// right labels, and to have catabolizability type dominating `Λ_{n,λ,s}`.
pub fn psi_standard(pair: &SigmaPair, p: &Params) -> Result<Tableau> {
    let labels = psi_tilde(pair, p);
    let word = labels.reading_word();
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| (word[i], i));
    let mut std_word = vec![0u32; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        std_word[i] = rank as u32 + 1;
    }
    let standard = labels.refill(&std_word);
    if !standard.is_standard() || cocharge_tableau(&standard) != labels {
        return Err(Error::Verification(format!(
            "no standard filling realizes the labels of Ψ̃ for {pair:?}"
        )));
    }
    let w = Permutation::new(std_word).expect("standard filling");
    let big: Vec<usize> = p.big_lambda().into_iter().filter(|&m| m > 0).collect();
    if !dominates_unchecked(ctype(&w).0.parts(), &big) {
        return Err(Error::Verification(format!(
            "standard filling for {pair:?} has catabolizability type below Λ"
        )));
    }
    Ok(standard)
}

/// The correspondence `Ψ : Σ_{n,λ,s} → T⁺_{n,λ,s}` for one parameter triple.
///
/// Pairs and battery tableaux are grouped by device shape and cocharge
/// (`cocharge(S) + |μ| + C(s−1,2)(n−k)` on the left, `cocharge(T)` on the
/// right); inside a group both sides are sorted and matched in order. Groups
/// of unequal size are a hard error.
#[derive(Clone, Debug)]
pub struct PsiTable {
    forward: BTreeMap<SigmaPair, BatteryTableau>,
    backward: BTreeMap<BatteryTableau, SigmaPair>,
}

impl PsiTable {
    pub fn new(p: &Params) -> Result<Self> {
        type Key = (Partition, usize);
        let mut left: BTreeMap<Key, Vec<SigmaPair>> = BTreeMap::new();
        for pair in enumerate_sigma(p) {
            psi_standard(&pair, p)?;
            let c =
                cocharge_of_tableau(&pair.tableau) as usize + pair.mu.size() + p.battery_offset();
            left.entry((pair.tableau.shape(), c))
                .or_default()
                .push(pair);
        }
        let mut right: BTreeMap<Key, Vec<BatteryTableau>> = BTreeMap::new();
        for t in enumerate_battery(p) {
            right
                .entry((t.device.shape(), t.cocharge() as usize))
                .or_default()
                .push(t);
        }
        if left
            .iter()
            .map(|(k, v)| (k, v.len()))
            .ne(right.iter().map(|(k, v)| (k, v.len())))
        {
            return Err(Error::Verification(format!(
                "Σ and battery tableaux differ in (shape, cocharge) counts for {p}"
            )));
        }
        let mut forward = BTreeMap::new();
        let mut backward = BTreeMap::new();
        for (key, pairs) in left {
            for (pair, t) in pairs
                .into_iter()
                .zip(right.remove(&key).unwrap_or_default())
            {
                backward.insert(t.clone(), pair.clone());
                forward.insert(pair, t);
            }
        }
        Ok(PsiTable { forward, backward })
    }

    pub fn psi(&self, pair: &SigmaPair) -> Option<&BatteryTableau> {
        self.forward.get(pair)
    }

    pub fn psi_inverse(&self, t: &BatteryTableau) -> Option<&SigmaPair> {
        self.backward.get(t)
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// `Ψ(S, μ)`.
pub fn psi(pair: &SigmaPair, p: &Params) -> Result<BatteryTableau> {
    PsiTable::new(p)?
        .psi(pair)
        .cloned()
        .ok_or_else(|| Error::InvalidParameters(format!("{pair:?} is not in Σ for {p}")))
}

/// `Ψ⁻¹(T)`.
pub fn psi_inverse(t: &BatteryTableau, p: &Params) -> Result<SigmaPair> {
    PsiTable::new(p)?
        .psi_inverse(t)
        .cloned()
        .ok_or_else(|| Error::Verification(format!("{t:?} is not in the image of Ψ")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Tableau;

    fn params(n: usize, lambda: &[usize], s: usize) -> Params {
        Params::new(n, Partition::new(lambda.to_vec()).unwrap(), s).unwrap()
    }

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn battery_counts() {
        assert_eq!(enumerate_battery(&params(4, &[2, 1], 3)).len(), 10);
        assert_eq!(enumerate_battery(&params(2, &[1], 2)).len(), 3);
    }

    #[test]
    fn worked_battery_tableau_is_listed() {
        let p = params(4, &[2, 1], 3);
        let example = BatteryTableau {
            device: t(&[&[1, 1, 2], &[2]]),
            battery: t(&[&[1], &[3]]),
            big_lambda: vec![3, 2, 1],
        };
        assert!(enumerate_battery(&p).contains(&example));
        // std(T) has cocharge labels device [0,0,1],[1], battery [0],[1].
        assert_eq!(example.cocharge(), 3);
        let pre = psi_inverse(&example, &p).unwrap();
        assert_eq!(psi(&pre, &p).unwrap(), example);
        assert_eq!(
            cocharge_of_tableau(&pre.tableau) as usize + pre.mu.size() + p.battery_offset(),
            3
        );
    }

    #[test]
    fn psi_tilde_example() {
        let p = params(4, &[2, 1], 3);
        let pair = SigmaPair {
            tableau: t(&[&[1, 2], &[3, 4]]),
            mu: Partition::new(vec![1]).unwrap(),
        };
        let tilde = psi_tilde(&pair, &p);
        let expected = Tableau::skew(
            vec![2, 2, 0, 0],
            vec![vec![0], vec![1], vec![0, 0], vec![1, 2]],
        )
        .unwrap();
        assert_eq!(tilde, expected);
    }

    #[test]
    fn standard_filling_of_worked_example() {
        let p = params(4, &[2, 1], 3);
        let pair = SigmaPair {
            tableau: t(&[&[1, 2, 4], &[3]]),
            mu: Partition::empty(),
        };
        let expected = Tableau::skew(
            vec![3, 3, 0, 0],
            vec![vec![3], vec![6], vec![1, 2, 5], vec![4]],
        )
        .unwrap();
        assert_eq!(psi_standard(&pair, &p).unwrap(), expected);
    }

    #[test]
    fn psi_is_a_bijection_onto_battery_tableaux() {
        let p = params(4, &[2, 1], 3);
        let mut image: Vec<BatteryTableau> = enumerate_sigma(&p)
            .iter()
            .map(|sp| psi(sp, &p).unwrap())
            .collect();
        image.sort();
        assert_eq!(image, enumerate_battery(&p));
    }
}
