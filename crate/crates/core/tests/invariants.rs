use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use proptest::prelude::*;
use springer_lab::delta::{
    enumerate_d_nls, enumerate_pairs, enumerate_sigma, in_sigma_lambda, word_to_pair, Params,
};
use springer_lab::partition::{partitions_of, Partition};
use springer_lab::poly::{polarization, rat_from, Echelon, Polynomial};
use springer_lab::specht::higher_specht;
use springer_lab::tableau::{enumerate_all_syt, enumerate_syt, kostka};
use springer_lab::word::{
    all_permutations, cocharge_tableau, cocharge_value, cocharge_word, ctype, ctype_of_tableau,
    is_cocharge_word, permutation_from_cocharge_word, rsk, Permutation,
};

fn part(v: Vec<usize>) -> Partition {
    Partition::new(v).unwrap()
}

fn label_counts(labels: impl Iterator<Item = u32>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for l in labels {
        if out.len() <= l as usize {
            out.resize(l as usize + 1, 0);
        }
        out[l as usize] += 1;
    }
    out
}

#[test]
fn cocharge_words_classify_and_reconstruct() {
    for n in 1..=7 {
        for w in all_permutations(n) {
            let z = cocharge_word(&w);
            assert!(is_cocharge_word(&z), "{w:?}");
            let back = permutation_from_cocharge_word(&z).unwrap();
            assert_eq!(cocharge_word(&back), z);
        }
    }
}

#[test]
fn knuth_classes_share_cocharge_and_ctype() {
    for n in 1..=6 {
        let mut seen: BTreeMap<Vec<Vec<u32>>, (u32, Partition)> = BTreeMap::new();
        for w in all_permutations(n) {
            let key = rsk(&w).0.rows().to_vec();
            let val = (cocharge_value(&w), ctype(&w).0);
            if let Some(prev) = seen.insert(key, val.clone()) {
                assert_eq!(prev, val, "{w:?}");
            }
        }
    }
}

#[test]
fn insert_and_delete_letters() {
    for n in 1..=6 {
        for w in all_permutations(n) {
            let z = cocharge_word(&w);
            let present: BTreeSet<u32> = z.iter().copied().collect();
            for &d in &present {
                for j in 0..=n {
                    let mut u = z.clone();
                    u.insert(j, d);
                    assert!(is_cocharge_word(&u), "{z:?} + {d} at {j}");
                }
            }
            let max = *z.iter().max().unwrap();
            let m = z.iter().rposition(|&x| x == max).unwrap();
            assert_eq!(w.letters()[m] as usize, n);
            let mut shorter = z.clone();
            shorter.remove(m);
            assert_eq!(shorter, cocharge_word(&w.restrict(n as u32 - 1)));
        }
    }
}

#[test]
fn cocharge_labels_are_bounded_by_descents() {
    for n in 1..=7 {
        for s in enumerate_all_syt(n) {
            let des = s.des() as u32;
            assert!(cocharge_tableau(&s).cells().all(|(_, _, l)| l <= des));
        }
    }
}

/// Dominance of compositions through partial sums.
fn dominates(a: &[usize], b: &[usize]) -> bool {
    let (mut x, mut y) = (0, 0);
    (0..a.len().max(b.len())).all(|i| {
        x += a.get(i).copied().unwrap_or(0);
        y += b.get(i).copied().unwrap_or(0);
        x >= y
    })
}

#[test]
fn shape_dominates_content_dominates_ctype() {
    for n in 1..=7 {
        for s in enumerate_all_syt(n) {
            let content = label_counts(cocharge_tableau(&s).cells().map(|c| c.2));
            assert!(dominates(s.shape().parts(), &content), "{:?}", s.rows());
            assert!(
                dominates(&content, ctype_of_tableau(&s).parts()),
                "{:?}",
                s.rows()
            );
        }
    }
}

#[test]
fn catabolizability_grows_by_one_box() {
    for n in 1..=6 {
        let syt = enumerate_all_syt(n);
        for k in 0..n {
            for lambda in partitions_of(k) {
                let plus = lambda.with_extra_row_of_one();
                for s in &syt {
                    assert_eq!(
                        in_sigma_lambda(s, &lambda),
                        in_sigma_lambda(s, &plus),
                        "{lambda} {:?}",
                        s.rows()
                    );
                }
            }
        }
    }
}

#[test]
fn maj_and_cocharge_equidistribute_with_descents() {
    for n in 1..=7 {
        for shape in partitions_of(n) {
            let mut by_maj: BTreeMap<(u32, usize), usize> = BTreeMap::new();
            let mut by_cc: BTreeMap<(u32, usize), usize> = BTreeMap::new();
            for s in enumerate_syt(&shape) {
                let w = Permutation::new(s.reading_word()).unwrap();
                *by_maj.entry((s.maj(), s.des())).or_default() += 1;
                *by_cc.entry((cocharge_value(&w), s.des())).or_default() += 1;
            }
            assert_eq!(by_maj, by_cc, "{shape}");
        }
    }
}

#[test]
fn reversal_transposes_insertion_tableau() {
    for n in 1..=6 {
        for w in all_permutations(n) {
            assert_eq!(rsk(&w.reversed()).0, rsk(&w).0.transpose());
        }
    }
}

#[test]
fn kostka_ignores_the_order_of_weight_parts() {
    for n in 1..=7 {
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                let k = kostka(&lambda, mu.parts()).unwrap();
                let mut rev = mu.parts().to_vec();
                rev.reverse();
                assert_eq!(kostka(&lambda, &rev).unwrap(), k);
                if rev.len() > 2 {
                    rev.swap(0, 1);
                    assert_eq!(kostka(&lambda, &rev).unwrap(), k);
                }
            }
        }
    }
}

#[test]
fn e_pairing_matrix_is_invertible() {
    for n in 1..=6 {
        let shapes = partitions_of(n);
        let mut e = Echelon::new(shapes.len());
        for gamma in &shapes {
            let row: Vec<BigInt> = shapes
                .iter()
                .map(|l| BigInt::from(kostka(&l.conjugate(), gamma.parts()).unwrap()))
                .collect();
            e.insert(row);
        }
        assert!(e.is_full(), "n = {n}");
    }
}

#[test]
fn ascents_of_words_match_descents_of_permutations() {
    for p in Params::grid(5, 3) {
        let n = p.n;
        for a in enumerate_d_nls(&p) {
            let (w, _) = word_to_pair(&a, &p).unwrap();
            let w = w.letters();
            for j in 1..n {
                assert_eq!(a[n - j - 1] < a[n - j], w[j - 1] > w[j], "{p} {a:?}");
            }
        }
    }
}

#[test]
fn swapping_a_descent_stays_in_the_set() {
    for p in Params::grid(5, 3) {
        let set: BTreeSet<Vec<u32>> = enumerate_d_nls(&p).into_iter().collect();
        for a in &set {
            for j in 0..a.len().saturating_sub(1) {
                if a[j] > a[j + 1] {
                    let mut b = a.clone();
                    b.swap(j, j + 1);
                    assert!(set.contains(&b), "{p} {a:?} at {j}");
                }
            }
        }
    }
}

#[test]
fn sigma_specializes() {
    for k in 1..=5 {
        for lambda in partitions_of(k) {
            let p = Params::new(k, lambda.clone(), lambda.len()).unwrap();
            for pair in enumerate_sigma(&p) {
                assert!(pair.mu.is_empty());
                assert!(in_sigma_lambda(&pair.tableau, &lambda));
            }
        }
    }
    for n in 1..=5 {
        for k in 1..=n {
            let p = Params::new(n, part(vec![1; k]), k).unwrap();
            for pair in enumerate_sigma(&p) {
                assert!(pair.tableau.des() < k);
                assert!(pair.mu.len() <= n - k && pair.mu.get(0) < k - pair.tableau.des());
            }
            assert_eq!(enumerate_pairs(&p).len(), enumerate_d_nls(&p).len());
        }
    }
}

#[test]
fn higher_specht_degree_is_cocharge() {
    for n in 1..=6 {
        for shape in partitions_of(n) {
            let ts = enumerate_syt(&shape);
            for s in &ts {
                let cc = cocharge_value(&Permutation::new(s.reading_word()).unwrap());
                for t in ts.iter().take(3) {
                    let f = higher_specht(s, t).unwrap().poly;
                    assert!(f.is_homogeneous());
                    assert_eq!(f.degree(), Some(cc));
                }
            }
        }
    }
}

fn small_poly(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, n), -3i64..=3), 0..5).prop_map(
        move |terms| Polynomial::from_terms(n, terms.into_iter().map(|(e, c)| (e, rat_from(c)))),
    )
}

fn permutation(max_n: usize) -> impl Strategy<Value = Vec<u32>> {
    (1..=max_n).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #[test]
    fn polarization_composes(f in small_poly(3), g in small_poly(3), h in small_poly(3)) {
        let h = &h * &Polynomial::monomial(vec![2, 2, 2], rat_from(1));
        prop_assert_eq!(polarization(&(&f * &g), &h), polarization(&f, &polarization(&g, &h)));
    }

    #[test]
    fn knuth_moves_preserve_cocharge(w in permutation(9), i in 0usize..8) {
        let n = w.len();
        prop_assume!(n >= 3 && i + 2 < n);
        let (x, y, z) = (w[i], w[i + 1], w[i + 2]);
        let mut v = w.clone();
        if y < x && x < z || z < x && x < y {
            v.swap(i + 1, i + 2);
        } else if x < z && z < y || y < z && z < x {
            v.swap(i, i + 1);
        } else {
            return Ok(());
        }
        let (a, b) = (Permutation::new(w).unwrap(), Permutation::new(v).unwrap());
        prop_assert_eq!(rsk(&a).0, rsk(&b).0);
        prop_assert_eq!(cocharge_value(&a), cocharge_value(&b));
        prop_assert_eq!(ctype(&a).0, ctype(&b).0);
    }

    #[test]
    fn reversal_transposes_for_larger_n(w in permutation(10)) {
        let w = Permutation::new(w).unwrap();
        prop_assert_eq!(rsk(&w.reversed()).0, rsk(&w).0.transpose());
    }

    #[test]
    fn cocharge_round_trip(w in permutation(10)) {
        let w = Permutation::new(w).unwrap();
        let z = cocharge_word(&w);
        prop_assert!(is_cocharge_word(&z));
        prop_assert_eq!(cocharge_word(&permutation_from_cocharge_word(&z).unwrap()), z);
    }
}
