//! Word statistics against brute-force inversion counts.

use std::collections::BTreeMap;

use macllt::combinat::{enumerate_words, partitions, Partition, Word};
use macllt::mahonian::{
    composite_check, equidist_check, maj_k, maj_prime, StatDistribution, Statistic,
};
use proptest::prelude::*;

fn inv(w: &[u32]) -> i64 {
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            n += (w[i] > w[j]) as i64;
        }
    }
    n
}

/// Coefficients of the q-multinomial, as a product of q-integers over
/// q-integers computed by polynomial long division.
fn q_multinomial(parts: &[u32]) -> Vec<i64> {
    fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }
    fn div(mut a: Vec<i64>, b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + 1 - b.len()];
        for i in (0..out.len()).rev() {
            let c = a[i + b.len() - 1] / b[b.len() - 1];
            out[i] = c;
            for (j, y) in b.iter().enumerate() {
                a[i + j] -= c * y;
            }
        }
        assert!(a.iter().all(|&x| x == 0));
        out
    }
    let q_int = |m: u32| vec![1i64; m as usize];
    let n: u32 = parts.iter().sum();
    let mut num = vec![1i64];
    for m in 1..=n {
        num = mul(&num, &q_int(m));
    }
    for &p in parts {
        for m in 1..=p {
            num = div(num, &q_int(m));
        }
    }
    num
}

fn as_vec(counts: &BTreeMap<i64, u64>) -> Vec<i64> {
    let top = counts.keys().max().copied().unwrap_or(0);
    (0..=top)
        .map(|e| *counts.get(&e).unwrap_or(&0) as i64)
        .collect()
}

#[test]
fn inversions_follow_the_q_multinomial() {
    for n in 1..=6 {
        for mu in partitions(n) {
            let mut counts = BTreeMap::new();
            for w in enumerate_words(&mu) {
                *counts.entry(inv(w.letters())).or_insert(0u64) += 1;
            }
            assert_eq!(as_vec(&counts), q_multinomial(mu.parts()), "{mu}");
        }
    }
}

#[test]
fn maj_one_is_the_major_index() {
    let w = Word::new(vec![2, 1, 3, 1, 2]);
    // descents at 1 and 3
    assert_eq!(maj_k(&w, 1), 4);
    // maj_k with k at least the length is the inversion number
    assert_eq!(maj_k(&w, 5), inv(w.letters()));
}

#[test]
fn maj_prime_counts_blocks() {
    let w = Word::new(vec![3, 1, 2, 1, 1, 2]);
    // pairs (i, i + 2) with w_i > w_{i+2}: i = 1 (3 > 2), i = 2 (1 > 1 fails), i = 3 (2 > 1)
    assert_eq!(maj_prime(&w, 2), 1 + 2);
}

#[test]
fn every_maj_k_is_mahonian() {
    for n in 1..=6 {
        for mu in partitions(n) {
            for k in 1..=n {
                let check = equidist_check(&mu, k);
                assert!(check.holds(), "mu={mu} k={k}");
                assert_eq!(
                    as_vec(&check.distribution.counts),
                    q_multinomial(mu.parts())
                );
            }
        }
    }
}

#[test]
fn composite_statistic_for_rectangular_lengths() {
    for (k, l) in [(1, 2), (2, 2), (2, 3), (3, 2)] {
        for mu in partitions(k * l) {
            assert!(composite_check(&mu, k, l).holds(), "mu={mu} k={k} l={l}");
        }
    }
}

#[test]
fn distribution_totals_are_multinomials() {
    let mu = Partition::new(vec![3, 2, 1]).unwrap();
    let d = StatDistribution::compute(&mu, Statistic::MajPrime { l: 2 });
    assert_eq!(d.total(), 60);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn maj_k_stays_between_zero_and_inv_bound(letters in prop::collection::vec(1u32..=3, 1..=8), k in 1usize..=8) {
        let w = Word::new(letters);
        let n = w.len() as i64;
        let m = maj_k(&w, k);
        prop_assert!(m >= 0);
        prop_assert!(m <= n * (n - 1) / 2);
    }
}
