//! Mahonian statistics `maj_k` and `maj'_l` on words with fixed content.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::partition::Partition;
use crate::combinat::word::{enumerate_words_starting, Word};
use crate::polyring::{q_multinomial, LaurentPoly};

/// `#{(i, j) in Inv : 0 < j - i < k} + sum_i i [(i, i + k) in Inv]`.
pub fn maj_k(w: &Word, k: usize) -> i64 {
    assert!(k >= 1, "maj_k needs k >= 1");
    let n = w.len();
    let mut total = 0i64;
    for i in 1..=n {
        for j in i + 1..(i + k).min(n + 1) {
            total += w.is_inversion(i, j) as i64;
        }
        if i + k <= n && w.is_inversion(i, i + k) {
            total += i as i64;
        }
    }
    total
}

/// `sum_i ceil(i / l) [(i, i + l) in Inv]`.
pub fn maj_prime(w: &Word, l: usize) -> i64 {
    assert!(l >= 1, "maj_prime needs l >= 1");
    (1..=w.len().saturating_sub(l))
        .filter(|&i| w.is_inversion(i, i + l))
        .map(|i| i.div_ceil(l) as i64)
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "stat", rename_all = "snake_case")]
pub enum Statistic {
    MajK {
        k: usize,
    },
    MajPrime {
        l: usize,
    },
    /// `k maj_l - (n - 1) maj'_l`
    Composite {
        k: usize,
        l: usize,
    },
}

impl Statistic {
    pub fn eval(&self, w: &Word) -> i64 {
        match *self {
            Statistic::MajK { k } => maj_k(w, k),
            Statistic::MajPrime { l } => maj_prime(w, l),
            Statistic::Composite { k, l } => {
                k as i64 * maj_k(w, l) - (w.len() as i64 - 1) * maj_prime(w, l)
            }
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::MajK { k } => write!(f, "maj_{k}"),
            Statistic::MajPrime { l } => write!(f, "maj'_{l}"),
            Statistic::Composite { k, l } => write!(f, "{k} maj_{l} - (n-1) maj'_{l}"),
        }
    }
}

/// Value counts of a statistic over all words of one content.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatDistribution {
    pub content: Partition,
    pub statistic: Statistic,
    pub counts: BTreeMap<i64, u64>,
}

impl StatDistribution {
    /// Enumerates the words in parallel, split by first letter.
    pub fn compute(content: &Partition, statistic: Statistic) -> Self {
        let letters = content.len() as u32;
        let counts = (1..=letters.max(1))
            .into_par_iter()
            .map(|first| {
                let mut c = BTreeMap::new();
                for w in enumerate_words_starting(content, first) {
                    *c.entry(statistic.eval(&w)).or_insert(0u64) += 1;
                }
                c
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (v, n) in b {
                    *a.entry(v).or_insert(0) += n;
                }
                a
            });
        StatDistribution {
            content: content.clone(),
            statistic,
            counts,
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn generating_poly(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&v, &n) in &self.counts {
            p = p + LaurentPoly::q_pow(v) * LaurentPoly::constant(n);
        }
        p
    }
}

/// A distribution next to the q-multinomial it should match.
#[derive(Clone, Debug, PartialEq)]
pub struct StatCheck {
    pub distribution: StatDistribution,
    pub expected: LaurentPoly,
}

impl StatCheck {
    fn new(distribution: StatDistribution) -> Self {
        let expected = q_multinomial(distribution.content.parts());
        StatCheck {
            distribution,
            expected,
        }
    }

    pub fn holds(&self) -> bool {
        self.distribution.generating_poly() == self.expected
    }
}

/// `sum_w q^{maj_k(w)}` against `[n]_q! / ([mu_1]_q! ...)`.
pub fn equidist_check(mu: &Partition, k: usize) -> StatCheck {
    StatCheck::new(StatDistribution::compute(mu, Statistic::MajK { k }))
}

/// `sum_w q^{k maj_l(w) - (n-1) maj'_l(w)}` against the same q-multinomial.
pub fn composite_check(mu: &Partition, k: usize, l: usize) -> StatCheck {
    StatCheck::new(StatDistribution::compute(mu, Statistic::Composite { k, l }))
}

/// One word with its statistics, for CSV export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatRow {
    pub word: String,
    pub maj_k: i64,
    pub maj_prime: i64,
    pub composite: i64,
}

/// Rows for every word of content `mu`, in lexicographic order.
pub fn stat_rows(mu: &Partition, k: usize, l: usize) -> Vec<StatRow> {
    (1..=mu.len().max(1) as u32)
        .flat_map(|first| enumerate_words_starting(mu, first))
        .map(|w| StatRow {
            word: w.to_string(),
            maj_k: maj_k(&w, l),
            maj_prime: maj_prime(&w, l),
            composite: Statistic::Composite { k, l }.eval(&w),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::word::enumerate_words;

    fn w(s: &str) -> Word {
        Word::new(s.chars().map(|c| c.to_digit(10).unwrap()).collect())
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn statistic_examples() {
        assert_eq!(maj_k(&w("3142"), 1), 4);
        assert_eq!(maj_k(&w("211"), 2), 2);
        assert_eq!(maj_k(&w("1111"), 3), 0);
        assert_eq!(maj_prime(&w("211"), 2), 1);
        assert_eq!(maj_prime(&w("1234"), 2), 0);
    }

    #[test]
    fn maj_prime_one_is_maj() {
        for mu in [p("1,1,1,1,1,1"), p("2,2,1"), p("3,2,1")] {
            for word in enumerate_words(&mu) {
                assert_eq!(maj_prime(&word, 1), maj_k(&word, 1), "{word}");
            }
        }
    }

    #[test]
    fn maj_k_large_k_counts_inversions() {
        for word in enumerate_words(&p("2,2,1,1")) {
            let inv = word.inv_set().len() as i64;
            for k in word.len()..word.len() + 2 {
                assert_eq!(maj_k(&word, k), inv);
            }
        }
    }

    #[test]
    fn equidistribution_examples() {
        let c = equidist_check(&p("2,1"), 2);
        assert_eq!(
            c.distribution.counts,
            BTreeMap::from([(0, 1), (1, 1), (2, 1)])
        );
        assert!(c.holds());
        assert!(equidist_check(&p("1,1,1,1,1"), 1).holds());
        let one = equidist_check(&p("4"), 3);
        assert_eq!(one.distribution.generating_poly(), LaurentPoly::one());
    }

    #[test]
    fn composite_examples() {
        assert!(composite_check(&p("1,1"), 2, 1).holds());
        let c = composite_check(&p("1,1"), 1, 2);
        assert_eq!(c.distribution.counts, BTreeMap::from([(0, 1), (1, 1)]));
        assert!(c.holds());
        let c = composite_check(&p("1,1,1,1"), 2, 2);
        assert_eq!(c.distribution.total(), 24);
    }

    #[test]
    fn rows_cover_every_word() {
        let rows = stat_rows(&p("2,1"), 1, 3);
        let words: Vec<&str> = rows.iter().map(|r| r.word.as_str()).collect();
        assert_eq!(words, vec!["112", "121", "211"]);
        assert_eq!(rows[2].maj_k, 2);
    }
}
