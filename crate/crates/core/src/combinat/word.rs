//! Words with prescribed content and their inversion sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::combinat::partition::Partition;

/// A word over the positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
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

    /// Sorted multiplicities of the letters.
    pub fn content(&self) -> Partition {
        let max = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; max + 1];
        for &l in &self.0 {
            counts[l as usize] += 1;
        }
        Partition::from_unsorted(counts)
    }

    /// `{(i, j) : i < j, w_i > w_j}` with 1-based positions.
    pub fn inv_set(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    out.insert((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Whether positions `(i, j)` (1-based, `i < j`) form an inversion.
    pub fn is_inversion(&self, i: usize, j: usize) -> bool {
        i >= 1 && j <= self.0.len() && i < j && self.0[i - 1] > self.0[j - 1]
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&l| l > 9) {
            ","
        } else {
            ""
        };
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&s.join(sep))
    }
}

/// Lexicographic stream of rearrangements of `1^{mu_1} 2^{mu_2} ...`.
pub struct Words {
    next: Option<Vec<u32>>,
}

pub fn enumerate_words(content: &Partition) -> Words {
    let letters: Vec<u32> = content
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i as u32 + 1, m as usize))
        .collect();
    Words {
        next: Some(letters),
    }
}

/// Words of content `content` whose first letter is `first`.
pub fn enumerate_words_starting(content: &Partition, first: u32) -> impl Iterator<Item = Word> {
    let mut letters: Vec<u32> = content
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i as u32 + 1, m as usize))
        .collect();
    let start = letters.iter().position(|&l| l == first);
    let tail = start.map(|p| {
        letters.remove(p);
        letters
    });
    tail.into_iter().flat_map(move |rest| {
        Words { next: Some(rest) }.map(move |w| {
            let mut v = vec![first];
            v.extend_from_slice(w.letters());
            Word(v)
        })
    })
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Word(cur))
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn words_of_content() {
        let ws: Vec<String> = enumerate_words(&p("2,1")).map(|w| w.to_string()).collect();
        assert_eq!(ws, vec!["112", "121", "211"]);
        assert_eq!(enumerate_words(&Partition::empty()).count(), 1);
    }

    #[test]
    fn counts_are_multinomial() {
        for n in 0..=7 {
            for mu in crate::combinat::partition::partitions(n) {
                assert_eq!(enumerate_words(&mu).count() as u128, mu.multinomial());
                for w in enumerate_words(&mu) {
                    assert_eq!(w.content(), mu);
                }
            }
        }
    }

    #[test]
    fn split_by_first_letter() {
        let mu = p("3,2,2");
        let total: usize = (1..=3)
            .map(|a| enumerate_words_starting(&mu, a).count())
            .sum();
        assert_eq!(total, 210);
        assert_eq!(enumerate_words_starting(&mu, 4).count(), 0);
    }

    #[test]
    fn inversion_sets() {
        assert_eq!(
            Word::new(vec![2, 1, 1]).inv_set(),
            BTreeSet::from([(1, 2), (1, 3)])
        );
        assert!(Word::new(vec![1, 1, 1]).inv_set().is_empty());
    }
}
