//! Semistandard fillings of shape tuples, the LLT inversion count, and
//! standard Young tableaux with their major index.

use crate::combinat::partition::Partition;
use crate::combinat::shape::ShapeTuple;
use crate::polyring::LaurentPoly;

/// A filling of a tuple: one entry vector per component, aligned with
/// `SkewShape::cells()`.
pub type Filling = Vec<Vec<u32>>;

#[derive(Clone, Copy, Debug)]
enum Rel {
    /// value must be >= the other cell's value
    Geq,
    /// value must be <= the other cell's value
    Leq,
    Gt,
    Lt,
}

/// Lexicographic stream of all semistandard fillings with entries in
/// `1..=max_entry`. Cells are visited component by component in each
/// component's reading order.
pub struct Fillings {
    slots: Vec<(usize, usize)>,
    constraints: Vec<Vec<(usize, Rel)>>,
    max_entry: u32,
    values: Vec<u32>,
    started: bool,
    done: bool,
    shape_lens: Vec<usize>,
}

pub fn enumerate_fillings(t: &ShapeTuple, max_entry: u32) -> Fillings {
    let mut slots = Vec::new();
    let mut constraints = Vec::new();
    let mut base = 0;
    for (k, s) in t.components().iter().enumerate() {
        for i in 0..s.len() {
            let mut cs = Vec::new();
            let mut rel = |other: Option<usize>, r: Rel| {
                if let Some(o) = other.filter(|&o| o < i) {
                    cs.push((base + o, r));
                }
            };
            rel(s.left_of(i), Rel::Geq);
            rel(s.right_of(i), Rel::Leq);
            rel(s.below(i), Rel::Gt);
            rel(s.above(i), Rel::Lt);
            slots.push((k, i));
            constraints.push(cs);
        }
        base += s.len();
    }
    let n = slots.len();
    Fillings {
        slots,
        constraints,
        max_entry,
        values: vec![0; n],
        started: false,
        done: max_entry == 0 && n > 0,
        shape_lens: t.components().iter().map(|s| s.len()).collect(),
    }
}

impl Fillings {
    fn ok(&self, pos: usize, v: u32) -> bool {
        self.constraints[pos].iter().all(|&(o, r)| {
            let w = self.values[o];
            match r {
                Rel::Geq => v >= w,
                Rel::Leq => v <= w,
                Rel::Gt => v > w,
                Rel::Lt => v < w,
            }
        })
    }

    // smallest admissible value at `pos` that is >= `from`
    fn first_from(&self, pos: usize, from: u32) -> Option<u32> {
        (from..=self.max_entry).find(|&v| self.ok(pos, v))
    }

    // fill positions pos.. with minimal values, backtracking as needed
    fn descend(&mut self, mut pos: usize, mut from: u32) -> bool {
        let n = self.slots.len();
        loop {
            if pos == n {
                return true;
            }
            match self.first_from(pos, from) {
                Some(v) => {
                    self.values[pos] = v;
                    pos += 1;
                    from = 1;
                }
                None => {
                    if pos == 0 {
                        return false;
                    }
                    pos -= 1;
                    from = self.values[pos] + 1;
                }
            }
        }
    }

    fn current(&self) -> Filling {
        let mut out: Filling = self.shape_lens.iter().map(|&l| vec![0; l]).collect();
        for (p, &(k, i)) in self.slots.iter().enumerate() {
            out[k][i] = self.values[p];
        }
        out
    }
}

impl Iterator for Fillings {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.done {
            return None;
        }
        let n = self.slots.len();
        let found = if !self.started {
            self.started = true;
            self.descend(0, 1)
        } else if n == 0 {
            false
        } else {
            let last = n - 1;
            let from = self.values[last] + 1;
            self.descend(last, from)
        };
        if found {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// Number of inversions: pairs `u` in component `i`, `v` in component `j`
/// with `T(u) > T(v)` and either `i < j`, `c(u) = c(v)` or `i > j`, `c(u) = c(v) + 1`.
pub fn inv_count(t: &ShapeTuple, filling: &Filling) -> usize {
    let comps = t.components();
    let mut inv = 0;
    for (i, si) in comps.iter().enumerate() {
        for (j, sj) in comps.iter().enumerate() {
            if i == j {
                continue;
            }
            for (a, u) in si.cells().iter().enumerate() {
                for (b, v) in sj.cells().iter().enumerate() {
                    if filling[i][a] <= filling[j][b] {
                        continue;
                    }
                    let hit = (i < j && u.content() == v.content())
                        || (i > j && u.content() == v.content() + 1);
                    if hit {
                        inv += 1;
                    }
                }
            }
        }
    }
    inv
}

/// Standard Young tableaux of shape `p`, each given as the row (1-based) of
/// entries `1..=n`.
pub fn standard_tableaux(p: &Partition) -> Vec<Vec<u32>> {
    fn rec(rows: &mut Vec<u32>, target: &[u32], word: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rows == target {
            out.push(word.clone());
            return;
        }
        for r in 0..target.len() {
            let can = rows[r] < target[r] && (r == 0 || rows[r - 1] > rows[r]);
            if can {
                rows[r] += 1;
                word.push(r as u32 + 1);
                rec(rows, target, word, out);
                word.pop();
                rows[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![0; p.len()];
    rec(&mut rows, p.parts(), &mut Vec::new(), &mut out);
    out
}

/// Sum of `i` over descents `i`: entry `i + 1` sits in a higher row than `i`.
pub fn syt_maj(rows_of_entries: &[u32]) -> u32 {
    rows_of_entries
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] > w[0])
        .map(|(i, _)| i as u32 + 1)
        .sum()
}

/// `sum_{T in SYT(p)} q^{maj(T)}`.
pub fn syt_maj_gf(p: &Partition) -> LaurentPoly {
    let mut counts: Vec<u64> = Vec::new();
    for t in standard_tableaux(p) {
        let m = syt_maj(&t) as usize;
        if counts.len() <= m {
            counts.resize(m + 1, 0);
        }
        counts[m] += 1;
    }
    LaurentPoly::from_q_coeffs(0, &counts)
}
