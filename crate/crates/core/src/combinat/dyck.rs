//! Dyck paths and unicellular cell tuples.
//!
//! Two single cells in components `b < a` attack each other when
//! `content(a)` is `content(b)` or `content(b) + 1`. Listing the cells in
//! diagonal order (content ascending, later components first among equal
//! contents) turns every attack set into an interval `{i+1, ..., h_i}`,
//! and `h` is the height vector of a Dyck path.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use crate::combinat::shape::{ShapeTuple, SkewShape};
use crate::error::{Error, Result};

/// Height vector `h_1 <= ... <= h_n` with `i <= h_i <= n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath(Vec<usize>);

impl DyckPath {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        let n = heights.len();
        let ok = heights.iter().enumerate().all(|(i, &h)| h > i && h <= n)
            && heights.windows(2).all(|w| w[0] <= w[1]);
        if ok {
            Ok(DyckPath(heights))
        } else {
            Err(Error::InvalidDyck(heights))
        }
    }

    pub fn heights(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every Dyck path of size `n`.
    pub fn all(n: usize) -> Vec<DyckPath> {
        fn rec(i: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<DyckPath>) {
            if i == n {
                out.push(DyckPath(cur.clone()));
                return;
            }
            let lo = cur.last().copied().unwrap_or(0).max(i + 1);
            for h in lo..=n {
                cur.push(h);
                rec(i + 1, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let heights = s
            .split(',')
            .filter(|x| !x.trim().is_empty())
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad height `{x}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(heights)
    }
}

/// A tuple of single cells, listed by component; entry `i` is the content of component `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnicellularTuple(Vec<i64>);

impl UnicellularTuple {
    pub fn new(contents: Vec<i64>) -> Self {
        UnicellularTuple(contents)
    }

    pub fn from_shapes(t: &ShapeTuple) -> Result<Self> {
        t.components()
            .iter()
            .enumerate()
            .map(|(i, s)| {
                if s.len() == 1 {
                    Ok(s.cells()[0].content())
                } else {
                    Err(Error::NotUnicellular(i))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(UnicellularTuple)
    }

    pub fn contents(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_shapes(&self) -> ShapeTuple {
        ShapeTuple::new(self.0.iter().map(|&c| SkewShape::single(c)).collect())
    }

    /// Components `b < a` attack iff `content(a) - content(b)` is 0 or 1.
    pub fn attacks(&self, b: usize, a: usize) -> bool {
        let (b, a) = if b < a { (b, a) } else { (a, b) };
        let d = self.0[a] - self.0[b];
        d == 0 || d == 1
    }

    /// Component indices in diagonal order.
    pub fn diagonal_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| (self.0[i], Reverse(i)));
        idx
    }

    /// Attack pairs as 1-based diagonal indices `(i, j)`, `i < j`.
    pub fn attack_pairs(&self) -> Vec<(usize, usize)> {
        let order = self.diagonal_order();
        let mut pairs = Vec::new();
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                if self.attacks(order[i], order[j]) {
                    pairs.push((i + 1, j + 1));
                }
            }
        }
        pairs
    }
}

/// Realize a Dyck path as single cells.
///
/// Diagonal indices split greedily into maximal blocks `[s, e]` with
/// `min(h_s..h_e) >= e`; block `m` gets content `m - 1`. Components are
/// ordered by a stable topological sort of: later diagonal index first
/// within a block, and for `i` in block `m`, `j` in block `m + 1`,
/// `i` before `j` exactly when `j <= h_i`.
pub fn cells_from_dyck(d: &DyckPath) -> UnicellularTuple {
    let h = d.heights();
    let n = h.len();
    let mut content = vec![0i64; n];
    let mut block = vec![0usize; n];
    let mut s = 0;
    let mut m = 0;
    while s < n {
        let mut e = s;
        let mut lo = h[s];
        while e + 1 < n && lo.min(h[e + 1]) >= e + 2 {
            e += 1;
            lo = lo.min(h[e]);
        }
        for i in s..=e {
            content[i] = m as i64;
            block[i] = m;
        }
        m += 1;
        s = e + 1;
    }

    // edge u -> v: u comes first in component order
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    let mut edge = |u: usize, v: usize, succ: &mut Vec<Vec<usize>>| {
        succ[u].push(v);
        indeg[v] += 1;
    };
    for i in 0..n {
        for j in i + 1..n {
            if block[i] == block[j] {
                edge(j, i, &mut succ);
            } else if block[j] == block[i] + 1 {
                if j < h[i] {
                    edge(i, j, &mut succ);
                } else {
                    edge(j, i, &mut succ);
                }
            }
        }
    }
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&i| indeg[i] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(u)) = heap.pop() {
        order.push(u);
        for &v in &succ[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                heap.push(Reverse(v));
            }
        }
    }
    debug_assert_eq!(order.len(), n, "attack constraints are acyclic");
    UnicellularTuple(order.into_iter().map(|i| content[i]).collect())
}

/// Read the Dyck path back off a unicellular tuple.
pub fn dyck_from_cells(t: &UnicellularTuple) -> Result<DyckPath> {
    let order = t.diagonal_order();
    let n = order.len();
    let mut heights = Vec::with_capacity(n);
    for i in 0..n {
        let attacked: Vec<usize> = (i + 1..n)
            .filter(|&j| t.attacks(order[i], order[j]))
            .collect();
        let h = attacked.last().map(|&j| j + 1).unwrap_or(i + 1);
        if attacked.len() != h - (i + 1) {
            return Err(Error::NotDyckRepresentable(format!(
                "attack set of diagonal index {} is not an interval",
                i + 1
            )));
        }
        heights.push(h);
    }
    DyckPath::new(heights).map_err(|e| Error::NotDyckRepresentable(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(DyckPath::new(vec![2, 1]).is_err());
        assert!(DyckPath::new(vec![1, 3]).is_err());
        assert!(DyckPath::new(vec![0]).is_err());
        assert!(DyckPath::new(vec![]).is_ok());
        // Catalan numbers
        let counts: Vec<usize> = (0..=6).map(|n| DyckPath::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn figure_path() {
        let t = cells_from_dyck(&dp("2,4,5,5,5"));
        let mut contents = t.contents().to_vec();
        contents.sort();
        assert_eq!(contents, vec![0, 0, 1, 1, 1]);
        assert_eq!(
            t.attack_pairs(),
            vec![(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]
        );
        assert_eq!(dyck_from_cells(&t).unwrap(), dp("2,4,5,5,5"));
    }

    #[test]
    fn small_paths() {
        let t = cells_from_dyck(&dp("1,2"));
        let mut c = t.contents().to_vec();
        c.sort();
        assert_eq!(c, vec![0, 1]);
        assert!(t.attack_pairs().is_empty());

        let t = cells_from_dyck(&dp("2,2"));
        assert_eq!(t.contents(), &[0, 0]);
        assert_eq!(t.attack_pairs(), vec![(1, 2)]);
    }

    #[test]
    fn inverse_examples() {
        let far = UnicellularTuple::new(vec![0, 5, 10, 15]);
        assert_eq!(dyck_from_cells(&far).unwrap(), dp("1,2,3,4"));
        let same = UnicellularTuple::new(vec![3; 4]);
        assert_eq!(dyck_from_cells(&same).unwrap(), dp("4,4,4,4"));
    }

    #[test]
    fn round_trip_all_paths() {
        for n in 0..=8 {
            for d in DyckPath::all(n) {
                let t = cells_from_dyck(&d);
                assert_eq!(dyck_from_cells(&t).unwrap(), d, "path {d}");
            }
        }
    }

    #[test]
    fn attack_intervals_match_heights() {
        for d in DyckPath::all(6) {
            let t = cells_from_dyck(&d);
            let pairs = t.attack_pairs();
            for (i, &h) in d.heights().iter().enumerate() {
                let js: Vec<usize> = pairs.iter().filter(|p| p.0 == i + 1).map(|p| p.1).collect();
                assert_eq!(js, (i + 2..=h).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn not_unicellular() {
        let t: ShapeTuple = "C1;H[1]".parse().unwrap();
        assert_eq!(
            UnicellularTuple::from_shapes(&t),
            Err(Error::NotUnicellular(1))
        );
    }
}
