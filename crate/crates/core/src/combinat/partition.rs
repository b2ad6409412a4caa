use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, drawn in French convention: row 1 is the bottom row.
///
/// The derived `Ord` is lexicographic on the parts, which refines dominance
/// order among partitions of the same size.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

/// A cell `(row, col)` of a diagram; both coordinates start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }

    /// `row - col`.
    pub fn content(&self) -> i64 {
        self.row as i64 - self.col as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CellStats {
    pub arm: u32,
    pub coarm: u32,
    pub leg: u32,
    pub coleg: u32,
    pub maj: u32,
    pub content: i64,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `i` (1-based), zero outside.
    pub fn row_len(&self, i: u32) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i as usize - 1).copied().unwrap_or(0)
    }

    /// Height of column `j` (1-based).
    pub fn col_len(&self, j: u32) -> u32 {
        self.0.iter().take_while(|&&p| p >= j).count() as u32
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.row_len(c.row)
    }

    /// Cells row by row, left to right, bottom row first.
    pub fn cells(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i as u32 + 1, j)))
            .collect()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.col_len(j)).collect())
    }

    /// Multiply every part by `k`.
    pub fn stretch(&self, k: u32) -> Partition {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }

    /// `self <= other` in dominance order.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..len {
            a += self.0.get(i).copied().unwrap_or(0) as u64;
            b += other.0.get(i).copied().unwrap_or(0) as u64;
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn cell_stats(&self, u: Cell) -> Result<CellStats> {
        if !self.contains(u) {
            return Err(Error::OutOfShape {
                row: u.row,
                col: u.col,
            });
        }
        let arm = self.row_len(u.row) - u.col;
        let coarm = u.col - 1;
        let leg = self.col_len(u.col) - u.row;
        let coleg = u.row - 1;
        Ok(CellStats {
            arm,
            coarm,
            leg,
            coleg,
            maj: leg + 1,
            content: u.content(),
        })
    }

    /// Cells that can be removed leaving a partition.
    pub fn corners(&self) -> Vec<Cell> {
        (0..self.len())
            .filter(|&i| i + 1 == self.len() || self.0[i] > self.0[i + 1])
            .map(|i| Cell::new(i as u32 + 1, self.0[i]))
            .collect()
    }

    /// Number of distinct rearrangements of the parts as a word: `n! / prod(m_i!)`.
    pub fn multinomial(&self) -> u128 {
        let mut acc: u128 = 1;
        let mut total: u128 = 0;
        for &m in &self.0 {
            for i in 1..=m as u128 {
                total += 1;
                acc = acc * total / i;
            }
        }
        acc
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part `{x}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, lexicographically decreasing: `(n), (n-1,1), ...`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// Parse a cell set written `(i,j);(i,j)`.
pub fn parse_cells(s: &str) -> Result<Vec<Cell>> {
    let mut cells = Vec::new();
    for chunk in s.split(';').map(str::trim).filter(|c| !c.is_empty()) {
        let inner = chunk
            .strip_prefix('(')
            .and_then(|c| c.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad cell `{chunk}`")))?;
        let (i, j) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("bad cell `{chunk}`")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<u32>()
                .ok()
                .filter(|&v| v >= 1)
                .ok_or_else(|| Error::Parse(format!("bad coordinate `{x}`")))
        };
        cells.push(Cell::new(parse(i)?, parse(j)?));
    }
    Ok(cells)
}

pub fn format_cells(cells: &[Cell]) -> String {
    cells
        .iter()
        .map(Cell::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Transpose by explicitly flipping the cell set.
    fn conjugate_by_cells(l: &Partition) -> Partition {
        let mut rows = std::collections::BTreeMap::new();
        for c in l.cells() {
            *rows.entry(c.col).or_insert(0u32) += 1;
        }
        Partition::from_unsorted(rows.into_values().collect())
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("5,4,3,2").conjugate(), p("4,4,3,2,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("2,1").conjugate(), p("2,1"));
    }

    #[test]
    fn conjugate_is_involution_and_matches_cells() {
        for n in 0..=10 {
            for l in partitions(n) {
                assert_eq!(l.conjugate().conjugate(), l);
                assert_eq!(l.conjugate(), conjugate_by_cells(&l));
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(p("2,2").dominance_leq(&p("3,1")).unwrap());
        assert!(!p("3,1").dominance_leq(&p("2,2")).unwrap());
        for l in partitions(6) {
            assert!(l.dominance_leq(&l).unwrap());
        }
        assert_eq!(
            p("2,1").dominance_leq(&p("2")),
            Err(Error::SizeMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn lex_order_extends_dominance() {
        let ps = partitions(7);
        for a in &ps {
            for b in &ps {
                if a.dominance_leq(b).unwrap() {
                    assert!(a <= b);
                }
            }
        }
    }

    #[test]
    fn cell_stats_examples() {
        // the drawn diagram has rows 5,4,3,1; the gray cell has one cell above and one below
        let s = p("5,4,3,1").cell_stats(Cell::new(2, 2)).unwrap();
        assert_eq!((s.arm, s.coarm, s.leg, s.coleg, s.maj), (2, 1, 1, 1, 2));
        let s = p("5,4,3,2").cell_stats(Cell::new(2, 2)).unwrap();
        assert_eq!((s.arm, s.coarm, s.leg, s.coleg, s.maj), (2, 1, 2, 1, 3));
        let s = p("1").cell_stats(Cell::new(1, 1)).unwrap();
        assert_eq!((s.arm, s.coarm, s.leg, s.coleg, s.maj), (0, 0, 0, 0, 1));
        let s = p("2,2").cell_stats(Cell::new(2, 1)).unwrap();
        assert_eq!((s.arm, s.coarm, s.leg, s.coleg, s.maj), (1, 0, 0, 1, 1));
        assert_eq!(
            p("2,2").cell_stats(Cell::new(3, 1)),
            Err(Error::OutOfShape { row: 3, col: 1 })
        );
    }

    #[test]
    fn cell_stats_invariants() {
        for n in 0..=8 {
            for l in partitions(n) {
                assert_eq!(l.cells().len(), n);
                for c in l.cells() {
                    let s = l.cell_stats(c).unwrap();
                    assert_eq!(s.maj, s.leg + 1);
                    assert_eq!(s.arm + s.coarm + 1, l.row_len(c.row));
                    assert_eq!(s.leg + s.coleg + 1, l.col_len(c.col));
                }
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3), vec![p("3"), p("2,1"), p("1,1,1")]);
    }

    #[test]
    fn parsing() {
        assert!("3,4".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert_eq!(p("[4,2]").to_string(), "4,2");
        let cells = parse_cells("(2,1);(2,2) ; (2,4)").unwrap();
        assert_eq!(
            cells,
            vec![Cell::new(2, 1), Cell::new(2, 2), Cell::new(2, 4)]
        );
        assert_eq!(format_cells(&cells), "(2,1);(2,2);(2,4)");
        assert!(parse_cells("(0,1)").is_err());
    }

    #[test]
    fn multinomials() {
        assert_eq!(p("2,1").multinomial(), 3);
        assert_eq!(p("1,1,1,1").multinomial(), 24);
        assert_eq!(p("3,2,2").multinomial(), 210);
    }
}
