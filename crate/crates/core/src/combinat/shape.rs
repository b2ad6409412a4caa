//! Skew shapes, ribbons, and the tuples that index LLT polynomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::combinat::partition::{Cell, Partition};
use crate::error::{Error, Result};

/// A skew shape stored as its cell set, sorted in reading order
/// (content ascending, then row ascending).
///
/// Shapes are only meaningful up to diagonal translation, so they are kept
/// normalized: the smallest row or column coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    cells: Vec<Cell>,
}

impl SkewShape {
    /// Build from cells given with signed coordinates; they are translated
    /// diagonally into normal position (contents are unchanged).
    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        let set: BTreeSet<(i64, i64)> = coords.iter().copied().collect();
        if set.len() != coords.len() {
            return Err(Error::InvalidShape("repeated cell".into()));
        }
        let lo = set.iter().map(|&(r, c)| r.min(c)).min().unwrap_or(1);
        let shift = 1 - lo;
        let mut cells: Vec<Cell> = set
            .iter()
            .map(|&(r, c)| Cell::new((r + shift) as u32, (c + shift) as u32))
            .collect();
        cells.sort_by_key(|c| (c.content(), c.row));
        let shape = SkewShape { cells };
        shape.check_convex()?;
        Ok(shape)
    }

    pub fn from_cells(cells: &[Cell]) -> Result<Self> {
        let coords: Vec<(i64, i64)> = cells.iter().map(|c| (c.row as i64, c.col as i64)).collect();
        Self::from_coords(&coords)
    }

    /// The skew diagram `outer / inner`.
    pub fn skew(outer: &Partition, inner: &Partition) -> Result<Self> {
        let cells: Vec<Cell> = outer
            .cells()
            .into_iter()
            .filter(|&c| !inner.contains(c))
            .collect();
        if inner.cells().iter().any(|&c| !outer.contains(c)) {
            return Err(Error::InvalidShape(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Self::from_cells(&cells)
    }

    pub fn single(content: i64) -> Self {
        Self::from_coords(&[(content, 0)]).expect("a single cell is a skew shape")
    }

    // A cell set is a skew shape iff it is convex in the product order.
    fn check_convex(&self) -> Result<()> {
        let set: BTreeSet<Cell> = self.cells.iter().copied().collect();
        for a in &self.cells {
            for c in &self.cells {
                if a.row <= c.row && a.col <= c.col {
                    for r in a.row..=c.row {
                        for k in a.col..=c.col {
                            if !set.contains(&Cell::new(r, k)) {
                                return Err(Error::InvalidShape(format!(
                                    "cells {a} and {c} present but ({r},{k}) missing"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.cells.iter().map(Cell::content)
    }

    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.cells.iter().position(|&d| d == c)
    }

    /// Index of the cell directly to the left, if present.
    pub fn left_of(&self, i: usize) -> Option<usize> {
        let c = self.cells[i];
        (c.col > 1)
            .then(|| self.index_of(Cell::new(c.row, c.col - 1)))
            .flatten()
    }

    pub fn right_of(&self, i: usize) -> Option<usize> {
        let c = self.cells[i];
        self.index_of(Cell::new(c.row, c.col + 1))
    }

    /// Index of the cell directly below, if present.
    pub fn below(&self, i: usize) -> Option<usize> {
        let c = self.cells[i];
        (c.row > 1)
            .then(|| self.index_of(Cell::new(c.row - 1, c.col)))
            .flatten()
    }

    pub fn above(&self, i: usize) -> Option<usize> {
        let c = self.cells[i];
        self.index_of(Cell::new(c.row + 1, c.col))
    }

    /// Contents of cells whose lower neighbour is also in the shape.
    pub fn descent_set(&self) -> BTreeSet<i64> {
        (0..self.len())
            .filter(|&i| self.below(i).is_some())
            .map(|i| self.cells[i].content())
            .collect()
    }

    /// Edgewise connected, no 2x2 block, contents consecutive and distinct.
    pub fn is_ribbon(&self) -> bool {
        if self.cells.is_empty() {
            return false;
        }
        let contents: Vec<i64> = self.contents().collect();
        // sorted by content, so consecutive distinct contents means a chain
        let consecutive = contents.windows(2).all(|w| w[1] == w[0] + 1);
        let connected = (1..self.len()).all(|i| {
            let (a, b) = (self.cells[i - 1], self.cells[i]);
            (b.row == a.row + 1 && b.col == a.col) || (b.row == a.row && b.col + 1 == a.col)
        });
        consecutive && connected
    }

    /// View as a ribbon `R_[lo,hi](D)`.
    pub fn as_ribbon(&self) -> Option<Ribbon> {
        if !self.is_ribbon() {
            return None;
        }
        let lo = self.cells[0].content();
        let hi = self.cells[self.len() - 1].content();
        Some(Ribbon {
            lo,
            hi,
            descents: self.descent_set(),
            shape: self.clone(),
        })
    }
}

/// The ribbon `R_I(D)` with content interval `I = [lo, hi]` and descent set `D`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ribbon {
    lo: i64,
    hi: i64,
    descents: BTreeSet<i64>,
    shape: SkewShape,
}

impl Ribbon {
    /// Grow from the cell of content `lo`: content `c` goes above the
    /// previous cell when `c` is a descent and to its left otherwise.
    pub fn from_descents(lo: i64, hi: i64, descents: &BTreeSet<i64>) -> Result<Self> {
        if hi < lo {
            return Err(Error::InvalidShape(format!(
                "empty content interval [{lo},{hi}]"
            )));
        }
        if let Some(&d) = descents.iter().find(|&&d| d <= lo || d > hi) {
            return Err(Error::InvalidDescent { lo, hi, descent: d });
        }
        let mut coords = vec![(lo, 0i64)];
        for c in lo + 1..=hi {
            let (r, k) = *coords.last().unwrap();
            coords.push(if descents.contains(&c) {
                (r + 1, k)
            } else {
                (r, k - 1)
            });
        }
        let shape = SkewShape::from_coords(&coords)?;
        Ok(Ribbon {
            lo,
            hi,
            descents: descents.clone(),
            shape,
        })
    }

    /// `C_a`.
    pub fn cell(content: i64) -> Self {
        Self::from_descents(content, content, &BTreeSet::new()).unwrap()
    }

    /// Horizontal domino of content `[a, a+1]`.
    pub fn horizontal(a: i64) -> Self {
        Self::from_descents(a, a + 1, &BTreeSet::new()).unwrap()
    }

    /// Vertical domino of content `[a, a+1]`.
    pub fn vertical(a: i64) -> Self {
        Self::from_descents(a, a + 1, &BTreeSet::from([a + 1])).unwrap()
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn descents(&self) -> &BTreeSet<i64> {
        &self.descents
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn into_shape(self) -> SkewShape {
        self.shape
    }

    /// Extend by one cell of content `hi + 1`, placed to the left (`H`) or above (`V`).
    pub fn grow(&self, vertical: bool) -> Ribbon {
        let mut d = self.descents.clone();
        if vertical {
            d.insert(self.hi + 1);
        }
        Ribbon::from_descents(self.lo, self.hi + 1, &d).unwrap()
    }

    /// Every ribbon whose content interval starts at `lo` with `len` cells.
    pub fn all_with(lo: i64, len: usize) -> Vec<Ribbon> {
        let hi = lo + len as i64 - 1;
        let free: Vec<i64> = (lo + 1..=hi).collect();
        (0u32..1 << free.len())
            .map(|mask| {
                let d = free
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &c)| c)
                    .collect();
                Ribbon::from_descents(lo, hi, &d).unwrap()
            })
            .collect()
    }
}

impl fmt::Display for Ribbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "C{}", self.lo)
        } else if self.hi == self.lo + 1 {
            let tag = if self.descents.is_empty() { 'H' } else { 'V' };
            write!(f, "{tag}[{}]", self.lo)
        } else {
            let d: Vec<String> = self.descents.iter().map(i64::to_string).collect();
            write!(f, "R[{},{}]{{{}}}", self.lo, self.hi, d.join(","))
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_ribbon() {
            Some(r) => write!(f, "{r}"),
            None => {
                let cells: Vec<String> = self.cells.iter().map(Cell::to_string).collect();
                write!(f, "S{{{}}}", cells.join(","))
            }
        }
    }
}

/// An ordered tuple of skew shapes.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShapeTuple(Vec<SkewShape>);

impl ShapeTuple {
    pub fn new(components: Vec<SkewShape>) -> Self {
        ShapeTuple(components)
    }

    pub fn empty() -> Self {
        ShapeTuple(Vec::new())
    }

    pub fn from_ribbons(rs: impl IntoIterator<Item = Ribbon>) -> Self {
        ShapeTuple(rs.into_iter().map(Ribbon::into_shape).collect())
    }

    pub fn components(&self) -> &[SkewShape] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn num_cells(&self) -> usize {
        self.0.iter().map(SkewShape::len).sum()
    }

    pub fn concat(&self, other: &ShapeTuple) -> ShapeTuple {
        ShapeTuple(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn push(&mut self, s: SkewShape) {
        self.0.push(s);
    }

    pub fn content_range(&self) -> Option<(i64, i64)> {
        let all: Vec<i64> = self.0.iter().flat_map(|s| s.contents()).collect();
        Some((*all.iter().min()?, *all.iter().max()?))
    }
}

impl fmt::Display for ShapeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.0.iter().map(SkewShape::to_string).collect();
        f.write_str(&parts.join(" ; "))
    }
}

/// Parses `R[1,3]{2} ; C2 ; H[4] ; V[4] ; S[4,2/1] ; S{(1,1),(1,2)}`,
/// with an optional `^k` repetition suffix on any component.
impl FromStr for ShapeTuple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(ShapeTuple::empty());
        }
        for raw in split_top_level(s) {
            let raw = raw.trim();
            if raw.is_empty() {
                return Err(Error::Parse("empty tuple component".into()));
            }
            let (body, reps) = match raw.rsplit_once('^') {
                Some((b, r)) if !r.contains([']', '}']) => (
                    b.trim(),
                    r.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad repetition in `{raw}`")))?,
                ),
                _ => (raw, 1),
            };
            let shape = parse_component(body)?;
            out.extend(std::iter::repeat_n(shape, reps));
        }
        Ok(ShapeTuple(out))
    }
}

// ';' separates components except inside braces, where it may separate cells.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '{' | '[' => depth += 1,
            '}' | ']' => depth -= 1,
            ';' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| Error::Parse(format!("bad integer `{s}`")))
}

fn bracketed(s: &str, open: char, close: char) -> Result<&str> {
    s.strip_prefix(open)
        .and_then(|x| x.strip_suffix(close))
        .ok_or_else(|| Error::Parse(format!("expected {open}...{close} in `{s}`")))
}

fn parse_component(s: &str) -> Result<SkewShape> {
    if !s.is_char_boundary(1) {
        return Err(Error::Parse(format!("unknown tuple component `{s}`")));
    }
    let (tag, rest) = s.split_at(1);
    let rest = rest.trim();
    match tag {
        "C" => Ok(SkewShape::single(parse_int(rest)?)),
        "H" => Ok(Ribbon::horizontal(parse_int(bracketed(rest, '[', ']')?)?).into_shape()),
        "V" => Ok(Ribbon::vertical(parse_int(bracketed(rest, '[', ']')?)?).into_shape()),
        "R" => {
            let close = rest
                .find(']')
                .ok_or_else(|| Error::Parse(format!("bad ribbon `{s}`")))?;
            let interval = bracketed(&rest[..=close], '[', ']')?;
            let (lo, hi) = interval
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad interval `{interval}`")))?;
            let desc_src = rest[close + 1..].trim();
            let descents: BTreeSet<i64> = if desc_src.is_empty() {
                BTreeSet::new()
            } else {
                bracketed(desc_src, '{', '}')?
                    .split(',')
                    .filter(|x| !x.trim().is_empty())
                    .map(parse_int)
                    .collect::<Result<_>>()?
            };
            Ok(Ribbon::from_descents(parse_int(lo)?, parse_int(hi)?, &descents)?.into_shape())
        }
        "S" if rest.starts_with('[') => {
            let inner = bracketed(rest, '[', ']')?;
            let (outer, inner) = inner.split_once('/').unwrap_or((inner, ""));
            SkewShape::skew(&outer.parse()?, &inner.parse()?)
        }
        "S" => {
            let inner = bracketed(rest, '{', '}')?;
            let mut coords = Vec::new();
            for cell in inner
                .split([';', ')'])
                .map(|c| c.trim_matches([',', ' ', '(']))
            {
                if cell.is_empty() {
                    continue;
                }
                let (r, c) = cell
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("bad cell `{cell}`")))?;
                coords.push((parse_int(r)?, parse_int(c)?));
            }
            SkewShape::from_coords(&coords)
        }
        _ => Err(Error::Parse(format!("unknown tuple component `{s}`"))),
    }
}

/// `R_mu(D)`: the j-th component is the ribbon `R_[1, mu'_j]` whose descents
/// are the rows `i` with `(i, j)` in `descent_cells`.
pub fn ribbon_tuple(mu: &Partition, descent_cells: &[Cell]) -> Result<ShapeTuple> {
    let mut by_col: BTreeMap<u32, BTreeSet<i64>> = BTreeMap::new();
    for &c in descent_cells {
        if !mu.contains(c) {
            return Err(Error::OutOfShape {
                row: c.row,
                col: c.col,
            });
        }
        if c.row == 1 {
            return Err(Error::InvalidDescentCell {
                row: c.row,
                col: c.col,
            });
        }
        by_col.entry(c.col).or_default().insert(c.row as i64);
    }
    let conj = mu.conjugate();
    let empty = BTreeSet::new();
    let ribbons = conj.parts().iter().enumerate().map(|(j, &h)| {
        let d = by_col.get(&(j as u32 + 1)).unwrap_or(&empty);
        Ribbon::from_descents(1, h as i64, d).expect("column descents are in range")
    });
    Ok(ShapeTuple::from_ribbons(ribbons))
}

/// `D^rev = {(2, k+1-j) : (2, j) in D}`.
pub fn reverse_row_descents(d: &[Cell], k: u32) -> Vec<Cell> {
    let mut out: Vec<Cell> = d.iter().map(|c| Cell::new(c.row, k + 1 - c.col)).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> ShapeTuple {
        s.parse().unwrap()
    }

    fn cellset(v: &[(u32, u32)]) -> Vec<Cell> {
        let mut c: Vec<Cell> = v.iter().map(|&(r, k)| Cell::new(r, k)).collect();
        c.sort_by_key(|c| (c.content(), c.row));
        c
    }

    #[test]
    fn ribbon_examples() {
        let r = Ribbon::from_descents(1, 3, &BTreeSet::from([2])).unwrap();
        assert_eq!(
            r.shape().cells(),
            cellset(&[(3, 2), (4, 2), (4, 1)]).as_slice()
        );
        let contents: Vec<i64> = r.shape().contents().collect();
        assert_eq!(contents, vec![1, 2, 3]);

        let h = Ribbon::horizontal(1);
        assert_eq!(h.shape().cells(), cellset(&[(3, 2), (3, 1)]).as_slice());
        let v = Ribbon::vertical(1);
        assert_eq!(v.shape().cells(), cellset(&[(2, 1), (3, 1)]).as_slice());
        assert_eq!(Ribbon::from_descents(1, 2, &BTreeSet::new()).unwrap(), h);

        let c = Ribbon::cell(5);
        assert_eq!(c.len(), 1);
        assert_eq!(c.shape().cells()[0].content(), 5);
        // negative contents stay inside the positive quadrant
        assert_eq!(Ribbon::cell(-2).shape().cells(), &[Cell::new(1, 3)]);
    }

    #[test]
    fn ribbon_descent_errors() {
        assert_eq!(
            Ribbon::from_descents(1, 3, &BTreeSet::from([1])),
            Err(Error::InvalidDescent {
                lo: 1,
                hi: 3,
                descent: 1
            })
        );
        assert!(Ribbon::from_descents(1, 3, &BTreeSet::from([4])).is_err());
    }

    #[test]
    fn ribbon_round_trip_all_small() {
        for lo in -2..=2 {
            for len in 1..=6 {
                for r in Ribbon::all_with(lo, len) {
                    let s = r.shape();
                    assert!(s.is_ribbon());
                    assert_eq!(&s.descent_set(), r.descents());
                    let again = s.as_ribbon().unwrap();
                    assert_eq!(again, r);
                    let contents: Vec<i64> = s.contents().collect();
                    assert_eq!(contents, (lo..lo + len as i64).collect::<Vec<_>>());
                    // no 2x2 block
                    for c in s.cells() {
                        let block = [(0, 1), (1, 0), (1, 1)]
                            .iter()
                            .all(|&(a, b)| s.index_of(Cell::new(c.row + a, c.col + b)).is_some());
                        assert!(!block);
                    }
                }
            }
        }
    }

    #[test]
    fn ribbon_tuple_examples() {
        let mu: Partition = "7,5".parse().unwrap();
        let d = [Cell::new(2, 1), Cell::new(2, 2), Cell::new(2, 4)];
        assert_eq!(
            ribbon_tuple(&mu, &d).unwrap(),
            t("V[1];V[1];H[1];V[1];H[1];C1;C1")
        );
        let rev = reverse_row_descents(&d, 5);
        assert_eq!(rev, vec![Cell::new(2, 2), Cell::new(2, 4), Cell::new(2, 5)]);
        assert_eq!(
            ribbon_tuple(&mu, &rev).unwrap(),
            t("H[1];V[1];H[1];V[1];V[1];C1;C1")
        );

        let mu: Partition = "1,1".parse().unwrap();
        assert_eq!(ribbon_tuple(&mu, &[]).unwrap(), t("H[1]"));
        assert_eq!(
            ribbon_tuple(&mu, &[Cell::new(1, 1)]),
            Err(Error::InvalidDescentCell { row: 1, col: 1 })
        );
    }

    #[test]
    fn reverse_examples() {
        assert!(reverse_row_descents(&[], 4).is_empty());
        assert_eq!(
            reverse_row_descents(&[Cell::new(2, 3)], 5),
            vec![Cell::new(2, 3)]
        );
    }

    #[test]
    fn tuple_syntax() {
        let tup = t("R[1,3]{2} ; C2 ; H[4] ; V[4]");
        assert_eq!(tup.len(), 4);
        assert_eq!(tup.to_string(), "R[1,3]{2} ; C2 ; H[4] ; V[4]");
        assert_eq!(t("C2^3").len(), 3);
        assert_eq!(t("R[1,2]{2}"), t("V[1]"));
        assert_eq!(t("R[1,2]{}"), t("H[1]"));
        assert_eq!(t("R[1,2]"), t("H[1]"));
        assert_eq!(t("C-1").components()[0].cells()[0].content(), -1);
        let sk = t("S[3,2/1]");
        assert_eq!(sk.num_cells(), 4);
        assert_eq!(sk.to_string(), t(&sk.to_string()).to_string());
        assert_eq!(t("S{(1,1),(1,2)}"), t("H[-1]"));
        assert!("S{(1,1),(2,2)}".parse::<ShapeTuple>().is_err());
        assert!("X1".parse::<ShapeTuple>().is_err());
        assert!(t("").is_empty());
    }
}
