//! Transfer-matrix evaluation of LLT coefficients.
//!
//! The coefficient of `x^a` for a composition `a` counts fillings where the
//! cells holding value `v` form a horizontal strip added on top of the cells
//! holding smaller values. The state after placing values `1..v` is the set
//! of filled cells (a bitmask) together with the inversion distribution so
//! far. A cell receiving value `v` forms an inversion exactly with the
//! already filled cells it beats, so inversions are counted incrementally.

use std::ops::AddAssign;

use rustc_hash::FxHashMap;

use crate::combinat::shape::ShapeTuple;
use crate::error::{Error, Result};

pub(crate) type Dist = Vec<u128>;

// Up to this many cells, slot lookup uses a dense table over all subsets.
const DENSE_CELLS: usize = 14;
// Counts are bounded by n!, which fits in u64 up to here.
const NARROW_CELLS: usize = 20;
const EMPTY: u32 = u32::MAX;

trait Count: Copy + Default + AddAssign + Into<u128> {
    const ONE: Self;
}

impl Count for u64 {
    const ONE: Self = 1;
}

impl Count for u128 {
    const ONE: Self = 1;
}

/// Filled sets with one inversion distribution per variant each, stored in
/// a flat array: state `i`, variant `v` occupies `width` entries at
/// `(i * variants + v) * width`.
struct States<C> {
    keys: Vec<u64>,
    dists: Vec<C>,
    width: usize,
    variants: usize,
}

impl<C: Count> States<C> {
    fn new(width: usize, variants: usize) -> Self {
        States {
            keys: Vec::new(),
            dists: Vec::new(),
            width,
            variants,
        }
    }

    fn len(&self) -> usize {
        self.keys.len()
    }

    fn stride(&self) -> usize {
        self.width * self.variants
    }

    fn dist(&self, i: usize, v: usize) -> &[C] {
        let start = (i * self.variants + v) * self.width;
        let d = &self.dists[start..start + self.width];
        let top = d.iter().rposition(|&c| c.into() != 0).map_or(0, |p| p + 1);
        &d[..top]
    }

    fn get(&self, key: u64) -> Option<Vec<Dist>> {
        let i = self.keys.iter().position(|&k| k == key)?;
        Some(
            (0..self.variants)
                .map(|v| self.dist(i, v).iter().map(|&c| c.into()).collect())
                .collect(),
        )
    }
}

/// Key to slot maps for the states being built, one per strip size.
enum SlotIndex {
    Dense(Vec<u32>),
    Hashed(FxHashMap<u64, u32>),
}

impl SlotIndex {
    fn slot<C: Count>(&mut self, out: &mut States<C>, key: u64) -> usize {
        let next = out.keys.len() as u32;
        let i = match self {
            SlotIndex::Dense(v) => {
                let e = &mut v[key as usize];
                if *e == EMPTY {
                    *e = next;
                }
                *e
            }
            SlotIndex::Hashed(m) => *m.entry(key).or_insert(next),
        };
        if i == next {
            out.keys.push(key);
            out.dists
                .resize(out.dists.len() + out.stride(), C::default());
        }
        i as usize
    }

    fn reset(&mut self, keys: &[u64]) {
        match self {
            SlotIndex::Dense(v) => keys.iter().for_each(|&k| v[k as usize] = EMPTY),
            SlotIndex::Hashed(m) => m.clear(),
        }
    }
}

/// Most tuples compiled into one pass.
pub(crate) const MAX_VARIANTS: usize = 4;

struct Walk<'a, C> {
    filled: u64,
    // per variant: the state's distribution
    dist: [&'a [C]; MAX_VARIANTS],
    cand: &'a [usize],
    // gain of candidate `idx` in variant `v` at `idx * MAX_VARIANTS + v`
    gain: &'a [u32],
    max: usize,
    outs: &'a mut [States<C>],
    index: &'a mut [SlotIndex],
}

/// One or more tuples with the same components in different orders. They
/// share cells, strips and states; only inversions depend on the order.
pub(crate) struct Compiled {
    n: usize,
    below: Vec<Option<usize>>,
    left: Vec<Option<usize>>,
    variants: usize,
    // beats[v * n + u]: cells w such that T(u) > T(w) is an inversion in variant v
    beats: Vec<u64>,
    width: usize,
}

impl Compiled {
    pub(crate) fn new(t: &ShapeTuple) -> Result<Self> {
        Self::new_group(std::slice::from_ref(t))
    }

    /// Compile tuples whose components agree up to order.
    pub(crate) fn new_group(tuples: &[ShapeTuple]) -> Result<Self> {
        assert!(
            !tuples.is_empty() && tuples.len() <= MAX_VARIANTS,
            "1 to {MAX_VARIANTS} tuples per group"
        );
        let first = &tuples[0];
        let n = first.num_cells();
        if n > 64 {
            return Err(Error::InvalidShape(format!(
                "{n} cells exceed the 64-cell limit"
            )));
        }
        let mut below = Vec::with_capacity(n);
        let mut left = Vec::with_capacity(n);
        let mut contents = Vec::with_capacity(n);
        let mut offsets = Vec::new();
        let mut base = 0;
        for s in first.components() {
            offsets.push(base);
            for i in 0..s.len() {
                below.push(s.below(i).map(|j| base + j));
                left.push(s.left_of(i).map(|j| base + j));
                contents.push(s.cells()[i].content());
            }
            base += s.len();
        }
        let mut beats = vec![0u64; n * tuples.len()];
        for (v, t) in tuples.iter().enumerate() {
            // position of every cell's component in this variant
            let mut comp = vec![usize::MAX; n];
            let mut used = vec![false; first.components().len()];
            for (k, s) in t.components().iter().enumerate() {
                let j = (0..used.len())
                    .find(|&j| !used[j] && first.components()[j] == *s)
                    .ok_or_else(|| {
                        Error::InvalidShape(format!("{t} is not a reordering of {first}"))
                    })?;
                used[j] = true;
                for i in 0..s.len() {
                    comp[offsets[j] + i] = k;
                }
            }
            if used.iter().any(|&u| !u) {
                return Err(Error::InvalidShape(format!(
                    "{t} is not a reordering of {first}"
                )));
            }
            for u in 0..n {
                for w in 0..n {
                    let (ku, kw, cu, cw) = (comp[u], comp[w], contents[u], contents[w]);
                    if (ku < kw && cu == cw) || (ku > kw && cu == cw + 1) {
                        beats[v * n + u] |= 1 << w;
                    }
                }
            }
        }
        // at most one of the two orders of a pair is an inversion
        let width = (0..tuples.len())
            .map(|v| {
                beats[v * n..(v + 1) * n]
                    .iter()
                    .map(|b| b.count_ones() as usize)
                    .sum::<usize>()
            })
            .max()
            .unwrap_or(0)
            + 1;
        Ok(Compiled {
            n,
            below,
            left,
            variants: tuples.len(),
            beats,
            width,
        })
    }

    pub(crate) fn num_cells(&self) -> usize {
        self.n
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn initial<C: Count>(&self) -> States<C> {
        let mut s = States::new(self.width, self.variants);
        s.keys.push(0);
        s.dists.resize(s.stride(), C::default());
        for v in 0..self.variants {
            s.dists[v * self.width] = C::ONE;
        }
        s
    }

    fn indices(&self, sizes: usize) -> Vec<SlotIndex> {
        (0..=sizes)
            .map(|_| {
                if self.n <= DENSE_CELLS {
                    SlotIndex::Dense(vec![EMPTY; 1 << self.n])
                } else {
                    SlotIndex::Hashed(FxHashMap::default())
                }
            })
            .collect()
    }

    /// Place `p` copies of the next value for every `p` in `1..=max`, with
    /// one enumeration of strips per state; entry `p` is for size `p`.
    fn step_all<C: Count>(
        &self,
        states: &States<C>,
        max: usize,
        index: &mut [SlotIndex],
    ) -> Vec<States<C>> {
        let vs = self.variants;
        let mut outs: Vec<States<C>> = (0..=max).map(|_| States::new(self.width, vs)).collect();
        let mut cand = Vec::with_capacity(self.n);
        let mut gain = Vec::with_capacity(self.n * MAX_VARIANTS);
        for (i, &filled) in states.keys.iter().enumerate() {
            cand.clear();
            gain.clear();
            // descending index: a cell's left neighbour (higher content) is decided first
            for u in (0..self.n).rev() {
                let free = filled & (1 << u) == 0;
                if free && self.below[u].is_none_or(|b| filled & (1 << b) != 0) {
                    cand.push(u);
                    for v in 0..MAX_VARIANTS {
                        let g = if v < vs {
                            (self.beats[v * self.n + u] & filled).count_ones()
                        } else {
                            0
                        };
                        gain.push(g);
                    }
                }
            }
            let mut dist: [&[C]; MAX_VARIANTS] = [&[]; MAX_VARIANTS];
            for (v, d) in dist.iter_mut().enumerate().take(vs) {
                *d = states.dist(i, v);
            }
            let mut walk = Walk {
                filled,
                dist,
                cand: &cand,
                gain: &gain,
                max,
                outs: &mut outs,
                index: &mut *index,
            };
            self.grow(&mut walk, 0, 0, 0, [0; MAX_VARIANTS]);
        }
        for (ix, out) in index.iter_mut().zip(&outs) {
            ix.reset(&out.keys);
        }
        outs
    }

    fn grow<C: Count>(
        &self,
        w: &mut Walk<'_, C>,
        at: usize,
        strip: u64,
        size: usize,
        inc: [u32; MAX_VARIANTS],
    ) {
        let vs = self.variants;
        for idx in at..w.cand.len() {
            let u = w.cand[idx];
            if !self.left[u].is_none_or(|l| (w.filled | strip) & (1 << l) != 0) {
                continue;
            }
            let strip = strip | (1 << u);
            let mut inc = inc;
            for (v, x) in inc.iter_mut().enumerate().take(vs) {
                *x += w.gain[idx * MAX_VARIANTS + v];
            }
            let out = &mut w.outs[size + 1];
            let i = w.index[size + 1].slot(out, w.filled | strip);
            for (v, (d, x)) in w.dist.iter().zip(inc).enumerate().take(vs) {
                let base = (i * vs + v) * out.width + x as usize;
                for (t, &c) in out.dists[base..base + d.len()].iter_mut().zip(*d) {
                    *t += c;
                }
            }
            if size + 1 < w.max {
                self.grow(w, idx + 1, strip, size + 1, inc);
            }
        }
    }

    /// Inversion distribution of fillings with content `a` (any composition).
    pub(crate) fn coefficient(&self, a: &[u32]) -> Dist {
        if self.n <= NARROW_CELLS {
            self.coefficient_in::<u64>(a)
        } else {
            self.coefficient_in::<u128>(a)
        }
    }

    fn coefficient_in<C: Count>(&self, a: &[u32]) -> Dist {
        let mut index = self.indices(a.iter().copied().max().unwrap_or(0) as usize);
        let mut states = self.initial::<C>();
        for &size in a {
            if size > 0 {
                states = self
                    .step_all(&states, size as usize, &mut index)
                    .swap_remove(size as usize);
            }
        }
        states
            .get(self.full())
            .map(|mut d| d.swap_remove(0))
            .unwrap_or_default()
    }

    /// Distributions, one per variant, for every partition of the cell count
    /// with at most `num_vars` parts, sharing work between partitions with a
    /// common prefix.
    pub(crate) fn all_partitions(&self, num_vars: usize) -> Vec<(Vec<u32>, Vec<Dist>)> {
        if self.n <= NARROW_CELLS {
            self.all_partitions_in::<u64>(num_vars)
        } else {
            self.all_partitions_in::<u128>(num_vars)
        }
    }

    fn all_partitions_in<C: Count>(&self, num_vars: usize) -> Vec<(Vec<u32>, Vec<Dist>)> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        let mut index = self.indices(self.n);
        let n = self.n as u32;
        self.dfs(
            &self.initial::<C>(),
            n,
            n,
            num_vars,
            &mut prefix,
            &mut index,
            &mut out,
        );
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs<C: Count>(
        &self,
        states: &States<C>,
        remaining: u32,
        max_part: u32,
        parts_left: usize,
        prefix: &mut Vec<u32>,
        index: &mut [SlotIndex],
        out: &mut Vec<(Vec<u32>, Vec<Dist>)>,
    ) {
        if remaining == 0 {
            if let Some(d) = states.get(self.full()) {
                out.push((prefix.clone(), d));
            }
            return;
        }
        if parts_left == 0 {
            return;
        }
        let max = max_part.min(remaining);
        let nexts = self.step_all(states, max as usize, index);
        for part in (1..=max).rev() {
            let next = &nexts[part as usize];
            if next.len() == 0 {
                continue;
            }
            prefix.push(part);
            self.dfs(
                next,
                remaining - part,
                part,
                parts_left - 1,
                prefix,
                index,
                out,
            );
            prefix.pop();
        }
    }
}
