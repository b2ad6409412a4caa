//! Formal sums of shape tuples and LLT equivalence over a finite family of
//! context tuples.
//!
//! Two formal sums are LLT equivalent when they agree after appending any
//! tuple to every term. Only finitely many contexts can be tried; the
//! default family covers every tuple of at most two ribbons of at most three
//! cells whose contents lie within one of the contents of the sums.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::combinat::shape::{Ribbon, ShapeTuple, SkewShape};
use crate::error::Result;
use crate::polyring::{q_int, LaurentPoly, Var};
use crate::symfunc::SymFunc;

use rustc_hash::FxHashMap;

use super::{llt_poly, llt_raw_many, raw_to_symfunc, RawLlt};

/// A symmetric function that may mix degrees, keyed by degree. Zero parts
/// are dropped.
pub type Graded = BTreeMap<usize, SymFunc>;

/// A finite linear combination of shape tuples with Laurent coefficients.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FormalShapeSum {
    terms: Vec<(LaurentPoly, ShapeTuple)>,
}

impl FormalShapeSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(t: ShapeTuple) -> Self {
        Self::new().plus(LaurentPoly::one(), t)
    }

    /// Add `c * t`, merging with an existing term for `t`.
    pub fn plus(mut self, c: LaurentPoly, t: ShapeTuple) -> Self {
        if let Some(pos) = self.terms.iter().position(|(_, u)| *u == t) {
            let merged = &self.terms[pos].0 + &c;
            if merged.is_zero() {
                self.terms.remove(pos);
            } else {
                self.terms[pos].0 = merged;
            }
        } else if !c.is_zero() {
            self.terms.push((c, t));
        }
        self
    }

    pub fn terms(&self) -> &[(LaurentPoly, ShapeTuple)] {
        &self.terms
    }

    pub fn content_range(&self) -> Option<(i64, i64)> {
        self.terms
            .iter()
            .filter_map(|(_, t)| t.content_range())
            .reduce(|a, b| (a.0.min(b.0), a.1.max(b.1)))
    }
}

impl fmt::Display for FormalShapeSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, t)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "({t})")?;
            } else {
                write!(f, "({c})·({t})")?;
            }
        }
        Ok(())
    }
}

/// `sum c * LLT(t ++ context)`, graded by degree.
pub fn eval_formal(s: &FormalShapeSum, context: &ShapeTuple) -> Result<Graded> {
    eval_with(s, context, &mut HashMap::new())
}

fn eval_with(
    s: &FormalShapeSum,
    context: &ShapeTuple,
    memo: &mut HashMap<ShapeTuple, SymFunc>,
) -> Result<Graded> {
    let mut out = Graded::new();
    for (c, t) in &s.terms {
        let full = t.concat(context);
        let f = match memo.get(&full) {
            Some(f) => f.clone(),
            None => {
                let f = llt_poly(&full)?;
                memo.insert(full, f.clone());
                f
            }
        };
        let scaled = f.scale(c);
        let deg = scaled.degree();
        let merged = match out.remove(&deg) {
            Some(prev) => prev.add(&scaled)?,
            None => scaled,
        };
        if !merged.is_zero() {
            out.insert(deg, merged);
        }
    }
    Ok(out)
}

/// `q`-only coefficients as `(exponent, coefficient)` pairs.
fn q_terms(c: &LaurentPoly) -> Option<Vec<(i64, i128)>> {
    c.terms()
        .map(|(m, v)| {
            if m.pairs().iter().any(|(var, _)| *var != Var::Q) {
                return None;
            }
            Some((m.exponent(Var::Q), i128::try_from(v).ok()?))
        })
        .collect()
}

/// Compare `lhs - rhs` after appending `ctx` on machine integers. `None`
/// when some coefficient does not fit, in which case the caller falls back
/// to exact arithmetic.
fn dense_equal(
    lhs: &FormalShapeSum,
    rhs: &FormalShapeSum,
    ctx: &ShapeTuple,
    raw: &HashMap<ShapeTuple, RawLlt>,
) -> Option<bool> {
    let mut acc: FxHashMap<&[u32], BTreeMap<i64, i128>> = FxHashMap::default();
    for (sign, side) in [(1i128, lhs), (-1, rhs)] {
        for (c, t) in &side.terms {
            let terms = q_terms(c)?;
            for (parts, dist) in &raw[&t.concat(ctx)] {
                let row = acc.entry(parts.as_slice()).or_default();
                for (e, cv) in &terms {
                    for (i, &d) in dist.iter().enumerate() {
                        if d != 0 {
                            let d = i128::try_from(d).ok()?;
                            let x = row.entry(e + i as i64).or_default();
                            *x = x.checked_add(sign.checked_mul(cv.checked_mul(d)?)?)?;
                        }
                    }
                }
            }
        }
    }
    Some(acc.values().all(|row| row.values().all(|&x| x == 0)))
}

/// Which context tuples to append.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContextFamily {
    pub max_ribbons: usize,
    pub max_cells: usize,
    /// How far contexts may reach beyond the contents of the sums.
    pub margin: i64,
}

impl Default for ContextFamily {
    fn default() -> Self {
        ContextFamily {
            max_ribbons: 2,
            max_cells: 3,
            margin: 1,
        }
    }
}

impl ContextFamily {
    /// All ribbon tuples with contents in `[lo - margin, hi + margin]`,
    /// including the empty tuple.
    pub fn contexts(&self, lo: i64, hi: i64) -> Vec<ShapeTuple> {
        let (a, b) = (lo - self.margin, hi + self.margin);
        let mut ribbons: Vec<Ribbon> = Vec::new();
        for len in 1..=self.max_cells {
            for start in a..=b - len as i64 + 1 {
                ribbons.extend(Ribbon::all_with(start, len));
            }
        }
        let mut layer = vec![ShapeTuple::empty()];
        let mut out = layer.clone();
        for _ in 0..self.max_ribbons {
            let mut next = Vec::new();
            for t in &layer {
                for r in &ribbons {
                    let mut u = t.clone();
                    u.push(r.shape().clone());
                    next.push(u);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub context: ShapeTuple,
    pub lhs: Graded,
    pub rhs: Graded,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |g: &Graded| {
            let parts: Vec<String> = g.values().map(|s| s.to_schur().to_string()).collect();
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" + ")
            }
        };
        let ctx = if self.context.is_empty() {
            "()".to_string()
        } else {
            format!("({})", self.context)
        };
        write!(
            f,
            "context {ctx}: lhs {} but rhs {}",
            show(&self.lhs),
            show(&self.rhs)
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquivReport {
    pub contexts_checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl EquivReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub fn llt_equiv_check(
    lhs: &FormalShapeSum,
    rhs: &FormalShapeSum,
    family: &ContextFamily,
) -> Result<EquivReport> {
    let mut v = llt_equiv_check_many(&[(lhs.clone(), rhs.clone())], family)?;
    Ok(v.remove(0))
}

/// Check several identities against one shared context family; LLT values
/// of repeated tuples are computed once per context.
pub fn llt_equiv_check_many(
    pairs: &[(FormalShapeSum, FormalShapeSum)],
    family: &ContextFamily,
) -> Result<Vec<EquivReport>> {
    let range = pairs
        .iter()
        .flat_map(|(l, r)| [l.content_range(), r.content_range()])
        .flatten()
        .reduce(|a, b| (a.0.min(b.0), a.1.max(b.1)));
    let contexts = match range {
        Some((lo, hi)) => family.contexts(lo, hi),
        None => vec![ShapeTuple::empty()],
    };
    let per_context: Vec<Vec<Option<Counterexample>>> = contexts
        .par_iter()
        .map(|ctx| {
            let mut full: Vec<ShapeTuple> = pairs
                .iter()
                .flat_map(|(l, r)| l.terms.iter().chain(&r.terms))
                .map(|(_, t)| t.concat(ctx))
                .collect();
            full.sort();
            full.dedup();
            let raw: HashMap<ShapeTuple, RawLlt> =
                full.iter().cloned().zip(llt_raw_many(&full)?).collect();
            let mut memo = HashMap::new();
            pairs
                .iter()
                .map(|(l, r)| {
                    if dense_equal(l, r, ctx, &raw) == Some(true) {
                        return Ok(None);
                    }
                    // exact comparison, and the values for the report
                    for (_, t) in l.terms.iter().chain(&r.terms) {
                        let t = t.concat(ctx);
                        if let Entry::Vacant(e) = memo.entry(t) {
                            let f = raw_to_symfunc(e.key().num_cells(), &raw[e.key()])?;
                            e.insert(f);
                        }
                    }
                    let a = eval_with(l, ctx, &mut memo)?;
                    let b = eval_with(r, ctx, &mut memo)?;
                    Ok((a != b).then(|| Counterexample {
                        context: ctx.clone(),
                        lhs: a,
                        rhs: b,
                    }))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((0..pairs.len())
        .map(|i| EquivReport {
            contexts_checked: contexts.len(),
            counterexample: per_context.iter().find_map(|row| row[i].clone()),
        })
        .collect())
}

fn cell(c: i64) -> SkewShape {
    SkewShape::single(c)
}

fn tuple(parts: impl IntoIterator<Item = SkewShape>) -> ShapeTuple {
    ShapeTuple::new(parts.into_iter().collect())
}

/// `R_H^+ + q^alpha R_V^+` against `[alpha]_q (R, C_r) - q [alpha-1]_q (C_r, R)`
/// for a ribbon `R` whose largest content is `r - 1`.
pub fn prop_horizontal_vertical(r: &Ribbon, alpha: i64) -> (FormalShapeSum, FormalShapeSum) {
    let c = r.hi() + 1;
    let lhs = horizontal_vertical_lhs(r, alpha);
    let rhs = FormalShapeSum::new()
        .plus(q_int(alpha), tuple([r.shape().clone(), cell(c)]))
        .plus(
            -(LaurentPoly::q() * q_int(alpha - 1)),
            tuple([cell(c), r.shape().clone()]),
        );
    (lhs, rhs)
}

/// The same identity with the right side written as
/// `-q^alpha [-alpha]_q (R, C_r) + q^alpha [1-alpha]_q (C_r, R)`.
pub fn prop_horizontal_vertical_lower_branch(
    r: &Ribbon,
    alpha: i64,
) -> (FormalShapeSum, FormalShapeSum) {
    let c = r.hi() + 1;
    let qa = LaurentPoly::q_pow(alpha);
    let rhs = FormalShapeSum::new()
        .plus(-(&qa * &q_int(-alpha)), tuple([r.shape().clone(), cell(c)]))
        .plus(&qa * &q_int(1 - alpha), tuple([cell(c), r.shape().clone()]));
    (horizontal_vertical_lhs(r, alpha), rhs)
}

fn horizontal_vertical_lhs(r: &Ribbon, alpha: i64) -> FormalShapeSum {
    FormalShapeSum::new()
        .plus(LaurentPoly::one(), tuple([r.grow(false).into_shape()]))
        .plus(
            LaurentPoly::q_pow(alpha),
            tuple([r.grow(true).into_shape()]),
        )
}

/// `[k]_q (C_r^{k-1}, R, C_r)` against `q [k-1]_q (C_r^k, R) + (R, C_r^k)` for
/// a ribbon `R` whose largest content is `r - 1`.
pub fn prop_linear_relation(r: &Ribbon, k: u32) -> (FormalShapeSum, FormalShapeSum) {
    let c = r.hi() + 1;
    let cells = |m: u32| (0..m).map(|_| cell(c)).collect::<Vec<_>>();
    let k64 = k as i64;
    let lhs = FormalShapeSum::new().plus(
        q_int(k64),
        tuple(cells(k - 1).into_iter().chain([r.shape().clone(), cell(c)])),
    );
    let rhs = FormalShapeSum::new()
        .plus(
            LaurentPoly::q() * q_int(k64 - 1),
            tuple(cells(k).into_iter().chain([r.shape().clone()])),
        )
        .plus(
            LaurentPoly::one(),
            tuple([r.shape().clone()].into_iter().chain(cells(k))),
        );
    (lhs, rhs)
}

/// `(C_r, R)` against `q^{-1} (R, C_r)` when `r` is a descent of `R`, and
/// against `(R, C_r)` otherwise; `r` is the largest content of `R`.
pub fn prop_ribbon_cell(r: &Ribbon) -> (FormalShapeSum, FormalShapeSum) {
    let c = r.hi();
    let weight = if r.descents().contains(&c) {
        LaurentPoly::q_pow(-1)
    } else {
        LaurentPoly::one()
    };
    let lhs = FormalShapeSum::single(tuple([cell(c), r.shape().clone()]));
    let rhs = FormalShapeSum::new().plus(weight, tuple([r.shape().clone(), cell(c)]));
    (lhs, rhs)
}

/// `(V, H)` against `(H, V)` for dominoes of content `[r, r+1]`.
pub fn prop_commuting_dominoes(r: i64) -> (FormalShapeSum, FormalShapeSum) {
    let v = Ribbon::vertical(r).into_shape();
    let h = Ribbon::horizontal(r).into_shape();
    (
        FormalShapeSum::single(tuple([v.clone(), h.clone()])),
        FormalShapeSum::single(tuple([h, v])),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn t(s: &str) -> ShapeTuple {
        s.parse().unwrap()
    }

    fn ribbon(lo: i64, hi: i64, d: &[i64]) -> Ribbon {
        Ribbon::from_descents(lo, hi, &d.iter().copied().collect::<BTreeSet<_>>()).unwrap()
    }

    fn schur_of(g: &Graded) -> Vec<String> {
        g.values().map(|s| s.to_schur().to_string()).collect()
    }

    #[test]
    fn default_family_size() {
        // window [0, 6]: 7 + 12 + 20 ribbons
        let fam = ContextFamily::default();
        assert_eq!(fam.contexts(1, 5).len(), 1 + 39 + 39 * 39);
        let small = ContextFamily {
            max_ribbons: 1,
            max_cells: 1,
            margin: 0,
        };
        assert_eq!(small.contexts(1, 1), vec![ShapeTuple::empty(), t("C1")]);
    }

    #[test]
    fn formal_sum_merges_terms() {
        let s = FormalShapeSum::single(t("C1"))
            .plus(LaurentPoly::constant(-1), t("C1"))
            .plus(LaurentPoly::q(), t("H[1]"));
        assert_eq!(s.terms().len(), 1);
        assert_eq!(s.to_string(), "(q)·(H[1])");
    }

    #[test]
    fn eval_examples() {
        let g = eval_formal(&FormalShapeSum::single(t("H[1]")), &ShapeTuple::empty()).unwrap();
        assert_eq!(schur_of(&g), vec!["s[2]"]);

        // alpha = 1 with R = C1: the right side is just (C1, C2)
        let (lhs, rhs) = prop_horizontal_vertical(&Ribbon::cell(1), 1);
        assert_eq!(rhs.terms().len(), 1);
        let a = eval_formal(&lhs, &ShapeTuple::empty()).unwrap();
        let b = eval_formal(&FormalShapeSum::single(t("C1;C2")), &ShapeTuple::empty()).unwrap();
        assert_eq!(a, b);

        let (v, h) = prop_commuting_dominoes(1);
        let diff = FormalShapeSum::new()
            .plus(LaurentPoly::q(), v.terms()[0].1.clone())
            .plus(-LaurentPoly::q(), h.terms()[0].1.clone());
        for ctx in ["", "C1", "V[1];C3"] {
            let ctx = if ctx.is_empty() {
                ShapeTuple::empty()
            } else {
                t(ctx)
            };
            assert!(eval_formal(&diff, &ctx).unwrap().is_empty());
        }
    }

    #[test]
    fn documented_instances_hold() {
        let fam = ContextFamily::default();
        let r12 = ribbon(1, 2, &[2]);
        let (l, r) = prop_horizontal_vertical(&r12, 2);
        assert!(llt_equiv_check(&l, &r, &fam).unwrap().holds());
        let (l, r) = prop_linear_relation(&Ribbon::cell(1), 2);
        assert!(llt_equiv_check(&l, &r, &fam).unwrap().holds());
        let (l, r) = prop_ribbon_cell(&r12);
        assert_eq!(r.terms()[0].0, LaurentPoly::q_pow(-1));
        assert!(llt_equiv_check(&l, &r, &fam).unwrap().holds());
    }

    #[test]
    fn false_identity_is_caught() {
        // (C2, R) = (R, C2) fails when 2 is a descent of R
        let r12 = ribbon(1, 2, &[2]);
        let lhs = FormalShapeSum::single(tuple([cell(2), r12.shape().clone()]));
        let rhs = FormalShapeSum::single(tuple([r12.shape().clone(), cell(2)]));
        let rep = llt_equiv_check(&lhs, &rhs, &ContextFamily::default()).unwrap();
        let ce = rep.counterexample.expect("identity is false");
        assert!(ce.context.is_empty());
        assert!(ce.to_string().starts_with("context (): lhs"));
    }

    #[test]
    fn lower_branch_is_the_same_laurent_expression() {
        for len in 1..=3 {
            for r in Ribbon::all_with(1, len) {
                for alpha in -3..=4 {
                    assert_eq!(
                        prop_horizontal_vertical(&r, alpha),
                        prop_horizontal_vertical_lower_branch(&r, alpha)
                    );
                }
            }
        }
    }
}
