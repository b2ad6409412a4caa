//! LLT polynomials of tuples of skew shapes and the LLT-equivalence bench.

mod equiv;
mod kernel;

pub use equiv::{
    eval_formal, llt_equiv_check, llt_equiv_check_many, prop_commuting_dominoes,
    prop_horizontal_vertical, prop_horizontal_vertical_lower_branch, prop_linear_relation,
    prop_ribbon_cell, ContextFamily, Counterexample, EquivReport, FormalShapeSum, Graded,
};

use crate::combinat::dyck::{cells_from_dyck, DyckPath};
use crate::combinat::partition::Partition;
use std::collections::BTreeMap;

use crate::combinat::shape::{ShapeTuple, SkewShape};
use crate::combinat::tableau::{enumerate_fillings, inv_count};
use crate::error::Result;
use crate::polyring::LaurentPoly;
use crate::symfunc::{from_weight_enumeration, Basis, SymFunc};

/// `LLT_t[X; q]` in the monomial basis, with as many variables as cells.
pub fn llt_poly(t: &ShapeTuple) -> Result<SymFunc> {
    llt_poly_vars(t, t.num_cells())
}

/// `LLT_t` truncated to `num_vars` variables: monomials `m_lambda` with more
/// than `num_vars` parts are dropped. Exact whenever `num_vars >= cells`.
pub fn llt_poly_vars(t: &ShapeTuple, num_vars: usize) -> Result<SymFunc> {
    let k = kernel::Compiled::new(t)?;
    Ok(group_polys(&k, num_vars)?.remove(0))
}

fn group_polys(k: &kernel::Compiled, num_vars: usize) -> Result<Vec<SymFunc>> {
    let rows = k.all_partitions(num_vars);
    let variants = rows.first().map_or(0, |(_, d)| d.len());
    (0..variants)
        .map(|v| {
            let coeffs = rows.iter().map(|(parts, dists)| {
                let p = Partition::new(parts.clone()).expect("dfs emits partitions");
                (p, LaurentPoly::from_q_coeffs(0, &dists[v]))
            });
            SymFunc::from_coeffs(k.num_cells(), Basis::Monomial, coeffs)
        })
        .collect()
}

/// Monomial coefficients as `(lambda, q-coefficients)` rows.
pub(crate) type RawLlt = Vec<(Vec<u32>, kernel::Dist)>;

/// `llt_poly` of every tuple, in order. Tuples that reorder the same
/// components share one pass of the evaluator.
pub fn llt_poly_many(tuples: &[ShapeTuple]) -> Result<Vec<SymFunc>> {
    llt_raw_many(tuples)?
        .into_iter()
        .zip(tuples)
        .map(|(raw, t)| raw_to_symfunc(t.num_cells(), &raw))
        .collect()
}

pub(crate) fn raw_to_symfunc(cells: usize, raw: &RawLlt) -> Result<SymFunc> {
    let coeffs = raw.iter().map(|(parts, dist)| {
        let p = Partition::new(parts.clone()).expect("dfs emits partitions");
        (p, LaurentPoly::from_q_coeffs(0, dist))
    });
    SymFunc::from_coeffs(cells, Basis::Monomial, coeffs)
}

pub(crate) fn llt_raw_many(tuples: &[ShapeTuple]) -> Result<Vec<RawLlt>> {
    let mut groups: BTreeMap<Vec<&SkewShape>, Vec<usize>> = BTreeMap::new();
    for (i, t) in tuples.iter().enumerate() {
        let mut key: Vec<&SkewShape> = t.components().iter().collect();
        key.sort();
        groups.entry(key).or_default().push(i);
    }
    let mut out: Vec<RawLlt> = vec![Vec::new(); tuples.len()];
    for members in groups.values() {
        for chunk in members.chunks(kernel::MAX_VARIANTS) {
            let group: Vec<ShapeTuple> = chunk.iter().map(|&i| tuples[i].clone()).collect();
            let k = kernel::Compiled::new_group(&group)?;
            let rows = k.all_partitions(k.num_cells());
            for (v, &i) in chunk.iter().enumerate() {
                out[i] = rows
                    .iter()
                    .map(|(parts, d)| (parts.clone(), d[v].clone()))
                    .collect();
            }
        }
    }
    Ok(out)
}

/// Coefficient of `x^a` in `LLT_t` for an arbitrary composition `a`.
pub fn llt_coefficient(t: &ShapeTuple, a: &[u32]) -> Result<LaurentPoly> {
    let k = kernel::Compiled::new(t)?;
    if a.iter().sum::<u32>() as usize != k.num_cells() {
        return Ok(LaurentPoly::zero());
    }
    Ok(LaurentPoly::from_q_coeffs(0, &k.coefficient(a)))
}

/// Reference evaluation: enumerate every filling with entries up to
/// `num_vars` and count inversions directly. Exponential; for testing.
pub fn llt_poly_enumerated(t: &ShapeTuple, num_vars: usize) -> Result<SymFunc> {
    let stream = enumerate_fillings(t, num_vars as u32).map(|f| {
        let mut e = vec![0u32; num_vars];
        for &v in f.iter().flatten() {
            e[v as usize - 1] += 1;
        }
        (e, LaurentPoly::q_pow(inv_count(t, &f) as i64))
    });
    from_weight_enumeration(stream, t.num_cells(), num_vars)
}

/// Unicellular LLT polynomial indexed by a Dyck path.
pub fn llt_unicellular(d: &DyckPath) -> Result<SymFunc> {
    llt_poly(&cells_from_dyck(d).to_shapes())
}
