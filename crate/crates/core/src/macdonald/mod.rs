//! Modified and multi-t Macdonald polynomials as weighted sums of LLT
//! polynomials of column ribbon tuples.
//!
//! `H_mu[X; q, t] = sum_D q^{-arm(D)} t^{maj(D)} LLT_{R_mu(D)}` where `D`
//! runs over sets of cells of `mu` above the first row.

mod checks;

pub use checks::{
    conjecture_conditions, drev_check, flipped_verify, haglund_theorem_form, haglund_verify,
    kostka_table, linear_relation_check, maj_generating_function, near_staircase_check,
    qt_symmetry, quotient_schur, rect_column_verify, stretch_verify, Comparison, LinearReport,
    QuotientOutcome, StretchReport,
};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use rayon::prelude::*;

use crate::combinat::dyck::DyckPath;
use crate::combinat::partition::{Cell, Partition};
use crate::combinat::shape::ribbon_tuple;
use crate::error::{Error, Result};
use crate::llt::llt_poly_vars;
use crate::polyring::{LaurentPoly, Monomial, Var};
use crate::symfunc::{Basis, SymFunc};

/// Cells of `mu` outside the first row, row by row.
pub fn upper_cells(mu: &Partition) -> Vec<Cell> {
    mu.cells().into_iter().filter(|c| c.row > 1).collect()
}

// sum over all D of weight(D) * LLT(R_mu(D)); subsets are evaluated in
// parallel and summed in subset order
fn weighted_sum(
    mu: &Partition,
    num_vars: usize,
    weight: impl Fn(&[Cell]) -> Result<LaurentPoly> + Sync,
) -> Result<SymFunc> {
    let upper = upper_cells(mu);
    if upper.len() >= 32 {
        return Err(Error::InvalidShape(format!(
            "{mu} has too many cells above the first row"
        )));
    }
    let terms: Vec<SymFunc> = (0u32..1 << upper.len())
        .into_par_iter()
        .map(|mask| {
            let d: Vec<Cell> = upper
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &c)| c)
                .collect();
            let w = weight(&d)?;
            Ok(llt_poly_vars(&ribbon_tuple(mu, &d)?, num_vars)?.scale(&w))
        })
        .collect::<Result<_>>()?;
    let mut total = SymFunc::zero(mu.size(), Basis::Monomial);
    for f in &terms {
        total = total.add(f)?;
    }
    Ok(total)
}

fn arm_and_maj(mu: &Partition, d: &[Cell]) -> Result<(i64, i64)> {
    let mut arm = 0;
    let mut maj = 0;
    for &c in d {
        let s = mu.cell_stats(c)?;
        arm += s.arm as i64;
        maj += s.maj as i64;
    }
    Ok((arm, maj))
}

fn reject_negative_q(f: SymFunc, what: &str) -> Result<SymFunc> {
    let bad = f
        .coeffs()
        .find(|(_, c)| c.min_q_exponent().is_some_and(|e| e < 0))
        .map(|(p, c)| format!("{what}, coefficient of {p}: {c}"));
    match bad {
        Some(msg) => Err(Error::NegativeQPower(msg)),
        None => Ok(f),
    }
}

fn hhl_cache() -> &'static RwLock<HashMap<Partition, SymFunc>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, SymFunc>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The modified Macdonald polynomial in the monomial basis, with `n`
/// variables. Results are memoized per process.
pub fn hhl_macdonald(mu: &Partition) -> Result<SymFunc> {
    if let Some(f) = hhl_cache().read().expect("cache poisoned").get(mu) {
        return Ok(f.clone());
    }
    let f = hhl_macdonald_vars(mu, mu.size())?;
    hhl_cache()
        .write()
        .expect("cache poisoned")
        .insert(mu.clone(), f.clone());
    Ok(f)
}

pub fn hhl_macdonald_vars(mu: &Partition, num_vars: usize) -> Result<SymFunc> {
    let f = weighted_sum(mu, num_vars, |d| {
        let (arm, maj) = arm_and_maj(mu, d)?;
        Ok(LaurentPoly::term(
            1,
            Monomial::from_pairs([(Var::Q, -arm), (Var::T, maj)]),
        ))
    })?;
    reject_negative_q(f, &format!("H[{mu}]"))
}

/// What a cell's `t_i` stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TWeight {
    Var(Var),
    /// `t_i = q^e`
    QPow(i64),
}

impl fmt::Display for TWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TWeight::Var(v) => write!(f, "{v}"),
            TWeight::QPow(e) => write!(f, "q^{e}"),
        }
    }
}

/// An ordering `c_1, c_2, ...` of the cells above the first row together
/// with the value of each `t_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiTAssignment {
    mu: Partition,
    cells: Vec<Cell>,
    weights: Vec<TWeight>,
}

impl MultiTAssignment {
    pub fn new(mu: &Partition, cells: Vec<Cell>, weights: Vec<TWeight>) -> Result<Self> {
        if cells.len() != weights.len() {
            return Err(Error::SizeMismatch {
                left: cells.len(),
                right: weights.len(),
            });
        }
        let mut sorted = cells.clone();
        sorted.sort();
        let mut expected = upper_cells(mu);
        expected.sort();
        if sorted != expected {
            return Err(Error::InvalidShape(format!(
                "cell order must list each cell of {mu} above the first row exactly once"
            )));
        }
        Ok(MultiTAssignment {
            mu: mu.clone(),
            cells,
            weights,
        })
    }

    /// Every `t_i = t`.
    pub fn uniform(mu: &Partition) -> Self {
        let cells = upper_cells(mu);
        let weights = vec![TWeight::Var(Var::T); cells.len()];
        MultiTAssignment {
            mu: mu.clone(),
            cells,
            weights,
        }
    }

    /// Independent variables `t_1, t_2, ...` in the given order.
    pub fn indexed(mu: &Partition, order: Vec<Cell>) -> Result<Self> {
        let weights = (1..=order.len() as u32)
            .map(|i| TWeight::Var(Var::Ti(i)))
            .collect();
        Self::new(mu, order, weights)
    }

    /// `mu = (n-k, k)`, `c_i = (2, i)` and `t_i = q^{h_{k+1-i} - k}`.
    pub fn haglund(n: usize, k: usize, heights: &[usize]) -> Result<Self> {
        validate_heights(n, k, heights)?;
        let mu = two_row(n, k)?;
        let cells = (1..=k as u32).map(|i| Cell::new(2, i)).collect();
        let weights = (1..=k)
            .map(|i| TWeight::QPow(heights[k - i] as i64 - k as i64))
            .collect();
        Ok(MultiTAssignment { mu, cells, weights })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn weights(&self) -> &[TWeight] {
        &self.weights
    }

    /// Substitutions `t_i -> q^e`, for reporting.
    pub fn specialization(&self) -> BTreeMap<String, i64> {
        self.weights
            .iter()
            .enumerate()
            .filter_map(|(i, w)| match w {
                TWeight::QPow(e) => Some((Var::Ti(i as u32 + 1).name(), *e)),
                TWeight::Var(_) => None,
            })
            .collect()
    }
}

/// `sum_D q^{-arm(D)} prod_{c_i in D} t_i^{maj(c_i)} LLT_{R_mu(D)}`.
pub fn multi_t_macdonald(assign: &MultiTAssignment, num_vars: usize) -> Result<SymFunc> {
    let mu = &assign.mu;
    let slot: HashMap<Cell, usize> = assign
        .cells
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();
    let f = weighted_sum(mu, num_vars, |d| {
        let mut pairs = Vec::new();
        let mut qe = 0i64;
        for &c in d {
            let s = mu.cell_stats(c)?;
            qe -= s.arm as i64;
            match assign.weights[slot[&c]] {
                TWeight::Var(v) => pairs.push((v, s.maj as i64)),
                TWeight::QPow(e) => qe += e * s.maj as i64,
            }
        }
        pairs.push((Var::Q, qe));
        Ok(LaurentPoly::term(1, Monomial::from_pairs(pairs)))
    })?;
    reject_negative_q(f, &format!("multi-t H[{mu}]"))
}

fn two_row(n: usize, k: usize) -> Result<Partition> {
    if 2 * k > n {
        return Err(Error::InvalidShape(format!(
            "({}, {k}) is not a partition",
            n as i64 - k as i64
        )));
    }
    Partition::new(
        [n - k, k]
            .into_iter()
            .filter(|&p| p > 0)
            .map(|p| p as u32)
            .collect(),
    )
}

/// `k <= h_1 <= ... <= h_k <= n`, `2k <= n`.
pub fn validate_heights(n: usize, k: usize, heights: &[usize]) -> Result<()> {
    let ok = heights.len() == k
        && 2 * k <= n
        && heights.first().is_none_or(|&h| h >= k)
        && heights.last().is_none_or(|&h| h <= n)
        && heights.windows(2).all(|w| w[0] <= w[1]);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidHeights {
            n,
            k,
            heights: heights.to_vec(),
        })
    }
}

/// `sum_D q^{sum_{(2,j) in D} (h_j - k - j + 1)} LLT_{R_mu(D)}` for
/// `mu = (n-k, k)`.
pub fn two_row_f(n: usize, k: usize, heights: &[usize]) -> Result<SymFunc> {
    validate_heights(n, k, heights)?;
    let mu = two_row(n, k)?;
    weighted_sum(&mu, n, |d| {
        let e: i64 = d
            .iter()
            .map(|c| heights[c.col as usize - 1] as i64 - k as i64 - c.col as i64 + 1)
            .sum();
        Ok(LaurentPoly::q_pow(e))
    })
}

/// `D(h_1, ..., h_k, n, ..., n)`.
pub fn haglund_dyck(n: usize, k: usize, heights: &[usize]) -> Result<DyckPath> {
    validate_heights(n, k, heights)?;
    let mut h = heights.to_vec();
    h.resize(n, n);
    DyckPath::new(h)
}

/// Every admissible height vector for `(n, k)`.
pub fn all_heights(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(
        i: usize,
        k: usize,
        n: usize,
        lo: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == k {
            out.push(cur.clone());
            return;
        }
        for h in lo..=n {
            cur.push(h);
            rec(i + 1, k, n, h, cur, out);
            cur.pop();
        }
    }
    if 2 * k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(0, k, n, k, &mut Vec::new(), &mut out);
    out
}

/// `B_lambda(q, t) = sum_{c in lambda} q^{coarm(c)} t^{coleg(c)}`.
pub fn b_polynomial(lambda: &Partition) -> LaurentPoly {
    lambda
        .cells()
        .into_iter()
        .map(|c| {
            let s = lambda.cell_stats(c).expect("cell of lambda");
            LaurentPoly::term(
                1,
                Monomial::from_pairs([(Var::Q, s.coarm as i64), (Var::T, s.coleg as i64)]),
            )
        })
        .sum()
}

/// `t -> q^k` in every coefficient.
pub fn specialize_t(f: &SymFunc, k: i64) -> SymFunc {
    let map = BTreeMap::from([(Var::T, k)]);
    f.map_coeffs(|c| c.substitute_powers(1, &map))
}

/// `(q, t) -> (q^k, q)` in every coefficient.
pub fn flip_specialize(f: &SymFunc, k: i64) -> SymFunc {
    let map = BTreeMap::from([(Var::T, 1)]);
    f.map_coeffs(|c| c.substitute_powers(k, &map))
}

/// Exchange `q` and `t` in every coefficient.
pub fn swap_qt(f: &SymFunc) -> Result<SymFunc> {
    let coeffs = f
        .coeffs()
        .map(|(p, c)| Ok((p.clone(), c.swap_q_t()?)))
        .collect::<Result<Vec<_>>>()?;
    SymFunc::from_coeffs(f.degree(), f.basis(), coeffs)
}
