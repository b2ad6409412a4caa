//! Machine checks of the identities relating Macdonald polynomials, two-row
//! multi-t specializations and unicellular LLT polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;

use crate::combinat::partition::{partitions, Cell, Partition};
use crate::combinat::shape::{reverse_row_descents, ribbon_tuple, ShapeTuple, SkewShape};
use crate::combinat::tableau::syt_maj_gf;
use crate::error::{Error, Result};
use crate::llt::{llt_poly, llt_unicellular};
use crate::polyring::{q_int, LaurentPoly, Monomial};
use crate::symfunc::{Basis, SymFunc};

use super::{
    all_heights, b_polynomial, flip_specialize, haglund_dyck, hhl_macdonald, multi_t_macdonald,
    specialize_t, swap_qt, two_row_f, validate_heights, MultiTAssignment,
};

/// Two sides of an identity, both in the Schur basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    pub lhs: SymFunc,
    pub rhs: SymFunc,
}

impl Comparison {
    pub fn new(lhs: &SymFunc, rhs: &SymFunc) -> Self {
        Comparison {
            lhs: lhs.to_schur(),
            rhs: rhs.to_schur(),
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// `lhs - rhs`, zero exactly when the identity holds.
    pub fn diff(&self) -> SymFunc {
        if self.lhs.degree() != self.rhs.degree() {
            return self.lhs.clone();
        }
        self.lhs.sub(&self.rhs).expect("same degree")
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds() {
            write!(f, "equal: {}", self.lhs)
        } else {
            write!(
                f,
                "lhs {} | rhs {} | diff {}",
                self.lhs,
                self.rhs,
                self.diff()
            )
        }
    }
}

/// `two_row_f(h)` against the unicellular LLT of `D(h_1, ..., h_k, n, ..., n)`.
pub fn haglund_verify(n: usize, k: usize, heights: &[usize]) -> Result<Comparison> {
    let lhs = two_row_f(n, k, heights)?;
    let rhs = llt_unicellular(&haglund_dyck(n, k, heights)?)?;
    Ok(Comparison::new(&lhs, &rhs))
}

/// The multi-t polynomial with `t_i = q^{h_{k+1-i} - k}` against `two_row_f(h)`.
pub fn haglund_theorem_form(n: usize, k: usize, heights: &[usize]) -> Result<Comparison> {
    let lhs = multi_t_macdonald(&MultiTAssignment::haglund(n, k, heights)?, n)?;
    Ok(Comparison::new(&lhs, &two_row_f(n, k, heights)?))
}

/// `h_j = k + j - 1 + e_j`: `two_row_f(h)` against
/// `LLT(P_{e_1}, ..., P_{e_k}, C_1^{n-2k})`, `P_1 = (C_1, C_2)`, `P_0 = (C_2, C_1)`.
pub fn near_staircase_check(n: usize, k: usize, e: &[bool]) -> Result<Comparison> {
    if e.len() != k || 2 * k > n {
        return Err(Error::InvalidShape(format!(
            "near staircase needs k = {} and 2k <= n = {n}",
            e.len()
        )));
    }
    let heights: Vec<usize> = (1..=k).map(|j| k + j - 1 + e[j - 1] as usize).collect();
    let mut parts = Vec::new();
    for &bit in e {
        let (a, b) = if bit { (1, 2) } else { (2, 1) };
        parts.push(SkewShape::single(a));
        parts.push(SkewShape::single(b));
    }
    parts.extend((0..n - 2 * k).map(|_| SkewShape::single(1)));
    let rhs = llt_poly(&ShapeTuple::new(parts))?;
    Ok(Comparison::new(&two_row_f(n, k, &heights)?, &rhs))
}

/// Instances of the column and row linear relations tried for one `(n, k)`,
/// and a description of every failure.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LinearReport {
    pub column_instances: usize,
    pub row_instances: usize,
    pub failures: Vec<String>,
}

impl LinearReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `q f(.., a, ..) + f(.., a+2, ..) = [2]_q f(.., a+1, ..)` in one height and
/// `q f(.., a, a, ..) + f(.., a+1, a+1, ..) = [2]_q f(.., a, a+1, ..)` in two
/// adjacent heights, for every instance whose height vectors are all
/// admissible. Both `two_row_f` and the unicellular LLT side are checked.
pub fn linear_relation_check(n: usize, k: usize) -> Result<LinearReport> {
    let mut report = LinearReport::default();
    let mut memo: HashMap<(bool, Vec<usize>), SymFunc> = HashMap::new();
    let mut side = |llt: bool, h: &[usize]| -> Result<SymFunc> {
        let key = (llt, h.to_vec());
        if let Some(f) = memo.get(&key) {
            return Ok(f.clone());
        }
        let f = if llt {
            llt_unicellular(&haglund_dyck(n, k, h)?)?
        } else {
            two_row_f(n, k, h)?
        };
        memo.insert(key, f.clone());
        Ok(f)
    };
    let q = LaurentPoly::q();
    let two = q_int(2);
    let admissible = |h: &[usize]| validate_heights(n, k, h).is_ok();
    for base in all_heights(n, k) {
        for i in 0..k {
            // column relation in h_i, with base as the `a` vector
            let mut h1 = base.clone();
            h1[i] += 1;
            let mut h2 = base.clone();
            h2[i] += 2;
            if admissible(&h1) && admissible(&h2) {
                report.column_instances += 1;
                for llt in [false, true] {
                    let lhs = side(llt, &base)?.scale(&q).add(&side(llt, &h2)?)?;
                    let rhs = side(llt, &h1)?.scale(&two);
                    if lhs != rhs {
                        report
                            .failures
                            .push(format!("column h_{} at {base:?} (llt side: {llt})", i + 1));
                    }
                }
            }
            // row relation in (h_i, h_{i+1}) = (a, a)
            if i + 1 < k && base[i] == base[i + 1] {
                let mut hb = base.clone();
                hb[i + 1] += 1;
                let mut hc = base.clone();
                hc[i] += 1;
                hc[i + 1] += 1;
                if admissible(&hb) && admissible(&hc) {
                    report.row_instances += 1;
                    for llt in [false, true] {
                        let lhs = side(llt, &base)?.scale(&q).add(&side(llt, &hc)?)?;
                        let rhs = side(llt, &hb)?.scale(&two);
                        if lhs != rhs {
                            report
                                .failures
                                .push(format!("row i={} at {base:?} (llt side: {llt})", i + 1));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `LLT(R_mu(D)) = LLT(R_mu(D^rev))` for `mu = (n-k, k)` and every `D` in
/// the second row. Returns the first `D` where this fails.
pub fn drev_check(n: usize, k: usize) -> Result<Option<Vec<Cell>>> {
    if 2 * k > n {
        return Err(Error::InvalidShape(format!(
            "({}, {k}) is not a partition",
            n as i64 - k as i64
        )));
    }
    let mu = Partition::from_unsorted(vec![(n - k) as u32, k as u32]);
    for mask in 0u32..1 << k {
        let d: Vec<Cell> = (0..k as u32)
            .filter(|j| mask >> j & 1 == 1)
            .map(|j| Cell::new(2, j + 1))
            .collect();
        let rev = reverse_row_descents(&d, k as u32);
        if llt_poly(&ribbon_tuple(&mu, &d)?)? != llt_poly(&ribbon_tuple(&mu, &rev)?)? {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq)]
pub struct StretchReport {
    /// `B_{k mu}(q, q^k) = B_{k mu'}(q, q^k)`
    pub b_equal: bool,
    /// `H_{k mu}[X; q, q^k]` against `H_{k mu'}[X; q, q^k]`
    pub comparison: Comparison,
}

pub fn stretch_verify(mu: &Partition, k: u32) -> Result<StretchReport> {
    let a = mu.stretch(k);
    let b = mu.conjugate().stretch(k);
    let spec = BTreeMap::from([(crate::polyring::Var::T, k as i64)]);
    let b_equal = b_polynomial(&a).substitute_powers(1, &spec)
        == b_polynomial(&b).substitute_powers(1, &spec);
    let lhs = specialize_t(&hhl_macdonald(&a)?, k as i64);
    let rhs = specialize_t(&hhl_macdonald(&b)?, k as i64);
    Ok(StretchReport {
        b_equal,
        comparison: Comparison::new(&lhs, &rhs),
    })
}

/// `sum_lambda (sum_{T in SYT(lambda)} q^{maj T}) s_lambda`.
pub fn maj_generating_function(n: usize) -> SymFunc {
    let coeffs = partitions(n).into_iter().map(|l| {
        let c = syt_maj_gf(&l);
        (l, c)
    });
    SymFunc::from_coeffs(n, Basis::Schur, coeffs).expect("partitions of n")
}

/// `H_{(k^l)}[X; q, q^k]` against `H_{(kl)}[X; q, q^k]`, and the latter
/// against the major index generating function.
pub fn rect_column_verify(k: u32, l: u32) -> Result<(Comparison, Comparison)> {
    let rect = Partition::new(vec![k; l as usize])?;
    let row = Partition::new(vec![k * l])?;
    let a = specialize_t(&hhl_macdonald(&rect)?, k as i64);
    let b = specialize_t(&hhl_macdonald(&row)?, k as i64);
    let c = maj_generating_function((k * l) as usize);
    Ok((Comparison::new(&a, &b), Comparison::new(&b, &c)))
}

/// `H_{(l^k)}[X; q^k, q]` against `H_{(kl)}[X; q, q^k]`.
pub fn flipped_verify(k: u32, l: u32) -> Result<Comparison> {
    let rect = Partition::new(vec![l; k as usize])?;
    let row = Partition::new(vec![k * l])?;
    let lhs = flip_specialize(&hhl_macdonald(&rect)?, k as i64);
    let rhs = specialize_t(&hhl_macdonald(&row)?, k as i64);
    Ok(Comparison::new(&lhs, &rhs))
}

/// `H_mu[X; q, t]` against `H_{mu'}[X; t, q]`.
pub fn qt_symmetry(mu: &Partition) -> Result<Comparison> {
    let lhs = hhl_macdonald(mu)?;
    let rhs = swap_qt(&hhl_macdonald(&mu.conjugate())?)?;
    Ok(Comparison::new(&lhs, &rhs))
}

/// Outcome of dividing `H_lambda - H_nu` by `q^k - t`.
#[derive(Clone, Debug, PartialEq)]
pub enum QuotientOutcome {
    Positive(SymFunc),
    NotPositive {
        quotient: SymFunc,
        witness: (Partition, Monomial, BigInt),
    },
    NotDivisible {
        partition: Partition,
        remainder: LaurentPoly,
    },
}

impl QuotientOutcome {
    pub fn is_divisible(&self) -> bool {
        !matches!(self, QuotientOutcome::NotDivisible { .. })
    }

    pub fn is_positive(&self) -> bool {
        matches!(self, QuotientOutcome::Positive(_))
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            QuotientOutcome::Positive(_) => "divisible, Schur positive",
            QuotientOutcome::NotPositive { .. } => "divisible, not Schur positive",
            QuotientOutcome::NotDivisible { .. } => "not divisible",
        }
    }
}

/// `(H_lambda - H_nu) / (q^k - t)` in the Schur basis.
pub fn quotient_schur(lambda: &Partition, nu: &Partition, k: u32) -> Result<QuotientOutcome> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: nu.size(),
        });
    }
    let diff = hhl_macdonald(lambda)?.sub(&hhl_macdonald(nu)?)?.to_schur();
    let mut coeffs = Vec::new();
    for (p, c) in diff.coeffs() {
        match c.divide_exact(k) {
            Ok(quot) => coeffs.push((p.clone(), quot)),
            Err(Error::NotDivisible { remainder, .. }) => {
                return Ok(QuotientOutcome::NotDivisible {
                    partition: p.clone(),
                    remainder,
                })
            }
            Err(e) => return Err(e),
        }
    }
    let quotient = SymFunc::from_coeffs(lambda.size(), Basis::Schur, coeffs)?;
    Ok(match quotient.schur_positivity_witness() {
        None => QuotientOutcome::Positive(quotient),
        Some(witness) => QuotientOutcome::NotPositive { quotient, witness },
    })
}

/// Every cell `(i, j)` of `mu` lies in `mu'` or satisfies `i < j`.
pub fn conjecture_conditions(mu: &Partition) -> bool {
    let conj = mu.conjugate();
    mu.cells()
        .into_iter()
        .all(|c| conj.contains(c) || c.row < c.col)
}

/// `K_{lambda, mu}(q, t)`, the Schur coefficients of `H_mu`, for all
/// partitions of `n`, keyed by `(lambda, mu)`.
pub fn kostka_table(n: usize) -> Result<BTreeMap<(Partition, Partition), LaurentPoly>> {
    let mut out = BTreeMap::new();
    for mu in partitions(n) {
        let h = hhl_macdonald(&mu)?.to_schur();
        for lambda in partitions(n) {
            out.insert((lambda.clone(), mu.clone()), h.coeff(&lambda));
        }
    }
    Ok(out)
}
