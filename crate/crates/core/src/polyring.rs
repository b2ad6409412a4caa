//! Integer Laurent polynomials in `q` with ordinary polynomial variables
//! `t, t_1, t_2, ...`.
//!
//! Monomials are stored sparsely as sorted `(Var, exponent)` lists; the
//! JSON form is dense over the canonical variable order `q, t, t_1, ...`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A ring variable. The derived order is the canonical order `q < t < t_1 < t_2 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    T,
    Ti(u32),
}

impl Var {
    pub fn name(&self) -> String {
        match self {
            Var::Q => "q".to_string(),
            Var::T => "t".to_string(),
            Var::Ti(i) => format!("t_{i}"),
        }
    }

    pub fn parse(s: &str) -> Result<Var> {
        match s {
            "q" => Ok(Var::Q),
            "t" => Ok(Var::T),
            _ => s
                .strip_prefix("t_")
                .or_else(|| s.strip_prefix('t'))
                .and_then(|d| d.parse::<u32>().ok())
                .map(Var::Ti)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{s}`"))),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Sorted list of `(variable, nonzero exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: i64) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i64)>) -> Self {
        let mut map: BTreeMap<Var, i64> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn exponent(&self, v: Var) -> i64 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, i64)] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    if ea + eb != 0 {
                        out.push((a, ea + eb));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    fn fmt_with(&self, latex: bool) -> String {
        let mut s = String::new();
        for &(v, e) in &self.0 {
            s.push_str(&v.name());
            if e != 1 {
                if latex {
                    s.push_str(&format!("^{{{e}}}"));
                } else {
                    s.push_str(&format!("^{e}"));
                }
            }
        }
        s
    }
}

/// Exact polynomial with integer coefficients; only `q` may carry negative exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::var(v, 1))
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn t() -> Self {
        Self::var(Var::T)
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        Self::term(1, Monomial::var(Var::Q, e))
    }

    /// Polynomial in `q` from a coefficient list starting at `q^offset`.
    pub fn from_q_coeffs<C: Into<BigInt> + Clone>(offset: i64, coeffs: &[C]) -> Self {
        let mut p = LaurentPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(Var::Q, offset + i as i64), c.clone().into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Variables that actually occur.
    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_q_exponent(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(Var::Q)).min()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.keys().any(|m| m.0.iter().any(|&(_, e)| e < 0))
    }

    /// All coefficients are nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiply by `q^e`.
    pub fn shift_q(&self, e: i64) -> Self {
        if e == 0 {
            return self.clone();
        }
        let m = Monomial::var(Var::Q, e);
        self.mul_monomial(&m)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.mul(m), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        LaurentPoly { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Value at every variable equal to one.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitute `q -> q^q_power` and every `v -> q^e` listed in `map`;
    /// variables missing from `map` are kept.
    pub fn substitute_powers(&self, q_power: i64, map: &BTreeMap<Var, i64>) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut qe = 0i64;
            let mut rest = Vec::new();
            for &(v, e) in &m.0 {
                match v {
                    Var::Q => qe += e * q_power,
                    _ => match map.get(&v) {
                        Some(&target) => qe += e * target,
                        None => rest.push((v, e)),
                    },
                }
            }
            rest.push((Var::Q, qe));
            out.add_term(Monomial::from_pairs(rest), c.clone());
        }
        out
    }

    /// Rename variables. Colliding images are merged.
    pub fn rename_vars(&self, f: impl Fn(Var) -> Var) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(
                Monomial::from_pairs(m.0.iter().map(|&(v, e)| (f(v), e))),
                c.clone(),
            );
        }
        out
    }

    /// Exchange `q` and `t`. Fails if a negative `q` power would land on `t`.
    pub fn swap_q_t(&self) -> Result<Self> {
        if self.min_q_exponent().is_some_and(|e| e < 0) {
            return Err(Error::NegativeQPower(self.to_string()));
        }
        Ok(self.rename_vars(|v| match v {
            Var::Q => Var::T,
            Var::T => Var::Q,
            other => other,
        }))
    }

    /// Coefficients of the powers of `v`, each a polynomial in the other variables.
    fn split_by(&self, v: Var) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = Monomial(m.0.iter().copied().filter(|&(w, _)| w != v).collect());
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Exact quotient by `(q^k - t)`, by synthetic division in `t`.
    pub fn divide_exact(&self, k: u32) -> Result<Self> {
        let by_t = self.split_by(Var::T);
        let Some(&deg) = by_t.keys().next_back() else {
            return Ok(LaurentPoly::zero());
        };
        let root = LaurentPoly::q_pow(k as i64);
        // p = (t - q^k) * b + r
        let mut b: Vec<LaurentPoly> = vec![LaurentPoly::zero(); deg.max(0) as usize];
        let mut carry = LaurentPoly::zero();
        for j in (0..=deg).rev() {
            let a = by_t.get(&j).cloned().unwrap_or_default();
            let cur = &a + &(&root * &carry);
            if j == 0 {
                carry = cur;
            } else {
                b[(j - 1) as usize] = cur.clone();
                carry = cur;
            }
        }
        let remainder = carry;
        if !remainder.is_zero() {
            return Err(Error::NotDivisible { k, remainder });
        }
        let mut quotient = LaurentPoly::zero();
        for (j, bj) in b.into_iter().enumerate() {
            quotient -= &bj.mul_monomial(&Monomial::var(Var::T, j as i64));
        }
        Ok(quotient)
    }

    fn display_order(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        let dense = |m: &Monomial| -> Vec<std::cmp::Reverse<i64>> {
            m.0.iter().map(|&(_, e)| std::cmp::Reverse(e)).collect()
        };
        terms.sort_by(|(a, _), (b, _)| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| {
                    // earlier variables with larger exponents first: q before t at equal degree
                    let va: Vec<_> =
                        a.0.iter()
                            .map(|&(v, e)| (v, std::cmp::Reverse(e)))
                            .collect();
                    let vb: Vec<_> =
                        b.0.iter()
                            .map(|&(v, e)| (v, std::cmp::Reverse(e)))
                            .collect();
                    va.cmp(&vb)
                })
                .then_with(|| dense(a).cmp(&dense(b)))
        });
        terms
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                }
                s.push_str(&m.fmt_with(latex));
            }
        }
        s
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    /// True when the polynomial is a single term (so it needs no parentheses).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn to_json(&self) -> PolyJson {
        let mut vars: BTreeSet<Var> = self.vars();
        vars.insert(Var::Q);
        let vars: Vec<Var> = vars.into_iter().collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                e: vars.iter().map(|&v| m.exponent(v)).collect(),
                c: c.to_string(),
            })
            .collect();
        PolyJson {
            vars: vars.iter().map(Var::name).collect(),
            terms,
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let vars = j
            .vars
            .iter()
            .map(|s| Var::parse(s))
            .collect::<Result<Vec<_>>>()?;
        let mut p = LaurentPoly::zero();
        for t in &j.terms {
            if t.e.len() != vars.len() {
                return Err(Error::Parse("exponent vector length mismatch".into()));
            }
            for (v, &e) in vars.iter().zip(&t.e) {
                if *v != Var::Q && e < 0 {
                    return Err(Error::Parse(format!("negative exponent on {v}")));
                }
            }
            let c: BigInt =
                t.c.parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.c)))?;
            p.add_term(
                Monomial::from_pairs(vars.iter().copied().zip(t.e.iter().copied())),
                c,
            );
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<i64>,
    pub c: String,
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        LaurentPoly { terms }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

/// `[n]_q = (1 - q^n)/(1 - q)`, extended to negative `n` as a Laurent polynomial.
pub fn q_int(n: i64) -> LaurentPoly {
    if n >= 0 {
        LaurentPoly::from_q_coeffs(0, &vec![1i64; n as usize])
    } else {
        // [-m]_q = -(q^-1 + ... + q^-m)
        -LaurentPoly::from_q_coeffs(n, &vec![1i64; (-n) as usize])
    }
}

pub fn q_factorial(n: u32) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, i| &acc * &q_int(i))
}

/// Gaussian binomial via `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn q_binomial(n: u32, k: u32) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    let mut row = vec![LaurentPoly::one()];
    for i in 1..=n as usize {
        let next = (0..=i)
            .map(|j| {
                let mut v = LaurentPoly::zero();
                if j > 0 {
                    v += &row[j - 1];
                }
                if j < i {
                    v += &row[j].shift_q(j as i64);
                }
                v
            })
            .collect();
        row = next;
    }
    row.swap_remove(k as usize)
}

/// `[n]!_q / ([m_1]!_q ... [m_r]!_q)` with `n = m_1 + ... + m_r`.
pub fn q_multinomial(parts: &[u32]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    let mut total = 0;
    for &m in parts {
        total += m;
        acc = &acc * &q_binomial(total, m);
    }
    acc
}
