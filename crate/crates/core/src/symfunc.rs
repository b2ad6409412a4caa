//! Symmetric functions of a fixed degree with Laurent polynomial coefficients.
//!
//! A [`SymFunc`] stores its coefficients in either the monomial or the Schur
//! basis. Conversion goes through the Kostka matrix, which is unitriangular
//! for dominance; partitions are visited in lexicographically decreasing
//! order, a linear extension of dominance.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinat::partition::{partitions, Partition};
use crate::error::{Error, Result};
use crate::polyring::{LaurentPoly, Monomial, PolyJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Schur,
}

impl Basis {
    fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
        }
    }
}

/// A homogeneous symmetric function of degree `degree`.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of functions within one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, LaurentPoly>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs(
        degree: usize,
        basis: Basis,
        coeffs: impl IntoIterator<Item = (Partition, LaurentPoly)>,
    ) -> Result<Self> {
        let mut f = SymFunc::zero(degree, basis);
        for (p, c) in coeffs {
            if p.size() != degree {
                return Err(Error::SizeMismatch {
                    left: p.size(),
                    right: degree,
                });
            }
            f.add_coeff(p, &c);
        }
        Ok(f)
    }

    /// The single basis element indexed by `p`.
    pub fn basis_element(basis: Basis, p: Partition) -> Self {
        let n = p.size();
        let mut f = SymFunc::zero(n, basis);
        f.coeffs.insert(p, LaurentPoly::one());
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients in lexicographically decreasing partition order.
    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.coeffs.iter().rev()
    }

    pub fn coeff(&self, p: &Partition) -> LaurentPoly {
        self.coeffs
            .get(p)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    fn add_coeff(&mut self, p: Partition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(p.clone())
            .or_insert_with(LaurentPoly::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (p, c) in &self.coeffs {
            out.add_coeff(p.clone(), &f(c));
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// `self + other`; the result is in the basis of `self`.
    pub fn add(&self, other: &SymFunc) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let other = other.in_basis(self.basis);
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_coeff(p.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn in_basis(&self, basis: Basis) -> SymFunc {
        match (self.basis, basis) {
            (a, b) if a == b => self.clone(),
            (Basis::Monomial, Basis::Schur) => self.to_schur(),
            _ => self.to_monomial(),
        }
    }

    /// Schur expansion by back-substitution against the Kostka matrix.
    pub fn to_schur(&self) -> SymFunc {
        if self.basis == Basis::Schur {
            return self.clone();
        }
        let kostka = kostka_matrix(self.degree);
        let mut out = SymFunc::zero(self.degree, Basis::Schur);
        // partitions() is lexicographically decreasing, so every lambda that
        // dominates mu has been solved before mu is reached
        for (j, mu) in kostka.parts.iter().enumerate() {
            let mut c = self.coeff(mu);
            for (i, lambda) in kostka.parts[..j].iter().enumerate() {
                let k = kostka.entries[i][j];
                if k == 0 {
                    continue;
                }
                if let Some(cl) = out.coeffs.get(lambda) {
                    c -= &cl.scale(&BigInt::from(k));
                }
            }
            out.add_coeff(mu.clone(), &c);
        }
        out
    }

    pub fn to_monomial(&self) -> SymFunc {
        if self.basis == Basis::Monomial {
            return self.clone();
        }
        let kostka = kostka_matrix(self.degree);
        let mut out = SymFunc::zero(self.degree, Basis::Monomial);
        for (lambda, c) in &self.coeffs {
            let i = kostka.index[lambda];
            for (j, mu) in kostka.parts.iter().enumerate() {
                let k = kostka.entries[i][j];
                if k != 0 {
                    out.add_coeff(mu.clone(), &c.scale(&BigInt::from(k)));
                }
            }
        }
        out
    }

    /// Coefficient of `s_lambda`.
    pub fn schur_coeff(&self, lambda: &Partition) -> LaurentPoly {
        match self.basis {
            Basis::Schur => self.coeff(lambda),
            Basis::Monomial => self.to_schur().coeff(lambda),
        }
    }

    /// `None` when every Schur coefficient has nonnegative integer
    /// coefficients, otherwise the first offending partition and term.
    pub fn schur_positivity_witness(&self) -> Option<(Partition, Monomial, BigInt)> {
        let s = self.in_basis(Basis::Schur);
        for (p, c) in s.coeffs() {
            let bad = c.terms().find(|(m, v)| {
                v.sign() == num_bigint::Sign::Minus || m.pairs().iter().any(|&(_, e)| e < 0)
            });
            if let Some((m, v)) = bad {
                return Some((p.clone(), m.clone(), v.clone()));
            }
        }
        None
    }

    pub fn is_schur_positive(&self) -> bool {
        self.schur_positivity_witness().is_none()
    }

    /// Every coefficient evaluated with all variables set to 1.
    pub fn eval_at_one(&self) -> BTreeMap<Partition, BigInt> {
        self.coeffs
            .iter()
            .map(|(p, c)| (p.clone(), c.eval_at_one()))
            .collect()
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.coeffs().enumerate() {
            let parts: Vec<String> = p.parts().iter().map(u32::to_string).collect();
            let basis = if latex {
                format!("{}_{{{}}}", self.basis.symbol(), parts.join(","))
            } else {
                format!("{}[{}]", self.basis.symbol(), parts.join(","))
            };
            let (neg, body) = coeff_text(c, latex);
            let sep = if latex { " " } else { "·" };
            let term = match body {
                None => basis,
                Some(b) => format!("{b}{sep}{basis}"),
            };
            match (i, neg) {
                (0, false) => out.push_str(&term),
                (0, true) => {
                    out.push('-');
                    out.push_str(&term);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&term);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&term);
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> SymFuncJson {
        SymFuncJson {
            degree: self.degree,
            basis: self.basis,
            coeffs: self
                .coeffs()
                .map(|(p, c)| CoeffJson {
                    partition: p.parts().to_vec(),
                    poly: c.to_json(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &SymFuncJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|e| {
                Ok((
                    Partition::new(e.partition.clone())?,
                    LaurentPoly::from_json(&e.poly)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        SymFunc::from_coeffs(j.degree, j.basis, coeffs)
    }
}

// Sign and printable magnitude of a coefficient; `None` for a unit.
fn coeff_text(c: &LaurentPoly, latex: bool) -> (bool, Option<String>) {
    let render = |p: &LaurentPoly| if latex { p.to_latex() } else { p.to_string() };
    if c.is_monomial() {
        let (_, v) = c.terms().next().expect("nonzero");
        if v.sign() == num_bigint::Sign::Minus {
            let pos = -c;
            return (
                true,
                if pos.is_one() {
                    None
                } else {
                    Some(render(&pos))
                },
            );
        }
        return (false, if c.is_one() { None } else { Some(render(c)) });
    }
    (false, Some(format!("({})", render(c))))
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub degree: usize,
    pub basis: Basis,
    pub coeffs: Vec<CoeffJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub partition: Vec<u32>,
    pub poly: PolyJson,
}

/// Build the monomial expansion from a stream of `(exponent vector, weight)`
/// pairs, e.g. one per tableau. Every exponent vector must have length
/// `num_vars` and sum `n`. All rearrangements of one exponent vector must
/// carry the same total weight.
pub fn from_weight_enumeration(
    stream: impl IntoIterator<Item = (Vec<u32>, LaurentPoly)>,
    n: usize,
    num_vars: usize,
) -> Result<SymFunc> {
    let mut by_vector: HashMap<Vec<u32>, LaurentPoly> = HashMap::new();
    for (e, w) in stream {
        if e.len() != num_vars {
            return Err(Error::SizeMismatch {
                left: e.len(),
                right: num_vars,
            });
        }
        let total: u32 = e.iter().sum();
        if total as usize != n {
            return Err(Error::SizeMismatch {
                left: total as usize,
                right: n,
            });
        }
        *by_vector.entry(e).or_insert_with(LaurentPoly::zero) += &w;
    }
    let mut classes: BTreeMap<Partition, Vec<LaurentPoly>> = BTreeMap::new();
    for (e, w) in by_vector {
        if w.is_zero() {
            continue;
        }
        classes
            .entry(Partition::from_unsorted(e))
            .or_default()
            .push(w);
    }
    let mut f = SymFunc::zero(n, Basis::Monomial);
    for (lambda, ws) in classes {
        let expected = rearrangements(&lambda, num_vars);
        let consistent = ws.len() as u128 == expected && ws.iter().all(|w| *w == ws[0]);
        if !consistent {
            return Err(Error::NotSymmetric(lambda.parts().to_vec()));
        }
        f.add_coeff(lambda, &ws[0]);
    }
    Ok(f)
}

// Number of distinct exponent vectors of length `len` that sort to `lambda`.
fn rearrangements(lambda: &Partition, len: usize) -> u128 {
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in lambda.parts() {
        *mult.entry(p).or_default() += 1;
    }
    let zeros = len.saturating_sub(lambda.len()) as u32;
    if zeros > 0 {
        mult.insert(0, zeros);
    }
    let counts: Vec<u32> = mult.values().copied().collect();
    Partition::from_unsorted(counts).multinomial()
}

/// Kostka numbers `K[i][j] = K_{parts[i], parts[j]}` for all partitions of
/// `n`, in lexicographically decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostkaMatrix {
    pub n: usize,
    pub parts: Vec<Partition>,
    pub entries: Vec<Vec<u64>>,
    #[serde(skip)]
    index: HashMap<Partition, usize>,
}

impl KostkaMatrix {
    pub fn compute(n: usize) -> Self {
        let parts = partitions(n);
        let index: HashMap<Partition, usize> = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut entries = vec![vec![0u64; parts.len()]; parts.len()];
        for (j, mu) in parts.iter().enumerate() {
            for (lambda, count) in ssyt_by_shape(mu) {
                entries[index[&lambda]][j] = count;
            }
        }
        KostkaMatrix {
            n,
            parts,
            entries,
            index,
        }
    }

    /// Rebuild the lookup index after deserializing.
    pub fn reindex(mut self) -> Self {
        self.index = self
            .parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        self
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<u64> {
        Some(self.entries[*self.index.get(lambda)?][*self.index.get(mu)?])
    }
}

// Number of SSYT of content `mu`, grouped by shape: place the entries one
// value at a time as horizontal strips.
fn ssyt_by_shape(mu: &Partition) -> HashMap<Partition, u64> {
    let mut layer: HashMap<Vec<u32>, u64> = HashMap::from([(Vec::new(), 1)]);
    for &m in mu.parts() {
        let mut next: HashMap<Vec<u32>, u64> = HashMap::new();
        for (shape, count) in &layer {
            for grown in horizontal_strips(shape, m) {
                *next.entry(grown).or_default() += count;
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .map(|(s, c)| (Partition::from_unsorted(s), c))
        .collect()
}

fn horizontal_strips(shape: &[u32], m: u32) -> Vec<Vec<u32>> {
    fn rec(shape: &[u32], row: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if row == shape.len() + 1 || left == 0 {
            if left == 0 {
                let mut s = cur.clone();
                s.extend_from_slice(&shape[row.min(shape.len())..]);
                out.push(s);
            }
            return;
        }
        let base = shape.get(row).copied().unwrap_or(0);
        let cap = if row == 0 {
            base + left
        } else {
            shape[row - 1]
        };
        for add in 0..=left.min(cap - base) {
            cur.push(base + add);
            rec(shape, row + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(shape, 0, m, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|mut s| {
            while s.last() == Some(&0) {
                s.pop();
            }
            s
        })
        .collect()
}

fn kostka_cache() -> &'static RwLock<HashMap<usize, Arc<KostkaMatrix>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<KostkaMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Shared Kostka matrix for degree `n`, computed on first use.
pub fn kostka_matrix(n: usize) -> Arc<KostkaMatrix> {
    if let Some(m) = kostka_cache()
        .read()
        .expect("kostka cache poisoned")
        .get(&n)
    {
        return Arc::clone(m);
    }
    let m = Arc::new(KostkaMatrix::compute(n));
    let mut w = kostka_cache().write().expect("kostka cache poisoned");
    Arc::clone(w.entry(n).or_insert(m))
}

/// Seed the in-process cache, e.g. from a persistent store.
pub fn install_kostka_matrix(m: KostkaMatrix) {
    let m = m.reindex();
    kostka_cache()
        .write()
        .expect("kostka cache poisoned")
        .insert(m.n, Arc::new(m));
}

/// Number of SSYT of shape `lambda` and content `mu`.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(kostka_matrix(lambda.size()).get(lambda, mu).unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn m(pairs: &[(&str, LaurentPoly)]) -> SymFunc {
        let n = p(pairs[0].0).size();
        SymFunc::from_coeffs(
            n,
            Basis::Monomial,
            pairs.iter().map(|(s, c)| (p(s), c.clone())),
        )
        .unwrap()
    }

    #[test]
    fn weight_enumeration_examples() {
        let q = LaurentPoly::q();
        let one = LaurentPoly::one();
        let stream = (1..=2u32)
            .flat_map(|a| (1..=2u32).map(move |b| (a, b)))
            .map(|(a, b)| {
                let mut e = vec![0u32; 2];
                e[a as usize - 1] += 1;
                e[b as usize - 1] += 1;
                (
                    e,
                    if a > b {
                        LaurentPoly::q()
                    } else {
                        LaurentPoly::one()
                    },
                )
            });
        let f = from_weight_enumeration(stream, 2, 2).unwrap();
        assert_eq!(f, m(&[("2", one.clone()), ("1,1", &one + &q)]));
        assert_eq!(f.to_schur().to_string(), "s[2] + q·s[1,1]");

        let f = from_weight_enumeration([(vec![1], one.clone())], 1, 1).unwrap();
        assert_eq!(f.to_string(), "m[1]");

        let h2 = [vec![2, 0], vec![1, 1], vec![0, 2]].map(|e| (e, LaurentPoly::one()));
        let f = from_weight_enumeration(h2, 2, 2).unwrap();
        assert_eq!(f.to_string(), "m[2] + m[1,1]");
        assert_eq!(f.to_schur().to_string(), "s[2]");
    }

    #[test]
    fn asymmetric_stream_is_rejected() {
        let stream = [(vec![2, 0], LaurentPoly::one())];
        assert_eq!(
            from_weight_enumeration(stream, 2, 2),
            Err(Error::NotSymmetric(vec![2]))
        );
        let stream = [
            (vec![2, 0], LaurentPoly::one()),
            (vec![0, 2], LaurentPoly::q()),
        ];
        assert!(from_weight_enumeration(stream, 2, 2).is_err());
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_number(&p("2,1"), &p("1,1,1")), Ok(2));
        assert_eq!(kostka_number(&p("1,1"), &p("2")), Ok(0));
        assert_eq!(kostka_number(&p("3,2"), &p("2,2,1")), Ok(2));
        assert!(kostka_number(&p("2"), &p("1")).is_err());
    }

    // count SSYT directly by filling cells in row-major order
    fn kostka_brute(lambda: &Partition, mu: &Partition) -> u64 {
        fn rec(
            cells: &[(usize, usize)],
            i: usize,
            grid: &mut Vec<Vec<u32>>,
            left: &mut Vec<u32>,
        ) -> u64 {
            if i == cells.len() {
                return 1;
            }
            let (r, c) = cells[i];
            let mut total = 0;
            for v in 1..=left.len() as u32 {
                if left[v as usize - 1] == 0 {
                    continue;
                }
                if c > 0 && grid[r][c - 1] > v {
                    continue;
                }
                if r > 0 && grid[r - 1][c] >= v {
                    continue;
                }
                left[v as usize - 1] -= 1;
                grid[r][c] = v;
                total += rec(cells, i + 1, grid, left);
                left[v as usize - 1] += 1;
            }
            total
        }
        let cells: Vec<(usize, usize)> = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
            .collect();
        let mut grid: Vec<Vec<u32>> = lambda
            .parts()
            .iter()
            .map(|&l| vec![0; l as usize])
            .collect();
        rec(&cells, 0, &mut grid, &mut mu.parts().to_vec())
    }

    #[test]
    fn kostka_matches_brute_force_and_is_unitriangular() {
        for n in 1..=7 {
            let km = kostka_matrix(n);
            for lambda in &km.parts {
                for mu in &km.parts {
                    let k = km.get(lambda, mu).unwrap();
                    assert_eq!(k, kostka_brute(lambda, mu), "{lambda} {mu}");
                    if k != 0 {
                        assert!(mu.dominance_leq(lambda).unwrap());
                    }
                }
                assert_eq!(km.get(lambda, lambda), Some(1));
            }
        }
        let km = kostka_matrix(8);
        for (i, lambda) in km.parts.iter().enumerate() {
            for (j, mu) in km.parts.iter().enumerate() {
                if km.entries[i][j] != 0 {
                    assert!(mu.dominance_leq(lambda).unwrap());
                }
            }
            assert_eq!(km.entries[i][i], 1);
        }
    }

    #[test]
    fn schur_round_trip() {
        let q = LaurentPoly::q();
        let t = LaurentPoly::t();
        for n in 1..=6 {
            let ps = partitions(n);
            let coeffs = ps.iter().enumerate().map(|(i, l)| {
                let c = q.pow(i as u32) - t.clone() + LaurentPoly::constant(i as i64 - 2);
                (l.clone(), c)
            });
            let f = SymFunc::from_coeffs(n, Basis::Monomial, coeffs).unwrap();
            assert_eq!(f.to_schur().to_monomial(), f);
            let s = f.to_schur();
            assert_eq!(s.to_monomial().to_schur(), s);
        }
        let single = SymFunc::basis_element(Basis::Monomial, p("3"));
        assert_eq!(single.to_schur().to_string(), "s[3] - s[2,1] + s[1,1,1]");
    }

    #[test]
    fn positivity() {
        let q = LaurentPoly::q();
        let s = |pairs: &[(&str, LaurentPoly)]| {
            SymFunc::from_coeffs(
                2,
                Basis::Schur,
                pairs.iter().map(|(x, c)| (p(x), c.clone())),
            )
            .unwrap()
        };
        assert!(s(&[("2", LaurentPoly::one()), ("1,1", q.clone())]).is_schur_positive());
        let bad = s(&[
            ("2", LaurentPoly::one()),
            ("1,1", LaurentPoly::constant(-1)),
        ]);
        let (w, _, c) = bad.schur_positivity_witness().unwrap();
        assert_eq!((w, c), (p("1,1"), BigInt::from(-1)));
        assert_eq!(bad.to_string(), "s[2] - s[1,1]");
        let laurent = s(&[("2", LaurentPoly::q_pow(-1))]);
        assert!(!laurent.is_schur_positive());
    }

    #[test]
    fn rendering_and_json() {
        let q = LaurentPoly::q();
        let f = SymFunc::from_coeffs(
            2,
            Basis::Schur,
            [
                (p("2"), &q + &LaurentPoly::one()),
                (p("1,1"), LaurentPoly::constant(-3)),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "(1 + q)·s[2] - 3·s[1,1]");
        assert_eq!(f.to_latex(), "(1 + q) s_{2} - 3 s_{1,1}");
        let j = serde_json::to_string(&f.to_json()).unwrap();
        assert!(j.starts_with(r#"{"degree":2,"basis":"schur","coeffs":[{"partition":[2]"#));
        let back: SymFuncJson = serde_json::from_str(&j).unwrap();
        assert_eq!(SymFunc::from_json(&back).unwrap(), f);
        assert_eq!(SymFunc::zero(3, Basis::Schur).to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let a = SymFunc::basis_element(Basis::Schur, p("2"));
        let b = SymFunc::basis_element(Basis::Monomial, p("2"));
        let d = a.sub(&b).unwrap();
        // s2 - m2 = m11
        assert_eq!(d.basis(), Basis::Schur);
        assert_eq!(
            d.to_monomial(),
            SymFunc::basis_element(Basis::Monomial, p("1,1"))
        );
        assert!(a.sub(&a).unwrap().is_zero());
        assert!(a
            .add(&SymFunc::basis_element(Basis::Schur, p("3")))
            .is_err());
    }
}
