//! LLT polynomials against a brute-force count of fillings written straight
//! from the definition.

use std::collections::BTreeMap;

use macllt::combinat::{
    cells_from_dyck, partitions, Cell, DyckPath, Partition, Ribbon, ShapeTuple, SkewShape,
};
use macllt::llt::{llt_coefficient, llt_poly, llt_poly_many, llt_unicellular};
use macllt::polyring::LaurentPoly;
use proptest::prelude::*;

struct Flat {
    // (component, cell)
    cells: Vec<(usize, Cell)>,
}

impl Flat {
    fn new(t: &ShapeTuple) -> Self {
        let cells = t
            .components()
            .iter()
            .enumerate()
            .flat_map(|(k, s)| s.cells().iter().map(move |&c| (k, c)))
            .collect();
        Flat { cells }
    }

    fn at(&self, k: usize, row: u32, col: u32) -> Option<usize> {
        self.cells
            .iter()
            .position(|&(j, c)| j == k && c.row == row && c.col == col)
    }

    fn semistandard(&self, f: &[u32]) -> bool {
        self.cells.iter().enumerate().all(|(i, &(k, c))| {
            let row_ok = c.col == 1 || self.at(k, c.row, c.col - 1).is_none_or(|j| f[j] <= f[i]);
            let col_ok = c.row == 1 || self.at(k, c.row - 1, c.col).is_none_or(|j| f[j] < f[i]);
            row_ok && col_ok
        })
    }

    fn inversions(&self, f: &[u32]) -> i64 {
        let mut n = 0;
        for (i, &(ku, u)) in self.cells.iter().enumerate() {
            for (j, &(kv, v)) in self.cells.iter().enumerate() {
                if f[i] <= f[j] {
                    continue;
                }
                let same = ku < kv && u.content() == v.content();
                let next = ku > kv && u.content() == v.content() + 1;
                n += (same || next) as i64;
            }
        }
        n
    }
}

/// Monomial coefficients of `LLT_t` by listing every filling of each content.
fn oracle(t: &ShapeTuple) -> BTreeMap<Partition, LaurentPoly> {
    let flat = Flat::new(t);
    let n = flat.cells.len();
    let mut out = BTreeMap::new();
    for lambda in partitions(n) {
        let mut word: Vec<u32> = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| std::iter::repeat_n(i as u32 + 1, p as usize))
            .collect();
        let mut poly = LaurentPoly::zero();
        loop {
            if flat.semistandard(&word) {
                poly = &poly + &LaurentPoly::q_pow(flat.inversions(&word));
            }
            if !next_permutation(&mut word) {
                break;
            }
        }
        if !poly.is_zero() {
            out.insert(lambda, poly);
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn monomials(t: &ShapeTuple) -> BTreeMap<Partition, LaurentPoly> {
    llt_poly(t)
        .unwrap()
        .to_monomial()
        .coeffs()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p.clone(), c.clone()))
        .collect()
}

fn tuple(s: &str) -> ShapeTuple {
    s.parse().unwrap()
}

#[test]
fn hand_picked_tuples_match_brute_force() {
    for s in [
        "C1;C1",
        "H[1];V[1]",
        "V[1];H[1]",
        "C0;C1;C2",
        "C2;C1;C0",
        "H[1];C1;C2",
        "V[0];V[1];C1",
    ] {
        let t = tuple(s);
        assert_eq!(monomials(&t), oracle(&t), "{s}");
    }
}

#[test]
fn skew_components_match_brute_force() {
    let outer = Partition::new(vec![3, 2]).unwrap();
    let inner = Partition::new(vec![1]).unwrap();
    let skew = SkewShape::skew(&outer, &inner).unwrap();
    let t = ShapeTuple::new(vec![skew, SkewShape::single(0)]);
    assert_eq!(monomials(&t), oracle(&t));
}

#[test]
fn unicellular_examples_match_brute_force() {
    for d in DyckPath::all(4) {
        let f: BTreeMap<_, _> = llt_unicellular(&d)
            .unwrap()
            .to_monomial()
            .coeffs()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect();
        let cells = cells_from_dyck(&d).to_shapes();
        assert_eq!(f, oracle(&cells), "{d:?}");
    }
}

#[test]
fn coefficient_is_symmetric_in_the_composition() {
    let t = tuple("H[1];C1;V[2]");
    let a = llt_coefficient(&t, &[2, 1, 2]).unwrap();
    let b = llt_coefficient(&t, &[1, 2, 2]).unwrap();
    let c = llt_coefficient(&t, &[2, 2, 1]).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_eq!(c, oracle(&t)[&Partition::new(vec![2, 2, 1]).unwrap()]);
}

fn ribbon() -> impl Strategy<Value = Ribbon> {
    (-2i64..=2, 1usize..=3, any::<u8>()).prop_map(|(lo, len, pick)| {
        let all = Ribbon::all_with(lo, len);
        all[pick as usize % all.len()].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_ribbon_tuples_match_brute_force(rs in prop::collection::vec(ribbon(), 1..=3)) {
        let t = ShapeTuple::from_ribbons(rs);
        prop_assume!(t.num_cells() <= 6);
        prop_assert_eq!(monomials(&t), oracle(&t));
    }

    #[test]
    fn grouped_evaluation_agrees(rs in prop::collection::vec(ribbon(), 2..=3)) {
        let t = ShapeTuple::from_ribbons(rs.clone());
        let mut rev = rs;
        rev.reverse();
        let r = ShapeTuple::from_ribbons(rev);
        let many = llt_poly_many(&[t.clone(), r.clone()]).unwrap();
        prop_assert_eq!(&many[0], &llt_poly(&t).unwrap());
        prop_assert_eq!(&many[1], &llt_poly(&r).unwrap());
    }

    #[test]
    fn order_of_components_is_invisible_at_q_one(rs in prop::collection::vec(ribbon(), 2..=3)) {
        let t = ShapeTuple::from_ribbons(rs.clone());
        let mut rev = rs;
        rev.reverse();
        let r = ShapeTuple::from_ribbons(rev);
        let (a, b) = (llt_poly(&t).unwrap(), llt_poly(&r).unwrap());
        prop_assert_eq!(a.eval_at_one(), b.eval_at_one());
    }
}
