//! Brute-force versions of the `SO_{2n}` tuple lemmas: every record from the
//! oracle census, classified and mapped with the tuple functions, and
//! measured with the literal product formula.

use std::collections::BTreeMap;

use irrepcount::census::Convention;
use irrepcount::claims::{classify_tuple, map_type1, map_type2, TupleCase};
use irrepcount::lie::{dim_so_even, lambda_to_l};
use irrepcount::{Family, LTuple};
use num_bigint::BigUint;
use num_rational::Ratio;

use super::oracle_census;

pub struct Tuple {
    pub l: LTuple,
    pub dim: BigUint,
}

pub fn so_even_tuples(n: u64) -> Vec<Tuple> {
    oracle_census(n, &[Family::SoEven], Convention::Paper)
        .into_iter()
        .map(|(g, w, d)| Tuple { l: lambda_to_l(g, &w).unwrap(), dim: d })
        .collect()
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub checked: u64,
    /// (l, lhs, rhs) for each failure, sorted.
    pub violations: Vec<(Vec<u64>, BigUint, BigUint)>,
    pub extremal: Option<Ratio<BigUint>>,
}

fn head_is_tight(l: &LTuple) -> bool {
    let v = l.values();
    v.len() >= 2 && v[0] == v[1] + 1
}

/// `4 dim(image) <= dim` for every tuple with `l_1 = l_2 + 1`; extremal is
/// the smallest `dim / dim(image)`.
pub fn lemma1(tuples: &[Tuple]) -> Outcome {
    let mut out = Outcome::default();
    for t in tuples.iter().filter(|t| head_is_tight(&t.l)) {
        if t.l.rank() > 6 {
            assert_eq!(classify_tuple(&t.l).unwrap(), TupleCase::Type1);
        }
        out.checked += 1;
        let img = dim_so_even(&map_type1(&t.l).unwrap()).unwrap();
        let lhs = BigUint::from(4u32) * &img;
        if lhs > t.dim {
            out.violations.push((t.l.values().to_vec(), lhs, t.dim.clone()));
        }
        let r = Ratio::new(t.dim.clone(), img);
        if out.extremal.as_ref().is_none_or(|e| &r < e) {
            out.extremal = Some(r);
        }
    }
    out.violations.sort();
    out
}

fn type2(tuples: &[Tuple]) -> impl Iterator<Item = &Tuple> {
    tuples.iter().filter(|t| t.l.rank() > 6 && !head_is_tight(&t.l)).inspect(|t| {
        assert_eq!(classify_tuple(&t.l).unwrap(), TupleCase::Type2);
    })
}

/// `4096 dim(image) <= 729 dim` on rank `> 6` tuples with `l_1 > l_2 + 1`;
/// extremal is the largest `dim(image) / dim`.
pub fn lemma2(tuples: &[Tuple]) -> Outcome {
    let mut out = Outcome::default();
    for t in type2(tuples) {
        out.checked += 1;
        let img = dim_so_even(&map_type2(&t.l).unwrap()).unwrap();
        let (lhs, rhs) = (BigUint::from(4096u32) * &img, BigUint::from(729u32) * &t.dim);
        if lhs > rhs {
            out.violations.push((t.l.values().to_vec(), lhs, rhs));
        }
        let r = Ratio::new(img, t.dim.clone());
        if out.extremal.as_ref().is_none_or(|e| &r > e) {
            out.extremal = Some(r);
        }
    }
    out.violations.sort();
    out
}

/// Largest number of type-2 tuples sharing one image, and the number of
/// tuples checked.
pub fn multiplicity(tuples: &[Tuple]) -> (u64, u64) {
    let mut classes: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    let mut checked = 0;
    for t in type2(tuples) {
        checked += 1;
        *classes.entry(map_type2(&t.l).unwrap().values().to_vec()).or_default() += 1;
    }
    (checked, classes.values().copied().max().unwrap_or(0))
}
