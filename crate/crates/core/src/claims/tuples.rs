//! The case split on `SO_{2n}` tuples and the two reduction maps used to
//! bound `R_N` for that family, with checkers for the lemmas about them.
//!
//! The checkers scan weights in column form (`c_p = lambda_p -
//! lambda_{p+1}`), where both maps are simple: dropping the head of a tuple
//! with `lambda_1 = lambda_2` drops column 1 and shifts the rest, and
//! replacing `l_1` by `floor((l_1 + l_2)/2)` sends `c_1` to
//! `floor((c_1 - 1)/2)`. Full tuples are only built for witnesses.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::census::{self, blocks_of_columns, classical_dim_exact, weight_of_columns, Columns};
use crate::lie::{lambda_to_l, Family, GroupId, LTuple};
use crate::{Error, Result};

use super::report::{Margin, Witness};
use super::{ClaimId, ClaimReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TupleCase {
    /// `l_1 = l_2 + 1` and rank `> 6`.
    Type1,
    /// `l_1 > l_2 + 1` and rank `> 6`.
    Type2,
    /// Rank `<= 6`, whatever the head looks like.
    Type3,
}

/// Largest rank handled by the low-rank case.
pub const LOW_RANK_MAX: usize = 6;

/// Case of a nontrivial `SO_{2n}` tuple. Low rank takes precedence over the
/// head test.
pub fn classify_tuple(l: &LTuple) -> Result<TupleCase> {
    if l.family() != Family::SoEven {
        return Err(Error::UnsupportedFamily { family: l.family(), op: "classify_tuple" });
    }
    if l.is_base() {
        return Err(Error::InvariantViolation(format!("{l} is the trivial tuple")));
    }
    let v = l.values();
    Ok(if v.len() <= LOW_RANK_MAX {
        TupleCase::Type3
    } else if v[0] == v[1] + 1 {
        TupleCase::Type1
    } else {
        TupleCase::Type2
    })
}

/// Drop `l_1`; the rest is a tuple of rank `n - 1`.
pub fn map_type1(l: &LTuple) -> Result<LTuple> {
    if l.rank() < 2 {
        return Err(Error::OutOfRange(format!("cannot drop the head of rank-1 tuple {l}")));
    }
    LTuple::new(l.family(), l.values()[1..].to_vec())
}

/// Replace `l_1` by `floor((l_1 + l_2) / 2)`. Needs `l_1 > l_2 + 1`.
pub fn map_type2(l: &LTuple) -> Result<LTuple> {
    if l.family() != Family::SoEven {
        return Err(Error::UnsupportedFamily { family: l.family(), op: "map_type2" });
    }
    let v = l.values();
    if v.len() < 2 || v[0] <= v[1] + 1 {
        return Err(Error::InvariantViolation(format!("map_type2 needs l_1 > l_2 + 1, got {l}")));
    }
    let mut out = v.to_vec();
    out[0] = (v[0] + v[1]) / 2;
    LTuple::new(Family::SoEven, out)
}

fn so_even_dim(rank: u64, cols: &Columns) -> Result<u64> {
    let d = classical_dim_exact(Family::SoEven, rank, &blocks_of_columns(cols, rank))?;
    u64::try_from(&d).map_err(|_| Error::OutOfRange(format!("dimension {d} does not fit in u64")))
}

fn tuple_witness(group: GroupId, cols: &Columns) -> Witness {
    let weight = weight_of_columns(group, cols);
    let l = lambda_to_l(group, &weight).expect("census weights are dominant");
    Witness::group(group).with_weight(weight).with_l(l.values().to_vec())
}

/// Every nontrivial `SO_{2n}` weight (rank `>= 2`) with dimension `<= n`.
fn for_each_so_even<F>(n: u64, mut f: F) -> Result<()>
where
    F: FnMut(GroupId, &Columns, u64) -> Result<()>,
{
    let Some(last) = census::rank_cutoff(Family::SoEven, n) else { return Ok(()) };
    for rank in Family::SoEven.min_rank()..=last {
        let group = GroupId::new(Family::SoEven, rank)?;
        let mut seen = Vec::new();
        census::visit_group(group, n, |cols, d| seen.push((cols.to_vec(), d)))?;
        seen.sort_unstable();
        for (cols, d) in seen {
            f(group, &cols, d)?;
        }
    }
    Ok(())
}

/// `4 dim(map_type1(l)) <= dim(l)` over all nontrivial `SO_{2n}` tuples
/// with `l_1 = l_2 + 1` and `dim <= n`, at every rank.
pub fn check_lemma1(n: u64) -> Result<ClaimReport> {
    let mut rep = ClaimReport::new(ClaimId::Lemma1Quarter, n).param("factor", 4);
    for_each_so_even(n, |group, cols, d| {
        if cols[0].0 == 1 {
            return Ok(());
        }
        rep.checked_count += 1;
        let rank = group.rank();
        let image: Vec<(u64, u64)> = cols.iter().map(|&(p, c)| (p - 1, c)).collect();
        let img = so_even_dim(rank - 1, &image)?;
        let ratio = Margin::new(d as u128, img as u128);
        if 4 * img > d {
            rep.violate_ratio(tuple_witness(group, cols), 4 * img, d, ratio);
        }
        rep.offer(|| tuple_witness(group, cols), ratio, |a, b| a < b);
        Ok(())
    })?;
    rep.detail("margin", "min dim(l) / dim(image)");
    Ok(rep)
}

fn type2_image(cols: &Columns) -> Vec<(u64, u64)> {
    let mut out = cols.to_vec();
    out[0].1 = (out[0].1 - 1) / 2;
    if out[0].1 == 0 {
        out.remove(0);
    }
    out
}

fn is_type2(group: GroupId, cols: &Columns) -> bool {
    group.rank() as usize > LOW_RANK_MAX && cols[0].0 == 1
}

/// `dim(map_type2(l)) <= (3/4)^6 dim(l)` over tuples of rank `> 6` with
/// `l_1 > l_2 + 1` and `dim <= n`, compared as `4^6 lhs <= 3^6 rhs`.
pub fn check_lemma2(n: u64) -> Result<ClaimReport> {
    let mut rep = ClaimReport::new(ClaimId::Lemma2ThreeQuarters, n).param("factor", "729/4096");
    for_each_so_even(n, |group, cols, d| {
        if !is_type2(group, cols) {
            return Ok(());
        }
        rep.checked_count += 1;
        let img = so_even_dim(group.rank(), &type2_image(cols))?;
        let (lhs, rhs) = (4096 * img as u128, 729 * d as u128);
        let ratio = Margin::new(img as u128, d as u128);
        if lhs > rhs {
            rep.violate_ratio(tuple_witness(group, cols), lhs, rhs, ratio);
        }
        rep.offer(|| tuple_witness(group, cols), ratio, |a, b| a > b);
        Ok(())
    })?;
    rep.detail("margin", "max dim(image) / dim(l)");
    Ok(rep)
}

/// Sizes of the classes of type-2 tuples with `dim <= n` that share an
/// image under [`map_type2`].
pub fn check_map_multiplicity(n: u64) -> Result<ClaimReport> {
    let mut rep = ClaimReport::new(ClaimId::MapMultiplicity2, n).param("max_class", 2);
    let mut classes: HashMap<(GroupId, Vec<(u64, u64)>), u64> = HashMap::new();
    let mut order = Vec::new();
    for_each_so_even(n, |group, cols, _| {
        if !is_type2(group, cols) {
            return Ok(());
        }
        rep.checked_count += 1;
        let key = (group, type2_image(cols));
        let count = classes.entry(key.clone()).or_insert(0);
        if *count == 0 {
            order.push(key);
        }
        *count += 1;
        Ok(())
    })?;
    for key in &order {
        let size = classes[key];
        let (group, image) = key;
        if size > 2 {
            rep.violate(tuple_witness(*group, image), size, 2);
        }
        rep.offer(|| tuple_witness(*group, image), Margin::from_integer(size as u128), |a, b| a > b);
    }
    rep.detail("classes", order.len());
    rep.detail("margin", "largest class size; witness is the shared image");
    Ok(rep)
}

/// Dimensions of `l` and `map_type1(l)` through the literal formulas.
pub fn lemma1_sides(l: &LTuple) -> Result<(BigUint, BigUint)> {
    Ok((crate::lie::dim_so_even(l)?, crate::lie::dim_so_even(&map_type1(l)?)?))
}
