//! Independent oracle for the census: full box enumeration with the literal
//! product formulas, no pruning and no fast evaluator.
//!
//! The box for a group is built from generators: column `(1^p)` of
//! `lambda` (classical) or a fundamental weight (exceptional). Generator
//! dimensions come from textbook closed forms and are scanned at every
//! position. A weight `sum c_p g_p` has dimension at least that of each
//! `c_p g_p`, so every weight of dimension `<= N` lies in the box
//! `c_p <= u_p` where `u_p` is the largest `c` with `dim(c g_p) <= N`.

#![allow(dead_code)]

pub mod lemmas;

use std::collections::BTreeSet;

use irrepcount::census::Convention;
use irrepcount::lie::dim;
use irrepcount::roots::{exceptional_system, weyl_dim};
use irrepcount::{Family, GroupId, WeightTuple};
use num_bigint::BigUint;

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u128::MAX;
        }
    }
    acc
}

/// Dimension of the representation with one column `(1^p)` (or the
/// corresponding fundamental weight for `SL_n`).
pub fn column_dim(family: Family, n: u64, p: u64) -> u128 {
    match family {
        Family::Sl => binom(n, p),
        Family::SoOdd => binom(2 * n + 1, p),
        Family::Sp => match binom(2 * n, p) {
            // saturated: the difference is unknown but certainly huge
            u128::MAX => u128::MAX,
            b => b - if p >= 2 { binom(2 * n, p - 2) } else { 0 },
        },
        Family::SoEven if p < n => binom(2 * n, p),
        Family::SoEven => binom(2 * n, n) / 2,
        _ => unreachable!(),
    }
}

/// Number of generator positions.
fn positions(group: GroupId) -> u64 {
    group.tuple_len() as u64
}

/// Weight `sum_p coef_p g_p` in the group's own coordinates.
pub fn weight_from_coefs(group: GroupId, coefs: &[u64]) -> WeightTuple {
    let len = group.tuple_len();
    match group.family() {
        Family::Sl => WeightTuple(coefs.iter().map(|c| c + 1).collect()),
        Family::SoOdd | Family::SoEven | Family::Sp => {
            let mut lam = vec![0u64; len];
            let mut acc = 0;
            for i in (0..len).rev() {
                acc += coefs[i];
                lam[i] = acc;
            }
            WeightTuple(lam)
        }
        _ => WeightTuple(coefs.to_vec()),
    }
}

fn oracle_dim(group: GroupId, coefs: &[u64]) -> BigUint {
    if group.family().is_exceptional() {
        weyl_dim(exceptional_system(group.family()).unwrap(), coefs).unwrap()
    } else {
        dim(group, &weight_from_coefs(group, coefs)).unwrap()
    }
}

/// Per-position coefficient bounds.
pub fn generator_box(group: GroupId, n: u64) -> Vec<u64> {
    let r = positions(group);
    (1..=r)
        .map(|p| {
            let fits = if group.family().is_exceptional() {
                true
            } else {
                column_dim(group.family(), group.rank(), p) <= n as u128
            };
            if !fits {
                return 0;
            }
            let mut c = 0;
            loop {
                let mut coefs = vec![0; r as usize];
                coefs[(p - 1) as usize] = c + 1;
                if oracle_dim(group, &coefs) > BigUint::from(n) {
                    break c;
                }
                c += 1;
            }
        })
        .collect()
}

pub type Rec = (GroupId, WeightTuple, BigUint);

/// Every nontrivial weight of `group` with dimension `<= n`.
pub fn oracle_group(group: GroupId, n: u64) -> Vec<Rec> {
    let bounds = generator_box(group, n);
    let mut out = Vec::new();
    let mut coefs = vec![0u64; bounds.len()];
    loop {
        if coefs.iter().any(|&c| c > 0) {
            let d = oracle_dim(group, &coefs);
            if d <= BigUint::from(n) {
                let w = if group.family().is_exceptional() {
                    WeightTuple(coefs.clone())
                } else {
                    weight_from_coefs(group, &coefs)
                };
                out.push((group, w, d));
            }
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == bounds.len() {
                return out;
            }
            if coefs[i] < bounds[i] {
                coefs[i] += 1;
                break;
            }
            coefs[i] = 0;
            i += 1;
        }
    }
}

fn convention_floor(convention: Convention, family: Family) -> u64 {
    match (convention, family) {
        (Convention::StrictSimple, Family::SoOdd) => 3,
        (Convention::StrictSimple, Family::SoEven) => 4,
        (Convention::StrictSimple, Family::Sp) => 2,
        (_, f) => f.min_rank(),
    }
}

/// Groups that can have a nontrivial representation of dimension `<= n`:
/// some generator's closed-form dimension is `<= n`. Classical ranks are
/// scanned far enough that the smallest generator is the defining
/// representation of dimension `> n`.
pub fn oracle_groups(n: u64, families: &[Family], convention: Convention) -> Vec<GroupId> {
    let mut out = Vec::new();
    for &f in families {
        if f.is_exceptional() {
            let g = GroupId::exceptional(f).unwrap();
            let rs = exceptional_system(f).unwrap();
            let fits = (0..rs.rank()).any(|p| {
                let mut e = vec![0; rs.rank()];
                e[p] = 1;
                weyl_dim(rs, &e).unwrap() <= BigUint::from(n)
            });
            if fits {
                out.push(g);
            }
            continue;
        }
        for rank in convention_floor(convention, f)..=n + 2 {
            let g = GroupId::new(f, rank).unwrap();
            if (1..=positions(g)).any(|p| column_dim(f, rank, p) <= n as u128) {
                out.push(g);
            }
        }
    }
    out.sort();
    out
}

/// Full oracle census in canonical order.
pub fn oracle_census(n: u64, families: &[Family], convention: Convention) -> Vec<Rec> {
    let mut out = Vec::new();
    for g in oracle_groups(n, families, convention) {
        let mut recs = oracle_group(g, n);
        recs.sort();
        out.extend(recs);
    }
    out
}

pub fn as_set(recs: &[Rec]) -> BTreeSet<Rec> {
    recs.iter().cloned().collect()
}

/// Small deterministic generator for tests that want reproducible
/// pseudo-random input without pulling in proptest.
pub fn rng(seed: u64) -> rand::rngs::StdRng {
    use rand::SeedableRng;
    rand::rngs::StdRng::seed_from_u64(seed)
}

/// Random dominant weight for a classical group, with entries up to `top`.
pub fn random_weight(rng: &mut impl rand::Rng, group: GroupId, top: u64) -> WeightTuple {
    let len = group.tuple_len();
    if group.family() == Family::Sl {
        return WeightTuple((0..len).map(|_| rng.gen_range(1..=top + 1)).collect());
    }
    let mut v: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=top)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    WeightTuple(v)
}
