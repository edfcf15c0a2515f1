//! Checks on `SL_n` for `n` past `sqrt(N)`: a few probe tuples already
//! exceed `N`, and each such group has only a handful of representations of
//! dimension `<= N`.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::census;
use crate::lie::{dim, Family, GroupId, WeightTuple};
use crate::Result;

use super::report::{Margin, Witness};
use super::{ClaimId, ClaimReport};

/// Largest per-rank count allowed by the tail claim.
pub const TAIL_LIMIT: u64 = 7;

struct Probe {
    name: &'static str,
    /// Position (0-based) and value of the single non-1 label.
    pos: usize,
    value: u64,
    /// Closed form at tuple length `len`, i.e. for `SL_{len+1}`.
    closed: fn(u64) -> u128,
}

const PROBES: [Probe; 3] = [
    // third symmetric power: (L+3)(L+2)(L+1)/6
    Probe {
        name: "(4,1,...,1)",
        pos: 0,
        value: 4,
        closed: |l| {
            let l = l as u128;
            (l + 3) * (l + 2) * (l + 1) / 6
        },
    },
    // (L+1)^2 L (L+2)/12
    Probe {
        name: "(1,3,1,...,1)",
        pos: 1,
        value: 3,
        closed: |l| {
            let l = l as u128;
            (l + 1) * (l + 1) * l * (l + 2) / 12
        },
    },
    // third exterior power: C(L+1, 3)
    Probe {
        name: "(1,1,2,1,...,1)",
        pos: 2,
        value: 2,
        closed: |l| {
            let l = l as u128;
            (l + 1) * l * (l - 1) / 6
        },
    },
];

fn probe_weight(len: u64, pos: usize, value: u64) -> WeightTuple {
    let mut a = vec![1u64; len as usize];
    a[pos] = value;
    WeightTuple(a)
}

fn sl_group(len: u64) -> GroupId {
    GroupId::new(Family::Sl, len + 1).expect("length >= 1")
}

/// Evaluate the three probe tuples at lengths `floor(sqrt(n))` and one
/// more, and report any that do not exceed `n`. Requires `n >= 16`;
/// smaller `n` gives a vacuous report.
pub fn check_sl_prefix(n: u64) -> Result<ClaimReport> {
    let m = n.isqrt();
    let mut rep = ClaimReport::new(ClaimId::SlPrefixProbes, n).param("m", m);
    if n < 16 {
        rep.detail("skipped", "needs N >= 16");
        return Ok(rep);
    }
    for len in [m, m + 1] {
        let group = sl_group(len);
        for p in &PROBES {
            let w = probe_weight(len, p.pos, p.value);
            let d = dim(group, &w)?;
            let closed = BigUint::from((p.closed)(len));
            rep.checked_count += 1;
            rep.detail(&format!("{} length {len}", p.name), format!("dim {d}, closed form {closed}"));
            let witness = || Witness::group(group).with_weight(w.clone()).with_k(n);
            if d <= BigUint::from(n) {
                rep.violate(witness(), &d, n);
            }
            if d != closed {
                rep.violate(witness(), &d, format!("closed form {closed}"));
            }
            let ratio = Margin::new(u128::try_from(&d).unwrap_or(u128::MAX), n as u128);
            rep.offer(witness, ratio, |a, b| a < b);
        }
    }
    let control = probe_weight(m, 0, 2);
    let d = dim(sl_group(m), &control)?;
    rep.detail(&format!("control (2,1,...,1) length {m}"), format!("dim {d}"));
    rep.detail("margin", "min dim(probe) / N");
    Ok(rep)
}

/// Count the nontrivial representations of dimension `<= n` of every
/// `SL_r` with `floor(sqrt(n)) < r <= n` and flag counts above 7. Requires
/// `n >= 4`; smaller `n` gives a vacuous report.
pub fn check_sl_tail(n: u64) -> Result<ClaimReport> {
    let m = n.isqrt();
    let mut rep = ClaimReport::new(ClaimId::SlTail7, n).param("limit", TAIL_LIMIT).param("m", m);
    if n < 4 {
        rep.detail("skipped", "needs N >= 4");
        return Ok(rep);
    }
    let last = census::rank_cutoff(Family::Sl, n).unwrap_or(0);
    let ranks: Vec<u64> = (m + 1..=last).collect();
    let counts: Vec<Result<usize>> =
        ranks.par_iter().map(|&r| Ok(census::group_dims(GroupId::new(Family::Sl, r)?, n)?.len())).collect();
    let mut histogram = std::collections::BTreeMap::new();
    for (&r, count) in ranks.iter().zip(counts) {
        let count = count? as u64;
        let group = GroupId::new(Family::Sl, r)?;
        rep.checked_count += 1;
        *histogram.entry(count).or_insert(0u64) += 1;
        if count > TAIL_LIMIT {
            rep.violate(Witness::group(group).with_k(n), count, TAIL_LIMIT);
        }
        rep.offer(|| Witness::group(group).with_k(n), Margin::from_integer(count as u128), |a, b| a > b);
    }
    let hist: Vec<String> = histogram.iter().map(|(c, k)| format!("{c}:{k}")).collect();
    rep.detail("count histogram (count:ranks)", hist.join(" "));
    rep.detail("margin", "largest per-rank count");
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_at_100() {
        let rep = check_sl_prefix(100).unwrap();
        assert!(rep.violations.is_empty());
        assert_eq!(rep.checked_count, 6);
        assert_eq!(rep.details["(4,1,...,1) length 10"], "dim 286, closed form 286");
        assert_eq!(rep.details["control (2,1,...,1) length 10"], "dim 11");
    }

    #[test]
    fn tail_small() {
        let rep = check_sl_tail(4).unwrap();
        // SL_3 has (2,1), (1,2) of dimension 3; SL_4 has its two of dimension 4
        assert_eq!(rep.checked_count, 2);
        assert!(rep.violations.is_empty());
        assert_eq!(rep.extremal.unwrap().margin, Margin::from_integer(2));
    }
}
