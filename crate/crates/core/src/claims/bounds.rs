//! Linear bounds on cumulative counts, evaluated pointwise from a census
//! table.

use crate::census::{CensusTable, Scope};
use crate::lie::Family;
use crate::{Error, Result};

use super::report::{Margin, Witness};
use super::{ClaimId, ClaimReport};

/// How `R_k` is compared with `c k - s sqrt(k)`.
#[derive(Debug, Clone, Copy)]
enum Cmp {
    /// `R_k <= c k - s sqrt(k)`
    AtMost,
    /// `R_k < c k - s sqrt(k)`
    Below,
}

/// Exact test of `r (<|<=) c k - s sqrt(k)`.
fn bound_holds(r: u64, k: u64, c: u64, s: u64, cmp: Cmp) -> bool {
    let (r, lin) = (r as u128, c as u128 * k as u128);
    if s == 0 {
        return match cmp {
            Cmp::AtMost => r <= lin,
            Cmp::Below => r < lin,
        };
    }
    // r <= lin - s sqrt(k)  <=>  lin - r >= 0 and (lin - r)^2 >= s^2 k
    if lin < r {
        return false;
    }
    let gap = lin - r;
    let rhs = (s as u128).pow(2) * k as u128;
    match cmp {
        Cmp::AtMost => gap * gap >= rhs,
        Cmp::Below => gap > 0 && gap * gap > rhs,
    }
}

fn rhs_text(c: u64, s: u64, k: u64) -> String {
    if s == 0 {
        (c as u128 * k as u128).to_string()
    } else {
        format!("{c}*{k}-{s}*sqrt({k})")
    }
}

fn scope_name(scope: Scope) -> String {
    match scope {
        Scope::Family(f) => f.name().to_string(),
        Scope::Exceptional => "exceptional".into(),
        Scope::Total => "total".into(),
    }
}

/// Check `R_k (<|<=) c k - s sqrt(k)` for `k = 1..=n` over `cum`.
fn cumulative(rep: &mut ClaimReport, name: &str, cum: &[u64], n: u64, c: u64, s: u64, cmp: Cmp) {
    for k in 1..=n {
        let r = cum[k as usize];
        rep.checked_count += 1;
        if !bound_holds(r, k, c, s, cmp) {
            rep.violate(Witness::scope(name, k), r, rhs_text(c, s, k));
        }
        rep.offer(|| Witness::scope(name, k), Margin::new(r as u128, k as u128), |a, b| a > b);
    }
    rep.detail("margin", "max R_k / k");
}

fn require_families(table: &CensusTable, families: &[Family]) -> Result<()> {
    let have = table.config().sorted_families();
    match families.iter().find(|f| !have.contains(f)) {
        Some(f) => Err(Error::OutOfRange(format!("census does not include family {f}"))),
        None => Ok(()),
    }
}

/// `R_k(G) <= k` for every simple group `G` in the table and every
/// `k <= n`. Non-simple groups (only `SO_4`) are evaluated too but reported
/// in the details rather than as violations.
fn per_group_linear(rep: &mut ClaimReport, table: &CensusTable, n: u64) {
    for (group, dims) in table.groups() {
        // The sup of R_k(G)/k over k is attained at a dimension value, so
        // it is enough to look at the last index of each run of equal dims.
        let mut first_bad: Option<(u64, u64)> = None;
        let mut best: Option<(u64, u64)> = None;
        for (i, &d) in dims.iter().enumerate() {
            if d > n || dims.get(i + 1) == Some(&d) {
                continue;
            }
            let count = i as u64 + 1;
            if count > d && first_bad.is_none() {
                first_bad = Some((count, d));
            }
            if best.is_none_or(|(bc, bd)| (count as u128) * (bd as u128) > (bc as u128) * (d as u128)) {
                best = Some((count, d));
            }
        }
        let witness = |k: u64| Witness::group(group).with_k(k);
        if group.is_simple() {
            rep.checked_count += 1;
            if let Some((count, d)) = first_bad {
                rep.violate(witness(d), count, d);
            }
            if let Some((count, d)) = best {
                rep.offer(|| witness(d), Margin::new(count as u128, d as u128), |a, b| a > b);
            }
        } else {
            let key = format!("excluded non-simple {group}");
            let text = match (first_bad, best) {
                (Some((c, d)), Some((bc, bd))) => {
                    format!("R_k > k first at k={d} (R={c}); max R_k/k = {bc}/{bd}")
                }
                (None, Some((bc, bd))) => format!("R_k <= k throughout; max R_k/k = {bc}/{bd}"),
                _ => "no representations".to_string(),
            };
            rep.detail(&key, text);
        }
    }
    rep.detail("checked_count", "number of groups; each checked at every k <= N");
    rep.detail("margin", "max R_k(G) / k");
}

/// `sum_{2 <= r <= sqrt(k)} R_k(SL_r) < 33 k` for every `k <= n`.
fn sl_low_rank(rep: &mut ClaimReport, table: &CensusTable, n: u64) {
    let mut adds = vec![0u64; n as usize + 2];
    for (group, dims) in table.groups() {
        if group.family() != Family::Sl {
            continue;
        }
        let sq = group.rank().saturating_mul(group.rank());
        if sq > n {
            continue;
        }
        for &d in dims {
            adds[d.max(sq) as usize] += 1;
        }
    }
    let mut cum = vec![0u64; n as usize + 1];
    let mut acc = 0;
    for k in 1..=n as usize {
        acc += adds[k];
        cum[k] = acc;
    }
    cumulative(rep, "sl-low-rank", &cum, n, 33, 0, Cmp::Below);
}

/// Evaluate a table-based claim at every `k <= n` (or at `k = n` for
/// `sl-lower-3N`).
pub fn evaluate_bound_claim(id: ClaimId, n: u64, table: &CensusTable) -> Result<ClaimReport> {
    if n == 0 || n > table.max_dim() {
        return Err(Error::OutOfRange(format!("N = {n} outside the table range 1..={}", table.max_dim())));
    }
    let mut rep = ClaimReport::new(id, n);
    rep = rep.param("convention", table.config().convention);
    let family_bound = |rep: &mut ClaimReport, f: Family, c: u64, s: u64, cmp: Cmp| -> Result<()> {
        require_families(table, &[f])?;
        let scope = Scope::Family(f);
        cumulative(rep, &scope_name(scope), table.cumulative_slice(scope), n, c, s, cmp);
        Ok(())
    };
    match id {
        ClaimId::PerGroupLinear => per_group_linear(&mut rep, table, n),
        ClaimId::SoFamily13N => family_bound(&mut rep, Family::SoEven, 13, 0, Cmp::AtMost)?,
        ClaimId::SoOddFamily13N => family_bound(&mut rep, Family::SoOdd, 13, 0, Cmp::AtMost)?,
        ClaimId::SpFamily13N => family_bound(&mut rep, Family::Sp, 13, 0, Cmp::AtMost)?,
        ClaimId::SlFamily43N => family_bound(&mut rep, Family::Sl, 43, 0, Cmp::Below)?,
        ClaimId::SlFamilyRefined => family_bound(&mut rep, Family::Sl, 34, 27, Cmp::Below)?,
        ClaimId::SlLowRank33N => {
            require_families(table, &[Family::Sl])?;
            sl_low_rank(&mut rep, table, n);
        }
        ClaimId::Exceptional5N => {
            require_families(table, &Family::EXCEPTIONAL)?;
            cumulative(&mut rep, "exceptional", table.cumulative_slice(Scope::Exceptional), n, 5, 0, Cmp::Below);
        }
        ClaimId::Total78N => {
            require_families(table, &Family::ALL)?;
            cumulative(&mut rep, "total", table.cumulative_slice(Scope::Total), n, 78, 27, Cmp::AtMost);
        }
        ClaimId::SlLower3N => {
            require_families(table, &[Family::Sl])?;
            let r = table.cumulative_of(Scope::Family(Family::Sl), n)?;
            rep.checked_count = 1;
            let three_n = 3 * n as u128;
            if (r as u128) <= three_n {
                rep.violate(Witness::scope("sl", n), r, three_n);
            }
            rep.offer(|| Witness::scope("sl", n), Margin::new(r as u128, n as u128), |a, b| a > b);
            rep.detail("margin", "R_N / N");
        }
        other => {
            return Err(Error::InvariantViolation(format!("{} is not a table claim", other.id())));
        }
    }
    let (c, s) = id.constants();
    if c > 0 {
        rep = rep.param("c", c);
    }
    if s > 0 {
        rep = rep.param("s", s);
    }
    Ok(rep)
}
