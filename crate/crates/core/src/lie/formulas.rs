//! The four classical dimension formulas, evaluated literally as products
//! over pairs of coordinates.
//!
//! Factors that are exactly one (pairs of coordinates that both carry a zero
//! weight, or `SL` windows made only of unit labels) are skipped, so the
//! cost is `O(n * k)` for a weight with `k` non-trivial coordinates rather
//! than `O(n^2)`.

use num_bigint::BigUint;

use super::exact::ExactRatio;
use super::types::{base_value, Family, GroupId, LTuple, WeightTuple};
use crate::roots;
use crate::{Error, Result};

/// Shift a dominant `SO`/`Sp` weight to its strictly decreasing `l`-tuple.
pub fn lambda_to_l(group: GroupId, weight: &WeightTuple) -> Result<LTuple> {
    let family = group.family();
    if !matches!(family, Family::SoOdd | Family::SoEven | Family::Sp) {
        return Err(Error::UnsupportedFamily { family, op: "lambda_to_l" });
    }
    weight.validate(group)?;
    let n = group.rank() as usize;
    let values = weight
        .coords()
        .iter()
        .enumerate()
        .map(|(idx, &lam)| {
            let m = base_value(family, n, idx + 1);
            if family == Family::SoOdd {
                2 * lam + m
            } else {
                lam + m
            }
        })
        .collect();
    LTuple::new(family, values)
}

/// Inverse of [`lambda_to_l`].
pub fn l_to_lambda(l: &LTuple) -> Result<WeightTuple> {
    let coords = (1..=l.rank())
        .map(|i| {
            let (v, m) = (l.values()[i - 1], l.base_at(i));
            if v < m {
                return Err(Error::OutOfRange(format!("l_{i} = {v} is below m_{i} = {m}")));
            }
            Ok(if l.family() == Family::SoOdd { (v - m) / 2 } else { v - m })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightTuple(coords))
}

/// Visit the non-unit factors `(numerator, denominator)` of the product
/// formula for an `SO`/`Sp` tuple.
fn orthogonal_factors(l: &LTuple, mut visit: impl FnMut(u128, u128)) {
    let n = l.rank();
    let vals = l.values();
    let m: Vec<u128> = (1..=n).map(|i| l.base_at(i) as u128).collect();
    // Nonzero weights form a prefix since the weight is dominant.
    let k = (0..n).take_while(|&i| vals[i] as u128 != m[i]).count();
    for i in 0..k {
        let li = vals[i] as u128;
        for j in (i + 1)..n {
            let lj = vals[j] as u128;
            visit(li * li - lj * lj, m[i] * m[i] - m[j] * m[j]);
        }
    }
    if matches!(l.family(), Family::SoOdd | Family::Sp) {
        for i in 0..k {
            visit(vals[i] as u128, m[i]);
        }
    }
}

/// Every factor of the formula for `l`, unit factors included. Intended
/// for inspection and testing; the dimension functions skip unit factors.
pub fn formula_factors(l: &LTuple) -> Vec<(u128, u128)> {
    let n = l.rank();
    let vals = l.values();
    let m: Vec<u128> = (1..=n).map(|i| l.base_at(i) as u128).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (li, lj) = (vals[i] as u128, vals[j] as u128);
            out.push((li * li - lj * lj, m[i] * m[i] - m[j] * m[j]));
        }
    }
    if matches!(l.family(), Family::SoOdd | Family::Sp) {
        for i in 0..n {
            out.push((vals[i] as u128, m[i]));
        }
    }
    out
}

fn orthogonal_dim(l: &LTuple, family: Family, op: &'static str) -> Result<BigUint> {
    if l.family() != family {
        return Err(Error::UnsupportedFamily { family: l.family(), op });
    }
    let mut acc = ExactRatio::new();
    orthogonal_factors(l, |a, b| acc.mul_wide(a, b));
    acc.finish(|| format!("{op} at l = {l}"))
}

/// `prod_{i<j} (l_i^2 - l_j^2)/(m_i^2 - m_j^2)` with `l_i = lambda_i + n - i`.
pub fn dim_so_even(l: &LTuple) -> Result<BigUint> {
    orthogonal_dim(l, Family::SoEven, "dim_so_even")
}

/// The `SO_{2n+1}` formula on doubled coordinates: the pair ratios are
/// homogeneous and the singleton ratios `l_i/m_i` double in both places, so
/// the doubling cancels.
pub fn dim_so_odd(l: &LTuple) -> Result<BigUint> {
    orthogonal_dim(l, Family::SoOdd, "dim_so_odd")
}

/// The `Sp_{2n}` formula, `l_i = lambda_i + n - i + 1`.
pub fn dim_sp(l: &LTuple) -> Result<BigUint> {
    orthogonal_dim(l, Family::Sp, "dim_sp")
}

fn check_sl_labels(labels: &[u64], n: u64) -> Result<()> {
    if n < 2 || labels.len() as u64 != n - 1 {
        return Err(Error::InvariantViolation(format!(
            "SL_{n} expects {} labels, got {}",
            n.saturating_sub(1),
            labels.len()
        )));
    }
    if labels.contains(&0) {
        return Err(Error::InvariantViolation("SL labels must be >= 1".into()));
    }
    Ok(())
}

/// Visit the non-unit factors `(a_i + ... + a_{j-1}) / (j - i)`.
fn sl_factors(labels: &[u64], mut visit: impl FnMut(u128, u128)) {
    let n = labels.len() + 1;
    // prefix[p] = a_1 + ... + a_p
    let mut prefix = vec![0u128; n];
    for p in 1..n {
        prefix[p] = prefix[p - 1] + labels[p - 1] as u128;
    }
    // next[i] = first p >= i with a_p != 1 (1-based), or n if none.
    let mut next = vec![n; n + 1];
    for p in (1..n).rev() {
        next[p] = if labels[p - 1] != 1 { p } else { next[p + 1] };
    }
    for i in 1..n {
        let first = next[i];
        if first >= n {
            continue;
        }
        for j in (first + 1)..=n {
            visit(prefix[j - 1] - prefix[i - 1], (j - i) as u128);
        }
    }
}

/// Every factor of the `SL` formula, unit factors included.
pub fn sl_formula_factors(labels: &[u64]) -> Vec<(u128, u128)> {
    let n = labels.len() + 1;
    let mut out = Vec::new();
    for i in 1..n {
        let mut window = 0u128;
        for j in (i + 1)..=n {
            window += labels[j - 2] as u128;
            out.push((window, (j - i) as u128));
        }
    }
    out
}

/// `prod_{1<=i<j<=n} (a_i + ... + a_{j-1}) / (j - i)` over shifted labels
/// `a_i >= 1` of `SL_n`.
pub fn dim_sl(labels: &WeightTuple, n: u64) -> Result<BigUint> {
    check_sl_labels(labels.coords(), n)?;
    let mut acc = ExactRatio::new();
    sl_factors(labels.coords(), |a, b| acc.mul_wide(a, b));
    acc.finish(|| format!("dim_sl at SL_{n}, a = {labels}"))
}

/// Dimension of the irreducible representation of `group` with highest
/// weight `weight`.
pub fn dim(group: GroupId, weight: &WeightTuple) -> Result<BigUint> {
    weight.validate(group)?;
    match group.family() {
        Family::Sl => dim_sl(weight, group.rank()),
        Family::SoEven => dim_so_even(&lambda_to_l(group, weight)?),
        Family::SoOdd => dim_so_odd(&lambda_to_l(group, weight)?),
        Family::Sp => dim_sp(&lambda_to_l(group, weight)?),
        f => roots::weyl_dim(roots::exceptional_system(f)?, weight.coords()),
    }
}

/// Dynkin labels (Bourbaki numbering) of an integral weight.
pub fn dynkin_labels(group: GroupId, weight: &WeightTuple) -> Result<Vec<u64>> {
    weight.validate(group)?;
    let c = weight.coords();
    let n = c.len();
    let diffs = |upto: usize| (0..upto).map(|i| c[i] - c[i + 1]).collect::<Vec<_>>();
    Ok(match group.family() {
        Family::Sl => c.iter().map(|a| a - 1).collect(),
        Family::SoOdd => {
            let mut b = diffs(n - 1);
            b.push(2 * c[n - 1]);
            b
        }
        Family::Sp => {
            let mut b = diffs(n - 1);
            b.push(c[n - 1]);
            b
        }
        Family::SoEven => {
            let mut b = diffs(n - 1);
            b.push(c[n - 2] + c[n - 1]);
            b
        }
        _ => c.to_vec(),
    })
}

/// Inverse of [`dynkin_labels`]. Fails for labels of spin representations
/// (half-integral `lambda`) and, for `SO_{2n}`, for the mirrored weights
/// with `lambda_n < 0`.
pub fn weight_from_dynkin(group: GroupId, labels: &[u64]) -> Result<WeightTuple> {
    let n = group.lie_rank();
    if labels.len() != n {
        return Err(Error::InvariantViolation(format!("{group} expects {n} Dynkin labels, got {}", labels.len())));
    }
    let suffix = |last: u64, upto: usize| {
        let mut lam = vec![0u64; n];
        lam[n - 1] = last;
        for i in (0..upto).rev() {
            lam[i] = lam[i + 1] + labels[i];
        }
        lam
    };
    let coords = match group.family() {
        Family::Sl => labels.iter().map(|b| b + 1).collect(),
        Family::SoOdd => {
            if !labels[n - 1].is_multiple_of(2) {
                return Err(Error::InvariantViolation("spin weight (odd last label)".into()));
            }
            suffix(labels[n - 1] / 2, n - 1)
        }
        Family::Sp => suffix(labels[n - 1], n - 1),
        Family::SoEven => {
            let (x, y) = (labels[n - 2], labels[n - 1]);
            if (x + y) % 2 != 0 {
                return Err(Error::InvariantViolation("spin weight (odd label sum)".into()));
            }
            if y < x {
                return Err(Error::InvariantViolation("mirrored weight (lambda_n < 0)".into()));
            }
            suffix((y - x) / 2, n - 1)
        }
        _ => labels.to_vec(),
    };
    Ok(WeightTuple(coords))
}
