//! Dimension evaluation for classical weights given in run-length form.
//!
//! A weight is described by the partition `lambda` (for `SL_n`, the
//! partition with `lambda_n = 0` whose column lengths are the shifted labels
//! minus one) split into maximal blocks of equal entries. Every classical
//! formula is a product of three kinds of factors:
//!
//! * differences, for `i < j`: `(d + j - i) / (j - i)` with
//!   `d = lambda_i - lambda_j` (all families),
//! * sums, for `i < j`: `(e + t) / t` with `e = lambda_i + lambda_j` and
//!   `t = 2n + c - i - j`, `c` being 0, 1, 2 for `SO_{2n}`, `SO_{2n+1}`,
//!   `Sp_{2n}`,
//! * singletons: `(lambda_i + t) / t` with `t = n - i + 1` (`Sp`), or
//!   `(2 lambda_i + t) / t` over odd `t = 2(n - i) + 1` (`SO_{2n+1}`).
//!
//! Over a block the consecutive ranges of `t` telescope, so a product over
//! a run of length `L` costs `min(L, e)` multiplications instead of `L`.
//! Every multiplied fraction is `>= 1`.

use num_bigint::BigUint;

use crate::lie::exact::{Accumulate, Bounded, BoundedRatio, ExactRatio};
use crate::lie::Family;
use crate::{Error, Result};

/// A run of `len` equal entries `value` in `lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Block {
    pub value: u64,
    pub len: u64,
}

/// `prod_{t=a}^{b} (t + e) / t`, with `1 <= a`.
fn telescope<A: Accumulate>(acc: &mut A, e: u64, a: u64, b: u64) -> bool {
    if e == 0 || a > b {
        return true;
    }
    debug_assert!(a >= 1);
    if e <= b - a + 1 {
        (1..=e).all(|v| acc.mul(b + v, a - 1 + v))
    } else {
        (a..=b).all(|t| acc.mul(t + e, t))
    }
}

/// `prod (t + 2e) / t` over odd `t` in `a, a + 2, ..., b`.
fn telescope_odd<A: Accumulate>(acc: &mut A, e: u64, a: u64, b: u64) -> bool {
    if e == 0 || a > b {
        return true;
    }
    debug_assert!(a % 2 == 1 && b % 2 == 1);
    let count = (b - a) / 2 + 1;
    if e <= count {
        (1..=e).all(|v| acc.mul(b + 2 * v, a + 2 * v - 2))
    } else {
        (a..=b).step_by(2).all(|t| acc.mul(t + 2 * e, t))
    }
}

/// Feed every factor of the formula for `family`, rank `n`, and the
/// partition given by `blocks` (lengths summing to `n`) into `acc`.
fn factors<A: Accumulate>(family: Family, n: u64, blocks: &[Block], acc: &mut A) -> bool {
    let offset = match family {
        Family::SoEven => 0,
        Family::SoOdd => 1,
        Family::Sp => 2,
        _ => 0,
    };
    let has_sums = family != Family::Sl;
    // 1-based index ranges [start, end]
    let mut ranges = Vec::with_capacity(blocks.len());
    let mut s = 1;
    for b in blocks {
        ranges.push((s, s + b.len - 1));
        s += b.len;
    }
    debug_assert_eq!(s - 1, n);

    for (ri, rb) in blocks.iter().enumerate() {
        let (rs, re) = ranges[ri];
        let rlen = rb.len;

        match family {
            Family::Sp => {
                if !telescope(acc, rb.value, n - re + 1, n - rs + 1) {
                    return false;
                }
            }
            Family::SoOdd if !telescope_odd(acc, rb.value, 2 * (n - re) + 1, 2 * (n - rs) + 1) => {
                return false;
            }
            _ => {}
        }

        if has_sums && rb.value > 0 && rlen >= 2 {
            let e = 2 * rb.value;
            for i in rs..re {
                if !telescope(acc, e, 2 * n + offset - i - re, 2 * n + offset - 2 * i - 1) {
                    return false;
                }
            }
        }

        for (si, sb) in blocks.iter().enumerate().skip(ri + 1) {
            let (ss, se) = ranges[si];
            let d = rb.value - sb.value;
            let e = rb.value + sb.value;
            if rlen <= sb.len {
                for i in rs..=re {
                    if !telescope(acc, d, ss - i, se - i) {
                        return false;
                    }
                    if has_sums && !telescope(acc, e, 2 * n + offset - i - se, 2 * n + offset - i - ss) {
                        return false;
                    }
                }
            } else {
                for j in ss..=se {
                    if !telescope(acc, d, j - re, j - rs) {
                        return false;
                    }
                    if has_sums && !telescope(acc, e, 2 * n + offset - j - re, 2 * n + offset - j - rs) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn describe(family: Family, n: u64, blocks: &[Block]) -> String {
    format!("{family} rank {n}, blocks {blocks:?}")
}

/// Exact dimension of a classical weight in block form.
pub(crate) fn classical_dim_exact(family: Family, n: u64, blocks: &[Block]) -> Result<BigUint> {
    check(family, n, blocks)?;
    let mut acc = ExactRatio::new();
    factors(family, n, blocks, &mut acc);
    acc.finish(|| describe(family, n, blocks))
}

/// Dimension of a classical weight in block form if it is `<= bound`.
pub(crate) fn classical_dim_bounded(family: Family, n: u64, blocks: &[Block], bound: u64) -> Result<Bounded> {
    check(family, n, blocks)?;
    let mut acc = BoundedRatio::new(bound);
    factors(family, n, blocks, &mut acc);
    acc.finish(|| describe(family, n, blocks))
}

fn check(family: Family, n: u64, blocks: &[Block]) -> Result<()> {
    if family.is_exceptional() {
        return Err(Error::UnsupportedFamily { family, op: "classical_dim" });
    }
    let total: u64 = blocks.iter().map(|b| b.len).sum();
    let decreasing = blocks.windows(2).all(|w| w[0].value > w[1].value);
    if total != n || !decreasing || blocks.iter().any(|b| b.len == 0) {
        return Err(Error::InvariantViolation(format!("malformed blocks: {}", describe(family, n, blocks))));
    }
    if family == Family::Sl && blocks.last().is_none_or(|b| b.value != 0) {
        return Err(Error::InvariantViolation("SL partitions need lambda_n = 0".into()));
    }
    Ok(())
}

/// Run-length encode a partition.
#[cfg(test)]
pub(crate) fn blocks_of(lambda: &[u64]) -> Vec<Block> {
    let mut out: Vec<Block> = Vec::new();
    for &v in lambda {
        match out.last_mut() {
            Some(b) if b.value == v => b.len += 1,
            _ => out.push(Block { value: v, len: 1 }),
        }
    }
    out
}

/// Blocks of the partition `sum_p coef_p (1^p)` padded with zeros to
/// length `n`; `columns` must be sorted by strictly increasing position.
pub(crate) fn blocks_of_columns(columns: &[(u64, u64)], n: u64) -> Vec<Block> {
    let mut out = Vec::with_capacity(columns.len() + 1);
    let mut remaining: u64 = columns.iter().map(|&(_, c)| c).sum();
    let mut start = 1;
    for &(pos, coef) in columns {
        if coef == 0 {
            continue;
        }
        out.push(Block { value: remaining, len: pos + 1 - start });
        remaining -= coef;
        start = pos + 1;
    }
    if start <= n {
        out.push(Block { value: 0, len: n + 1 - start });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{dim, GroupId, WeightTuple};

    fn partition_of(group: GroupId, w: &WeightTuple) -> Vec<u64> {
        match group.family() {
            Family::Sl => {
                let n = group.rank() as usize;
                let mut lam = vec![0u64; n];
                for i in (0..n - 1).rev() {
                    lam[i] = lam[i + 1] + w.coords()[i] - 1;
                }
                lam
            }
            _ => w.coords().to_vec(),
        }
    }

    fn check_against_literal(group: GroupId, coords: &[u64]) {
        let w = WeightTuple(coords.to_vec());
        let literal = dim(group, &w).unwrap();
        let lam = partition_of(group, &w);
        let fast = classical_dim_exact(group.family(), group.rank(), &blocks_of(&lam)).unwrap();
        assert_eq!(fast, literal, "{group} {w}");
    }

    #[test]
    fn matches_literal_on_examples() {
        check_against_literal(GroupId::new(Family::SoEven, 4).unwrap(), &[1, 0, 0, 0]);
        check_against_literal(GroupId::new(Family::SoEven, 2).unwrap(), &[5, 3]);
        check_against_literal(GroupId::new(Family::SoEven, 5).unwrap(), &[3, 3, 2, 2, 2]);
        check_against_literal(GroupId::new(Family::SoOdd, 1).unwrap(), &[7]);
        check_against_literal(GroupId::new(Family::SoOdd, 4).unwrap(), &[4, 4, 1, 0]);
        check_against_literal(GroupId::new(Family::Sp, 3).unwrap(), &[2, 2, 2]);
        check_against_literal(GroupId::new(Family::Sp, 6).unwrap(), &[5, 1, 1, 1, 0, 0]);
        check_against_literal(GroupId::new(Family::Sl, 2).unwrap(), &[9]);
        check_against_literal(GroupId::new(Family::Sl, 7).unwrap(), &[2, 1, 1, 3, 1, 2]);
        check_against_literal(GroupId::new(Family::Sl, 40).unwrap(), &[[1; 38].as_slice(), &[3]].concat());
    }

    #[test]
    fn bounded_respects_bound() {
        let blocks = blocks_of(&[1, 0, 0, 0]);
        assert_eq!(classical_dim_bounded(Family::SoEven, 4, &blocks, 8).unwrap(), Bounded::Within(8));
        assert_eq!(classical_dim_bounded(Family::SoEven, 4, &blocks, 7).unwrap(), Bounded::Exceeds);
    }

    #[test]
    fn huge_rank_sparse_weights() {
        // adjoint of SL_n: n^2 - 1
        let n = 1_000_000u64;
        let blocks = [Block { value: 2, len: 1 }, Block { value: 1, len: n - 2 }, Block { value: 0, len: 1 }];
        assert_eq!(classical_dim_exact(Family::Sl, n, &blocks).unwrap(), BigUint::from(n * n - 1));
        // defining of SO_{2n}
        let blocks = [Block { value: 1, len: 1 }, Block { value: 0, len: n - 1 }];
        assert_eq!(classical_dim_bounded(Family::SoEven, n, &blocks, 2 * n).unwrap(), Bounded::Within(2 * n));
    }

    #[test]
    fn columns_to_blocks() {
        // 2 (1^1) + 1 (1^3) in rank 5 -> lambda = (3,1,1,0,0)
        let b = blocks_of_columns(&[(1, 2), (3, 1)], 5);
        assert_eq!(b, blocks_of(&[3, 1, 1, 0, 0]));
        // full-length column leaves no zero block
        let b = blocks_of_columns(&[(4, 1)], 4);
        assert_eq!(b, vec![Block { value: 1, len: 4 }]);
    }
}
