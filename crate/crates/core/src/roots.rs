//! Root systems from Cartan matrices and the general Weyl dimension formula.
//!
//! Positive roots are generated by the root-string rule: for a positive root
//! `alpha` and a simple root `alpha_i`, `alpha + alpha_i` is a root iff
//! `p - <alpha, alpha_i^vee> > 0`, where `p` is the largest `k` with
//! `alpha - k alpha_i` a root.
//!
//! The Weyl formula needs coroots, not roots: `<lambda + rho, alpha^vee>`
//! is an integer dot product of Dynkin labels with the coroot's coefficients
//! in the basis of simple coroots. The positive coroots are exactly the
//! positive roots of the dual system, whose Cartan matrix is the transpose,
//! so [`RootSystem::from_cartan`] runs the closure on `A^T`.
//!
//! Simple roots follow Bourbaki numbering throughout.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::lie::exact::{Accumulate, Bounded, BoundedRatio, ExactRatio};
use crate::lie::{Family, GroupId};
use crate::{Error, Result};

/// Cartan matrix in the convention `a[i][j] = <alpha_i^vee, alpha_j>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvariantViolation("Cartan matrix is not square".into()));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(Error::InvariantViolation(format!("diagonal entry a[{i}][{i}] = {a}")));
                }
                if i != j && a > 0 {
                    return Err(Error::InvariantViolation(format!("off-diagonal a[{i}][{j}] = {a} > 0")));
                }
                if i != j && (a == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvariantViolation(format!("a[{i}][{j}] and a[{j}][{i}] disagree on zero")));
                }
            }
        }
        Ok(CartanMatrix { entries })
    }

    /// The standard matrix for `group` (any family, classical at any rank).
    pub fn for_group(group: GroupId) -> Result<Self> {
        let r = group.lie_rank();
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match group.family() {
            Family::Sl | Family::SoOdd | Family::Sp => {
                for i in 1..r {
                    link(i - 1, i);
                }
            }
            Family::SoEven => {
                for i in 1..r.saturating_sub(1) {
                    link(i - 1, i);
                }
                if r >= 3 {
                    link(r - 3, r - 1);
                }
            }
            Family::G2 => link(0, 1),
            Family::F4 => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::E6 | Family::E7 | Family::E8 => {
                // 1-3-4-5-...-r with 2 attached to 4.
                link(0, 2);
                link(1, 3);
                for i in 3..r {
                    link(i - 1, i);
                }
            }
        }
        match group.family() {
            // alpha_n short
            Family::SoOdd if r >= 2 => a[r - 1][r - 2] = -2,
            // alpha_n long
            Family::Sp if r >= 2 => a[r - 2][r - 1] = -2,
            // alpha_1 short, alpha_2 long
            Family::G2 => a[0][1] = -3,
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            Family::F4 => a[2][1] = -2,
            _ => {}
        }
        CartanMatrix::new(a)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn transpose(&self) -> CartanMatrix {
        let n = self.rank();
        let entries = (0..n).map(|i| (0..n).map(|j| self.entries[j][i]).collect()).collect();
        CartanMatrix { entries }
    }

    /// `<alpha, alpha_i^vee>` for `alpha = sum_j k_j alpha_j`.
    fn pairing(&self, root: &[i64], i: usize) -> i64 {
        root.iter().zip(&self.entries[i]).map(|(k, a)| k * a).sum()
    }
}

/// Positive roots of `cartan` in simple-root coordinates, ordered by height
/// and then lexicographically.
pub fn positive_roots(cartan: &CartanMatrix) -> Vec<Vec<i64>> {
    let n = cartan.rank();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    while !level.is_empty() {
        level.sort();
        for r in &level {
            seen.insert(r.clone());
        }
        all.extend(level.iter().cloned());
        let mut next: Vec<Vec<i64>> = Vec::new();
        for root in &level {
            for i in 0..n {
                if extends(cartan, &seen, root, i) {
                    let mut up = root.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        level = next;
    }
    all
}

/// Root-string test: is `root + alpha_i` a root?
fn extends(cartan: &CartanMatrix, seen: &HashSet<Vec<i64>>, root: &[i64], i: usize) -> bool {
    let mut p = 0;
    let mut down = root.to_vec();
    loop {
        down[i] -= 1;
        if down[i] < 0 || !seen.contains(&down) {
            break;
        }
        p += 1;
    }
    p - cartan.pairing(root, i) > 0
}

/// Positive coroots with their heights `<rho, alpha^vee>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    rank: usize,
    coroots: Vec<Vec<u64>>,
    heights: Vec<u64>,
}

impl RootSystem {
    pub fn from_cartan(cartan: &CartanMatrix) -> Self {
        let dual = cartan.transpose();
        let coroots: Vec<Vec<u64>> =
            positive_roots(&dual).into_iter().map(|r| r.into_iter().map(|k| k as u64).collect()).collect();
        let heights = coroots.iter().map(|c| c.iter().sum()).collect();
        RootSystem { rank: cartan.rank(), coroots, heights }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_coroots(&self) -> &[Vec<u64>] {
        &self.coroots
    }

    pub fn heights(&self) -> &[u64] {
        &self.heights
    }

    pub fn num_positive(&self) -> usize {
        self.coroots.len()
    }

    /// Dimension of the adjoint representation, `2 |Phi+| + rank`.
    pub fn adjoint_dim(&self) -> u64 {
        2 * self.coroots.len() as u64 + self.rank as u64
    }

    fn factors<A: Accumulate>(&self, labels: &[u64], acc: &mut A) -> bool {
        self.coroots.iter().zip(&self.heights).all(|(c, &h)| {
            let pairing: u64 = c.iter().zip(labels).map(|(ci, li)| ci * (li + 1)).sum();
            acc.mul(pairing, h)
        })
    }

    fn check_labels(&self, labels: &[u64]) -> Result<()> {
        if labels.len() != self.rank {
            return Err(Error::InvariantViolation(format!(
                "expected {} Dynkin labels, got {}",
                self.rank,
                labels.len()
            )));
        }
        Ok(())
    }
}

/// Root system of an exceptional group.
pub fn build_root_system(group: GroupId) -> Result<RootSystem> {
    if !group.family().is_exceptional() {
        return Err(Error::UnsupportedFamily { family: group.family(), op: "build_root_system" });
    }
    Ok(RootSystem::from_cartan(&CartanMatrix::for_group(group)?))
}

/// Root system of a classical group, built the same way.
pub fn classical_root_system(group: GroupId) -> Result<RootSystem> {
    if group.family().is_exceptional() {
        return Err(Error::UnsupportedFamily { family: group.family(), op: "classical_root_system" });
    }
    Ok(RootSystem::from_cartan(&CartanMatrix::for_group(group)?))
}

/// Shared, lazily built exceptional root systems.
pub fn exceptional_system(family: Family) -> Result<&'static RootSystem> {
    static CACHE: [OnceLock<RootSystem>; 5] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let idx = Family::EXCEPTIONAL
        .iter()
        .position(|&f| f == family)
        .ok_or(Error::UnsupportedFamily { family, op: "exceptional_system" })?;
    let group = GroupId::exceptional(family)?;
    Ok(CACHE[idx].get_or_init(|| build_root_system(group).expect("exceptional Cartan matrix")))
}

/// `prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>` for
/// Dynkin labels `labels`.
pub fn weyl_dim(rs: &RootSystem, labels: &[u64]) -> Result<BigUint> {
    rs.check_labels(labels)?;
    let mut acc = ExactRatio::new();
    rs.factors(labels, &mut acc);
    acc.finish(|| format!("weyl_dim at labels {labels:?}"))
}

/// As [`weyl_dim`] but stops as soon as the value exceeds `bound`.
pub(crate) fn weyl_dim_bounded(rs: &RootSystem, labels: &[u64], bound: u64) -> Result<Bounded> {
    rs.check_labels(labels)?;
    let mut acc = BoundedRatio::new(bound);
    rs.factors(labels, &mut acc);
    acc.finish(|| format!("weyl_dim at labels {labels:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exc(f: Family) -> &'static RootSystem {
        exceptional_system(f).unwrap()
    }

    fn unit(rank: usize, i: usize) -> Vec<u64> {
        let mut v = vec![0; rank];
        v[i] = 1;
        v
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(exc(Family::G2).num_positive(), 6);
        assert_eq!(exc(Family::F4).num_positive(), 24);
        assert_eq!(exc(Family::E6).num_positive(), 36);
        assert_eq!(exc(Family::E7).num_positive(), 63);
        assert_eq!(exc(Family::E8).num_positive(), 120);
    }

    #[test]
    fn heights_and_simple_coroots() {
        for f in Family::EXCEPTIONAL {
            let rs = exc(f);
            assert!(rs.heights().iter().all(|&h| h >= 1));
            assert_eq!(rs.heights().iter().filter(|&&h| h == 1).count(), rs.rank());
            for i in 0..rs.rank() {
                assert!(rs.positive_coroots().contains(&unit(rs.rank(), i)));
            }
        }
    }

    #[test]
    fn closure_is_idempotent() {
        for f in Family::EXCEPTIONAL {
            let cartan = CartanMatrix::for_group(GroupId::exceptional(f).unwrap()).unwrap();
            let roots = positive_roots(&cartan);
            let set: HashSet<Vec<i64>> = roots.iter().cloned().collect();
            for r in &roots {
                for i in 0..cartan.rank() {
                    if extends(&cartan, &set, r, i) {
                        let mut up = r.clone();
                        up[i] += 1;
                        assert!(set.contains(&up), "{f}: closure missed {up:?}");
                    }
                }
            }
        }
    }

    // Bourbaki numbering is pinned by the fundamental dimensions.
    #[test]
    fn fundamental_dimensions() {
        let table: [(Family, &[u64]); 5] = [
            (Family::G2, &[7, 14]),
            (Family::F4, &[52, 1274, 273, 26]),
            (Family::E6, &[27, 78, 351, 2925, 351, 27]),
            (Family::E7, &[133, 912, 8645, 365750, 27664, 1539, 56]),
            (Family::E8, &[3875, 147250, 6696000, 6899079264, 146325270, 2450240, 30380, 248]),
        ];
        for (f, dims) in table {
            let rs = exc(f);
            for (i, &d) in dims.iter().enumerate() {
                assert_eq!(weyl_dim(rs, &unit(rs.rank(), i)).unwrap(), BigUint::from(d), "{f} omega_{}", i + 1);
            }
        }
    }

    #[test]
    fn adjoint_dimensions() {
        let expected = [(Family::G2, 14), (Family::F4, 52), (Family::E6, 78), (Family::E7, 133), (Family::E8, 248)];
        for (f, d) in expected {
            assert_eq!(exc(f).adjoint_dim(), d);
        }
        assert_eq!(weyl_dim(exc(Family::G2), &[0, 1]).unwrap(), 14u32.into());
        assert_eq!(weyl_dim(exc(Family::E8), &[0, 0, 0, 0, 0, 0, 0, 1]).unwrap(), 248u32.into());
    }

    #[test]
    fn trivial_weight_has_dimension_one() {
        for f in Family::EXCEPTIONAL {
            let rs = exc(f);
            assert_eq!(weyl_dim(rs, &vec![0; rs.rank()]).unwrap(), 1u32.into());
        }
    }

    #[test]
    fn build_rejects_classical() {
        let g = GroupId::new(Family::Sl, 4).unwrap();
        assert!(matches!(build_root_system(g), Err(Error::UnsupportedFamily { .. })));
    }

    #[test]
    fn classical_positive_counts() {
        for n in 1..=6u64 {
            let b = classical_root_system(GroupId::new(Family::SoOdd, n).unwrap()).unwrap();
            assert_eq!(b.num_positive() as u64, n * n);
            let c = classical_root_system(GroupId::new(Family::Sp, n).unwrap()).unwrap();
            assert_eq!(c.num_positive() as u64, n * n);
            let a = classical_root_system(GroupId::new(Family::Sl, n + 1).unwrap()).unwrap();
            assert_eq!(a.num_positive() as u64, n * (n + 1) / 2);
            if n >= 2 {
                let d = classical_root_system(GroupId::new(Family::SoEven, n).unwrap()).unwrap();
                assert_eq!(d.num_positive() as u64, n * (n - 1));
            }
        }
    }

    #[test]
    fn bounded_matches_exact() {
        let rs = exc(Family::E7);
        let labels = [1, 0, 0, 0, 0, 1, 0];
        let exact = weyl_dim(rs, &labels).unwrap();
        let v: u64 = (&exact).try_into().unwrap();
        assert_eq!(weyl_dim_bounded(rs, &labels, v).unwrap(), Bounded::Within(v));
        assert_eq!(weyl_dim_bounded(rs, &labels, v - 1).unwrap(), Bounded::Exceeds);
    }
}
