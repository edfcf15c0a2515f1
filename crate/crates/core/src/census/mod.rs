//! Exhaustive enumeration of irreducible representations of bounded
//! dimension and the `r_k` / `R_k` tables built from it.
//!
//! Work is split into one task per group. Tasks run on the ambient rayon
//! pool (wrap calls in `ThreadPool::install` to pick a worker count);
//! results are merged in canonical group order, so output never depends on
//! scheduling.

mod fastdim;
mod search;
mod table;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Duration;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::lie::{Family, GroupId, RepRecord};
use crate::roots;
use crate::{Error, Result};

pub(crate) use fastdim::{blocks_of_columns, classical_dim_exact};
use search::GroupSearch;
pub(crate) use search::{weight_of_columns, Columns};
pub use table::{read_records_csv, write_records_csv, CensusTable, RecordWriter, Scope, TABLE_HEADER};

/// Rank floors applied when building a census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Convention {
    /// `SL_n` from 2, `SO_{2n+1}` and `Sp_{2n}` from 1, `SO_{2n}` from 2.
    /// Includes the non-simple `SO_4` and counts isomorphic low-rank groups
    /// once per family.
    #[default]
    Paper,
    /// `SL_n` from 2, `SO_{2n+1}` from 3, `SO_{2n}` from 4, `Sp_{2n}` from 2.
    StrictSimple,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Paper => "paper",
            Convention::StrictSimple => "strict-simple",
        }
    }

    pub fn min_rank(self, family: Family) -> u64 {
        match (self, family) {
            (Convention::StrictSimple, Family::SoOdd) => 3,
            (Convention::StrictSimple, Family::SoEven) => 4,
            (Convention::StrictSimple, Family::Sp) => 2,
            _ => family.min_rank(),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "paper" => Ok(Convention::Paper),
            "strict-simple" | "strict" => Ok(Convention::StrictSimple),
            other => Err(Error::Parse(format!("unknown convention `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusConfig {
    pub max_dim: u64,
    /// Families to include; duplicates are ignored.
    pub families: Vec<Family>,
    pub convention: Convention,
    /// Raise (or lower, down to [`Family::min_rank`]) the first rank of a
    /// family.
    pub min_rank_overrides: BTreeMap<Family, u64>,
}

impl CensusConfig {
    /// All nine families with the default rank floors.
    pub fn new(max_dim: u64) -> Self {
        CensusConfig {
            max_dim,
            families: Family::ALL.to_vec(),
            convention: Convention::Paper,
            min_rank_overrides: BTreeMap::new(),
        }
    }

    pub fn with_families(mut self, families: &[Family]) -> Self {
        self.families = families.to_vec();
        self
    }

    pub fn with_convention(mut self, convention: Convention) -> Self {
        self.convention = convention;
        self
    }

    pub fn with_min_rank(mut self, family: Family, rank: u64) -> Self {
        self.min_rank_overrides.insert(family, rank);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_dim == 0 {
            return Err(Error::OutOfRange("max_dim must be >= 1".into()));
        }
        Ok(())
    }

    /// Families in canonical order, deduplicated.
    pub fn sorted_families(&self) -> Vec<Family> {
        let mut f = self.families.clone();
        f.sort();
        f.dedup();
        f
    }

    pub fn first_rank(&self, family: Family) -> u64 {
        let floor = self.convention.min_rank(family);
        match self.min_rank_overrides.get(&family) {
            Some(&r) => r.max(family.min_rank()),
            None => floor,
        }
    }

    /// Every group the census visits, in canonical order.
    pub fn groups(&self) -> Vec<GroupId> {
        let n = self.max_dim;
        let mut out = Vec::new();
        for family in self.sorted_families() {
            let Some(last) = rank_cutoff(family, n) else { continue };
            let first = self.first_rank(family);
            for rank in first..=last {
                out.push(GroupId::new(family, rank).expect("rank above floor"));
            }
        }
        out
    }
}

/// Search statistics for one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationStats {
    pub group: GroupId,
    /// Dimension evaluations performed.
    pub nodes: u64,
    /// Evaluations that exceeded the bound and cut the search.
    pub prunes: u64,
    pub records: u64,
    pub wall: Duration,
}

fn smallest_fundamental(family: Family) -> Result<u64> {
    static CACHE: OnceLock<Vec<(Family, u64)>> = OnceLock::new();
    let table = CACHE.get_or_init(|| {
        Family::EXCEPTIONAL
            .iter()
            .map(|&f| {
                let rs = roots::exceptional_system(f).expect("exceptional system");
                let min = (0..rs.rank())
                    .map(|p| {
                        let mut labels = vec![0; rs.rank()];
                        labels[p] = 1;
                        let d = roots::weyl_dim(rs, &labels).expect("fundamental dimension");
                        u64::try_from(d).unwrap_or(u64::MAX)
                    })
                    .min()
                    .unwrap();
                (f, min)
            })
            .collect()
    });
    table
        .iter()
        .find(|(f, _)| *f == family)
        .map(|&(_, d)| d)
        .ok_or(Error::UnsupportedFamily { family, op: "smallest_fundamental" })
}

/// Largest rank of `family` that can have a nontrivial representation of
/// dimension `<= n`, or `None` if no rank can.
///
/// For the classical families this is where the defining representation
/// (the smallest nontrivial one) outgrows `n`, except that `SO_4` has the
/// 3-dimensional representations `(1,1)`, smaller than its defining one.
/// Exceptional families return their fixed rank when their smallest
/// fundamental representation fits.
pub fn rank_cutoff(family: Family, n: u64) -> Option<u64> {
    let r = match family {
        Family::Sl => n,
        Family::SoOdd => n.saturating_sub(1) / 2,
        Family::SoEven if n == 3 => 2,
        Family::SoEven => n / 2,
        Family::Sp => n / 2,
        f => {
            let min = smallest_fundamental(f).ok()?;
            return (min <= n).then(|| f.exceptional_rank().unwrap());
        }
    };
    (r >= family.min_rank()).then_some(r)
}

/// Run the bounded search on one group, calling `visit` with each
/// nontrivial weight (as columns) and its dimension.
pub(crate) fn visit_group<F: FnMut(&Columns, u64)>(group: GroupId, n: u64, visit: F) -> Result<EnumerationStats> {
    GroupSearch::new(group, n)?.run(visit)
}

/// Sorted dimensions of the nontrivial representations of `group` with
/// dimension `<= n`.
pub fn group_dims(group: GroupId, n: u64) -> Result<Vec<u64>> {
    Ok(group_dims_with_stats(group, n)?.0)
}

fn group_dims_with_stats(group: GroupId, n: u64) -> Result<(Vec<u64>, EnumerationStats)> {
    let mut dims = Vec::new();
    let stats = visit_group(group, n, |_, d| dims.push(d))?;
    dims.sort_unstable();
    Ok((dims, stats))
}

/// Every nontrivial irreducible of `group` with dimension `<= n`, ordered
/// by weight.
pub fn enumerate_group(group: GroupId, n: u64) -> Result<Vec<RepRecord>> {
    Ok(enumerate_group_with_stats(group, n)?.0)
}

pub fn enumerate_group_with_stats(group: GroupId, n: u64) -> Result<(Vec<RepRecord>, EnumerationStats)> {
    let mut out = Vec::new();
    let stats = visit_group(group, n, |cols, d| {
        out.push(RepRecord { group, weight: weight_of_columns(group, cols), dim: BigUint::from(d) })
    })?;
    out.sort_unstable_by(|a, b| a.weight.cmp(&b.weight));
    Ok((out, stats))
}

/// Ranks just past the cutoff must be empty; a non-empty one means the
/// cutoff logic is wrong and every table built on it is suspect.
fn safety_sweep(config: &CensusConfig) -> Result<()> {
    let n = config.max_dim;
    for family in config.sorted_families() {
        if family.is_exceptional() {
            continue;
        }
        let start = match rank_cutoff(family, n) {
            Some(r) => r + 1,
            None => family.min_rank(),
        };
        for rank in start..start + 3 {
            let group = GroupId::new(family, rank)?;
            let dims = group_dims(group, n)?;
            if !dims.is_empty() {
                return Err(Error::CutoffUnsound { group, count: dims.len(), bound: n });
            }
        }
    }
    Ok(())
}

fn run_census(config: &CensusConfig, keep_stats: bool) -> Result<(CensusTable, Vec<EnumerationStats>)> {
    config.validate()?;
    safety_sweep(config)?;
    let groups = config.groups();
    let results: Vec<Result<(Vec<u64>, EnumerationStats)>> =
        groups.par_iter().map(|&g| group_dims_with_stats(g, config.max_dim)).collect();
    let mut table = CensusTable::empty(config.clone());
    let mut stats = Vec::new();
    for (group, res) in groups.into_iter().zip(results) {
        let (dims, st) = res?;
        table.push_group(group, dims);
        if keep_stats {
            stats.push(st);
        }
    }
    table.finalize();
    Ok((table, stats))
}

/// Build the `r_k` / `R_k` tables for `config`.
pub fn census(config: &CensusConfig) -> Result<CensusTable> {
    Ok(run_census(config, false)?.0)
}

/// As [`census`], also returning per-group search statistics in canonical
/// group order.
pub fn census_with_stats(config: &CensusConfig) -> Result<(CensusTable, Vec<EnumerationStats>)> {
    run_census(config, true)
}

const RECORD_CHUNK: usize = 256;

/// Stream every census record in canonical order (family, rank, weight).
///
/// Groups are processed in parallel chunks, so memory stays proportional
/// to the records of one chunk.
pub fn for_each_record<F: FnMut(RepRecord) -> Result<()>>(config: &CensusConfig, mut visit: F) -> Result<()> {
    config.validate()?;
    safety_sweep(config)?;
    let groups = config.groups();
    for chunk in groups.chunks(RECORD_CHUNK) {
        let lists: Vec<Result<Vec<RepRecord>>> =
            chunk.par_iter().map(|&g| enumerate_group(g, config.max_dim)).collect();
        for list in lists {
            for rec in list? {
                visit(rec)?;
            }
        }
    }
    Ok(())
}

/// All census records in canonical order.
pub fn census_records(config: &CensusConfig) -> Result<Vec<RepRecord>> {
    let mut out = Vec::new();
    for_each_record(config, |r| {
        out.push(r);
        Ok(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::WeightTuple;

    fn g(f: Family, r: u64) -> GroupId {
        GroupId::new(f, r).unwrap()
    }

    #[test]
    fn cutoffs() {
        assert_eq!(rank_cutoff(Family::Sl, 100), Some(100));
        assert_eq!(rank_cutoff(Family::SoEven, 10), Some(5));
        assert_eq!(rank_cutoff(Family::SoEven, 3), Some(2));
        assert_eq!(rank_cutoff(Family::SoEven, 2), None);
        assert_eq!(rank_cutoff(Family::SoOdd, 2), None);
        assert_eq!(rank_cutoff(Family::SoOdd, 3), Some(1));
        assert_eq!(rank_cutoff(Family::G2, 6), None);
        assert_eq!(rank_cutoff(Family::G2, 7), Some(2));
        assert_eq!(rank_cutoff(Family::E8, 247), None);
        assert_eq!(rank_cutoff(Family::E8, 248), Some(8));
    }

    #[test]
    fn small_groups() {
        let recs = enumerate_group(g(Family::Sl, 2), 5).unwrap();
        let got: Vec<_> = recs.iter().map(|r| (r.weight.0.clone(), r.dim.clone())).collect();
        let want: Vec<_> = (2..=5u64).map(|k| (vec![k], BigUint::from(k))).collect();
        assert_eq!(got, want);

        let recs = enumerate_group(g(Family::SoEven, 4), 8).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].weight, WeightTuple(vec![1, 0, 0, 0]));

        let recs = enumerate_group(g(Family::Sp, 2), 5).unwrap();
        let got: Vec<_> = recs.iter().map(|r| (r.weight.0.clone(), r.dim.clone())).collect();
        assert_eq!(got, vec![(vec![1, 0], BigUint::from(4u32)), (vec![1, 1], BigUint::from(5u32))]);
    }

    #[test]
    fn tiny_census() {
        let t = census(&CensusConfig::new(1)).unwrap();
        assert_eq!(t.cumulative_of(Scope::Total, 1).unwrap(), 0);

        let t = census(&CensusConfig::new(3).with_families(&[Family::Sl])).unwrap();
        assert_eq!(t.r_of(Scope::Total, 2).unwrap(), 1);
        // SL_2 (3), and SL_3 (2,1), (1,2)
        assert_eq!(t.r_of(Scope::Total, 3).unwrap(), 3);
        assert_eq!(t.cumulative_of(Scope::Total, 3).unwrap(), 4);

        let recs = census_records(&CensusConfig::new(10).with_families(&[Family::SoEven])).unwrap();
        assert!(recs
            .iter()
            .any(|r| r.group == g(Family::SoEven, 2) && r.weight.0 == [1, 1] && r.dim == BigUint::from(3u32)));
    }

    #[test]
    fn strict_floors() {
        let c = CensusConfig::new(50).with_convention(Convention::StrictSimple);
        let groups = c.groups();
        assert!(!groups.contains(&g(Family::SoEven, 3)));
        assert!(groups.contains(&g(Family::SoEven, 4)));
        assert!(!groups.contains(&g(Family::Sp, 1)));
    }
}
