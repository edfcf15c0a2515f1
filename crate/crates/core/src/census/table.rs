use std::io::{Read, Write};

use num_bigint::BigUint;

use crate::lie::{Family, GroupId, RepRecord, WeightTuple};
use crate::{Error, Result};

use super::CensusConfig;

pub const TABLE_HEADER: [&str; 13] = [
    "N",
    "r_sl",
    "R_sl",
    "r_so_odd",
    "R_so_odd",
    "r_so_even",
    "R_so_even",
    "r_sp",
    "R_sp",
    "r_exc",
    "R_exc",
    "r_total",
    "R_total",
];

const RECORD_HEADER: [&str; 4] = ["family", "rank", "weight", "dim"];

/// What a table lookup sums over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    Family(Family),
    /// G2, F4, E6, E7 and E8 together.
    Exceptional,
    Total,
}

impl Scope {
    fn index(self) -> usize {
        match self {
            Scope::Family(f) => Family::ALL.iter().position(|&x| x == f).unwrap(),
            Scope::Exceptional => 9,
            Scope::Total => 10,
        }
    }
}

const SCOPES: usize = 11;

/// Counts `r_k` and cumulative counts `R_k` for `1 <= k <= N`, per family,
/// for the exceptional families together and in total, plus the sorted
/// dimension list of every group that was enumerated.
///
/// Counts are `u64`; at any size this crate can enumerate they are far
/// from overflowing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    config: CensusConfig,
    r: Vec<Vec<u64>>,
    cum: Vec<Vec<u64>>,
    groups: Vec<GroupId>,
    offsets: Vec<usize>,
    dims: Vec<u64>,
}

impl CensusTable {
    pub(crate) fn empty(config: CensusConfig) -> Self {
        let len = config.max_dim as usize + 1;
        CensusTable {
            config,
            r: vec![vec![0; len]; SCOPES],
            cum: Vec::new(),
            groups: Vec::new(),
            offsets: vec![0],
            dims: Vec::new(),
        }
    }

    /// Add one group's sorted dimensions. Groups must arrive in canonical
    /// order.
    pub(crate) fn push_group(&mut self, group: GroupId, dims: Vec<u64>) {
        let fi = Scope::Family(group.family()).index();
        for &d in &dims {
            self.r[fi][d as usize] += 1;
        }
        self.groups.push(group);
        self.dims.extend(dims);
        self.offsets.push(self.dims.len());
    }

    pub(crate) fn finalize(&mut self) {
        let len = self.r[0].len();
        for k in 0..len {
            let exc: u64 = Family::EXCEPTIONAL.iter().map(|&f| self.r[Scope::Family(f).index()][k]).sum();
            let all: u64 = (0..9).map(|i| self.r[i][k]).sum();
            self.r[9][k] = exc;
            self.r[10][k] = all;
        }
        self.cum = self
            .r
            .iter()
            .map(|row| {
                row.iter()
                    .scan(0u64, |acc, &x| {
                        *acc += x;
                        Some(*acc)
                    })
                    .collect()
            })
            .collect();
    }

    /// Build a table from census records, e.g. read back from CSV. Records
    /// may come in any order; dimensions above `config.max_dim` are an
    /// error.
    pub fn from_records<'a, I>(config: CensusConfig, records: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a RepRecord>,
    {
        config.validate()?;
        let mut by_group: Vec<(GroupId, u64)> = Vec::new();
        for rec in records {
            let d = u64::try_from(&rec.dim).ok().filter(|&d| d >= 2 && d <= config.max_dim).ok_or_else(|| {
                Error::OutOfRange(format!(
                    "record {} {} has dim {} outside 2..={}",
                    rec.group, rec.weight, rec.dim, config.max_dim
                ))
            })?;
            by_group.push((rec.group, d));
        }
        by_group.sort_unstable();
        let mut table = CensusTable::empty(config);
        let mut i = 0;
        while i < by_group.len() {
            let group = by_group[i].0;
            let mut j = i;
            while j < by_group.len() && by_group[j].0 == group {
                j += 1;
            }
            table.push_group(group, by_group[i..j].iter().map(|&(_, d)| d).collect());
            i = j;
        }
        table.finalize();
        Ok(table)
    }

    pub fn config(&self) -> &CensusConfig {
        &self.config
    }

    pub fn max_dim(&self) -> u64 {
        self.config.max_dim
    }

    fn check_k(&self, k: u64) -> Result<usize> {
        if k == 0 || k > self.max_dim() {
            return Err(Error::OutOfRange(format!("k = {k} outside 1..={}", self.max_dim())));
        }
        Ok(k as usize)
    }

    /// Number of representations of dimension exactly `k`.
    pub fn r_of(&self, scope: Scope, k: u64) -> Result<u64> {
        let k = self.check_k(k)?;
        Ok(self.r[scope.index()][k])
    }

    /// Number of representations of dimension at most `k` (the `R_k`).
    pub fn cumulative_of(&self, scope: Scope, k: u64) -> Result<u64> {
        let k = self.check_k(k)?;
        Ok(self.cum[scope.index()][k])
    }

    /// `r_k` for `k = 0..=N` (entry 0 is always 0).
    pub fn r_slice(&self, scope: Scope) -> &[u64] {
        &self.r[scope.index()]
    }

    /// `R_k` for `k = 0..=N`.
    pub fn cumulative_slice(&self, scope: Scope) -> &[u64] {
        &self.cum[scope.index()]
    }

    /// Enumerated groups in canonical order with their sorted dimensions.
    pub fn groups(&self) -> impl Iterator<Item = (GroupId, &[u64])> + '_ {
        self.groups.iter().enumerate().map(move |(i, &g)| (g, &self.dims[self.offsets[i]..self.offsets[i + 1]]))
    }

    pub fn num_groups(&self) -> usize {
        self.groups.len()
    }

    /// Sorted dimensions of one group, if it was part of the census.
    pub fn group_dims(&self, group: GroupId) -> Option<&[u64]> {
        let i = self.groups.binary_search(&group).ok()?;
        Some(&self.dims[self.offsets[i]..self.offsets[i + 1]])
    }

    /// `R_k` of a single group.
    pub fn group_cumulative(&self, group: GroupId, k: u64) -> Result<u64> {
        self.check_k(k)?;
        let dims =
            self.group_dims(group).ok_or_else(|| Error::OutOfRange(format!("{group} is not part of this census")))?;
        Ok(dims.partition_point(|&d| d <= k) as u64)
    }

    /// Write the table CSV, one row per `k = 1..=N`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(TABLE_HEADER)?;
        let cols = [
            Scope::Family(Family::Sl),
            Scope::Family(Family::SoOdd),
            Scope::Family(Family::SoEven),
            Scope::Family(Family::Sp),
            Scope::Exceptional,
            Scope::Total,
        ];
        let mut row = Vec::with_capacity(TABLE_HEADER.len());
        for k in 1..=self.max_dim() as usize {
            row.clear();
            row.push(k.to_string());
            for s in cols {
                row.push(self.r[s.index()][k].to_string());
                row.push(self.cum[s.index()][k].to_string());
            }
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Write census records as CSV (`family,rank,weight,dim`).
pub fn write_records_csv<'a, W, I>(out: W, records: I) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a RepRecord>,
{
    let mut w = RecordWriter::new(out)?;
    for rec in records {
        w.write(rec)?;
    }
    w.finish()
}

/// Incremental form of [`write_records_csv`].
pub struct RecordWriter<W: Write> {
    inner: csv::Writer<W>,
}

impl<W: Write> RecordWriter<W> {
    pub fn new(out: W) -> Result<Self> {
        let mut inner = csv::Writer::from_writer(out);
        inner.write_record(RECORD_HEADER)?;
        Ok(RecordWriter { inner })
    }

    pub fn write(&mut self, rec: &RepRecord) -> Result<()> {
        self.inner.write_record([
            rec.group.family().name().to_string(),
            rec.group.rank().to_string(),
            rec.weight.to_csv_field(),
            rec.dim.to_string(),
        ])?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.inner.flush()?;
        Ok(())
    }
}

/// Read records written by [`write_records_csv`]. Weights are validated
/// against their groups; dimensions are taken as written.
pub fn read_records_csv<R: Read>(input: R) -> Result<Vec<RepRecord>> {
    let mut rd = csv::Reader::from_reader(input);
    let headers = rd.headers()?.clone();
    if headers.iter().ne(RECORD_HEADER) {
        return Err(Error::Parse(format!("unexpected record header {:?}", headers.iter().collect::<Vec<_>>())));
    }
    let mut out = Vec::new();
    for (line, row) in rd.records().enumerate() {
        let row = row?;
        let at = |what: &str| Error::Parse(format!("record {}: bad {what}", line + 1));
        let family: Family = row.get(0).ok_or_else(|| at("family"))?.parse()?;
        let rank: u64 = row.get(1).and_then(|s| s.parse().ok()).ok_or_else(|| at("rank"))?;
        let group = GroupId::new(family, rank)?;
        let weight = WeightTuple::parse(row.get(2).ok_or_else(|| at("weight"))?)?;
        weight.validate(group)?;
        let dim: BigUint = row.get(3).and_then(|s| s.parse().ok()).ok_or_else(|| at("dim"))?;
        out.push(RepRecord { group, weight, dim });
    }
    Ok(out)
}
