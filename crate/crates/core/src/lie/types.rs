use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The nine families of simple complex Lie groups, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    Sl,
    SoOdd,
    SoEven,
    Sp,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Sl,
        Family::SoOdd,
        Family::SoEven,
        Family::Sp,
        Family::G2,
        Family::F4,
        Family::E6,
        Family::E7,
        Family::E8,
    ];

    pub const CLASSICAL: [Family; 4] = [Family::Sl, Family::SoOdd, Family::SoEven, Family::Sp];

    pub const EXCEPTIONAL: [Family; 5] = [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8];

    pub fn is_exceptional(self) -> bool {
        matches!(self, Family::G2 | Family::F4 | Family::E6 | Family::E7 | Family::E8)
    }

    /// Rank of an exceptional family; `None` for the classical ones.
    pub fn exceptional_rank(self) -> Option<u64> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }

    /// Smallest `rank` accepted by [`GroupId::new`]. This is the loosest
    /// floor; census conventions may raise it.
    pub fn min_rank(self) -> u64 {
        match self {
            Family::Sl | Family::SoEven => 2,
            Family::SoOdd | Family::Sp => 1,
            f => f.exceptional_rank().unwrap(),
        }
    }

    /// Name used in CSV files and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Family::Sl => "sl",
            Family::SoOdd => "so-odd",
            Family::SoEven => "so-even",
            Family::Sp => "sp",
            Family::G2 => "g2",
            Family::F4 => "f4",
            Family::E6 => "e6",
            Family::E7 => "e7",
            Family::E8 => "e8",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        Family::ALL.into_iter().find(|f| f.name() == lower).ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

/// One simple complex Lie group: a family plus the index `n` in
/// `SL_n`, `SO_{2n+1}`, `SO_{2n}` or `Sp_{2n}`.
///
/// Note that for `SL` the rank field is `n` itself (the group is `SL_n`), so
/// its weight tuples have `n - 1` entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupId {
    family: Family,
    rank: u64,
}

impl GroupId {
    pub fn new(family: Family, rank: u64) -> Result<Self> {
        if let Some(r) = family.exceptional_rank() {
            if rank != r {
                return Err(Error::InvariantViolation(format!("{family} has rank {r}, got {rank}")));
            }
        } else if rank < family.min_rank() {
            return Err(Error::InvariantViolation(format!("{family} needs rank >= {}, got {rank}", family.min_rank())));
        }
        Ok(GroupId { family, rank })
    }

    /// The exceptional group of the given family.
    pub fn exceptional(family: Family) -> Result<Self> {
        match family.exceptional_rank() {
            Some(r) => Ok(GroupId { family, rank: r }),
            None => Err(Error::UnsupportedFamily { family, op: "GroupId::exceptional" }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    /// Number of entries in a weight tuple for this group.
    pub fn tuple_len(&self) -> usize {
        match self.family {
            Family::Sl => (self.rank - 1) as usize,
            _ => self.rank as usize,
        }
    }

    /// Rank of the Lie algebra (number of simple roots).
    pub fn lie_rank(&self) -> usize {
        self.tuple_len()
    }

    /// `SO_4` is the only group admitted here that is not simple.
    pub fn is_simple(&self) -> bool {
        !(self.family == Family::SoEven && self.rank == 2)
    }

    /// Dimension of the defining (vector) representation of a classical group.
    pub fn defining_dim(&self) -> Option<u64> {
        let n = self.rank;
        match self.family {
            Family::Sl => Some(n),
            Family::SoOdd => Some(2 * n + 1),
            Family::SoEven | Family::Sp => Some(2 * n),
            _ => None,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Sl => write!(f, "SL_{}", self.rank),
            Family::SoOdd => write!(f, "SO_{}", 2 * self.rank + 1),
            Family::SoEven => write!(f, "SO_{}", 2 * self.rank),
            Family::Sp => write!(f, "Sp_{}", 2 * self.rank),
            Family::G2 => f.write_str("G2"),
            Family::F4 => f.write_str("F4"),
            Family::E6 => f.write_str("E6"),
            Family::E7 => f.write_str("E7"),
            Family::E8 => f.write_str("E8"),
        }
    }
}

/// Highest-weight coordinates of an irreducible representation.
///
/// * `SO`/`Sp`: `lambda_1 >= ... >= lambda_n >= 0`.
/// * `SL_n`: shifted labels `a_1..a_{n-1}`, each `>= 1`; all ones is trivial.
/// * exceptional: Dynkin labels in Bourbaki numbering, each `>= 0`.
///
/// Ordering is lexicographic on the coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightTuple(pub Vec<u64>);

impl WeightTuple {
    pub fn new(coords: Vec<u64>) -> Self {
        WeightTuple(coords)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The tuple labelling the one-dimensional representation of `group`.
    pub fn trivial(group: GroupId) -> Self {
        let fill = if group.family() == Family::Sl { 1 } else { 0 };
        WeightTuple(vec![fill; group.tuple_len()])
    }

    pub fn is_trivial(&self, group: GroupId) -> bool {
        let fill = if group.family() == Family::Sl { 1 } else { 0 };
        self.0.iter().all(|&c| c == fill)
    }

    /// Check length and dominance for `group`.
    pub fn validate(&self, group: GroupId) -> Result<()> {
        if self.len() != group.tuple_len() {
            return Err(Error::InvariantViolation(format!(
                "{group} expects a weight of length {}, got {}",
                group.tuple_len(),
                self.len()
            )));
        }
        match group.family() {
            Family::Sl => {
                if let Some(pos) = self.0.iter().position(|&a| a == 0) {
                    return Err(Error::InvariantViolation(format!("SL labels must be >= 1 (a_{} = 0)", pos + 1)));
                }
            }
            Family::SoOdd | Family::SoEven | Family::Sp => {
                if let Some(i) = self.0.windows(2).position(|w| w[0] < w[1]) {
                    return Err(Error::InvariantViolation(format!(
                        "weight not dominant: lambda_{} = {} < lambda_{} = {}",
                        i + 1,
                        self.0[i],
                        i + 2,
                        self.0[i + 1]
                    )));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Parse a comma- or semicolon-separated list of integers.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(WeightTuple(Vec::new()));
        }
        s.split([',', ';'])
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad weight coordinate `{t}`"))))
            .collect::<Result<Vec<_>>>()
            .map(WeightTuple)
    }

    /// Semicolon-joined form used in the census CSV.
    pub fn to_csv_field(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        parts.join(";")
    }
}

impl fmt::Display for WeightTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Strictly decreasing shifted coordinates `l_1 > ... > l_n >= 0` of an
/// `SO`/`Sp` weight.
///
/// For `SoOdd` the true coordinates are half-integers; they are stored
/// doubled (`2 l_i`), so every stored value is odd.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LTuple {
    family: Family,
    values: Vec<u64>,
}

impl LTuple {
    /// Build and validate an `l`-tuple. Rank is `values.len()`; `SoEven`
    /// tuples of rank 1 are allowed here since they arise as images when
    /// dropping the head of a rank-2 tuple.
    pub fn new(family: Family, values: Vec<u64>) -> Result<Self> {
        if !matches!(family, Family::SoOdd | Family::SoEven | Family::Sp) {
            return Err(Error::UnsupportedFamily { family, op: "LTuple::new" });
        }
        if values.is_empty() {
            return Err(Error::InvariantViolation("empty l-tuple".into()));
        }
        let t = LTuple { family, values };
        t.validate()?;
        Ok(t)
    }

    /// The tuple of the trivial weight, `l = m`.
    pub fn base(family: Family, rank: usize) -> Result<Self> {
        let values = (1..=rank).map(|i| base_value(family, rank, i)).collect();
        LTuple::new(family, values)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `m_i` for this tuple's family and rank (doubled for `SoOdd`).
    pub fn base_at(&self, i: usize) -> u64 {
        base_value(self.family, self.rank(), i)
    }

    pub fn is_base(&self) -> bool {
        (1..=self.rank()).all(|i| self.values[i - 1] == self.base_at(i))
    }

    fn validate(&self) -> Result<()> {
        let n = self.rank();
        if let Some(i) = self.values.windows(2).position(|w| w[0] <= w[1]) {
            return Err(Error::InvariantViolation(format!("l-tuple not strictly decreasing at position {}", i + 1)));
        }
        for i in 1..=n {
            let l = self.values[i - 1];
            let m = base_value(self.family, n, i);
            if l < m {
                return Err(Error::OutOfRange(format!("l_{i} = {l} is below m_{i} = {m}")));
            }
            if self.family == Family::SoOdd && l.is_multiple_of(2) {
                return Err(Error::InvariantViolation(format!("doubled SO-odd coordinate l_{i} = {l} must be odd")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for LTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", WeightTuple(self.values.clone()))
    }
}

/// `m_i` (1-based) for a classical orthogonal/symplectic family of rank `n`.
pub(crate) fn base_value(family: Family, n: usize, i: usize) -> u64 {
    let k = (n - i) as u64;
    match family {
        Family::SoEven => k,
        Family::SoOdd => 2 * k + 1,
        Family::Sp => k + 1,
        _ => unreachable!("base_value on {family}"),
    }
}

/// One irreducible representation: its group, highest weight and dimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepRecord {
    pub group: GroupId,
    pub weight: WeightTuple,
    pub dim: BigUint,
}
