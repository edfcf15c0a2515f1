//! Checkers for growth bounds on `R_N` and for the lemmas behind them.
//!
//! Every checker produces a [`ClaimReport`] with the number of instances
//! examined, each violation with both sides of its inequality, and the
//! extremal instance with an exact margin. Nothing is assumed to hold.

mod bounds;
mod report;
mod sl;
mod tuples;

use std::fmt;
use std::str::FromStr;

use crate::census::{census, CensusConfig, Convention};
use crate::{Error, Result};

pub use bounds::evaluate_bound_claim;
pub use report::{reports_to_json, ClaimReport, Extremal, Margin, Verdict, Violation, Witness, REPORT_CSV_HEADER};
pub use sl::{check_sl_prefix, check_sl_tail, TAIL_LIMIT};
pub use tuples::{
    check_lemma1, check_lemma2, check_map_multiplicity, classify_tuple, lemma1_sides, map_type1, map_type2, TupleCase,
    LOW_RANK_MAX,
};

/// The closed catalog of checkable claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    /// `R_k(G) <= k` for each simple group `G`.
    PerGroupLinear,
    /// `R_k <= 13k` for the `SO_{2n}` family.
    SoFamily13N,
    /// `R_k <= 13k` for the `SO_{2n+1}` family.
    SoOddFamily13N,
    /// `R_k <= 13k` for the `Sp_{2n}` family.
    SpFamily13N,
    /// `R_k < 43k` for the `SL_n` family.
    SlFamily43N,
    /// `R_k < 34k - 27 sqrt(k)` for the `SL_n` family.
    SlFamilyRefined,
    /// `sum_{n <= sqrt(k)} R_k(SL_n) < 33k`.
    SlLowRank33N,
    /// At most 7 representations of dimension `<= N` for each `SL_n`,
    /// `n > sqrt(N)`.
    SlTail7,
    /// `R_k < 5k` for the five exceptional groups together.
    Exceptional5N,
    /// `R_k <= 78k - 27 sqrt(k)` over all families.
    Total78N,
    /// `R_N > 3N` for the `SL_n` family.
    SlLower3N,
    /// Dropping the head of an `SO_{2n}` tuple with `l_1 = l_2 + 1` divides
    /// the dimension by at least 4.
    Lemma1Quarter,
    /// Halving the head gap of a rank `> 6` tuple scales the dimension by at
    /// most `(3/4)^6`.
    Lemma2ThreeQuarters,
    /// The head-halving map is at most 2-to-1.
    MapMultiplicity2,
    /// Probe tuples `(4,1,...)`, `(1,3,1,...)`, `(1,1,2,1,...)` of length
    /// `floor(sqrt(N))` exceed `N`.
    SlPrefixProbes,
}

impl ClaimId {
    pub const ALL: [ClaimId; 15] = [
        ClaimId::PerGroupLinear,
        ClaimId::SoFamily13N,
        ClaimId::SoOddFamily13N,
        ClaimId::SpFamily13N,
        ClaimId::SlFamily43N,
        ClaimId::SlFamilyRefined,
        ClaimId::SlLowRank33N,
        ClaimId::SlTail7,
        ClaimId::Exceptional5N,
        ClaimId::Total78N,
        ClaimId::SlLower3N,
        ClaimId::Lemma1Quarter,
        ClaimId::Lemma2ThreeQuarters,
        ClaimId::MapMultiplicity2,
        ClaimId::SlPrefixProbes,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ClaimId::PerGroupLinear => "per-group-linear",
            ClaimId::SoFamily13N => "so-family-13N",
            ClaimId::SoOddFamily13N => "so-odd-family-13N",
            ClaimId::SpFamily13N => "sp-family-13N",
            ClaimId::SlFamily43N => "sl-family-43N",
            ClaimId::SlFamilyRefined => "sl-family-refined",
            ClaimId::SlLowRank33N => "sl-low-rank-33N",
            ClaimId::SlTail7 => "sl-tail-7",
            ClaimId::Exceptional5N => "exceptional-5N",
            ClaimId::Total78N => "total-78N",
            ClaimId::SlLower3N => "sl-lower-3N",
            ClaimId::Lemma1Quarter => "lemma1-quarter",
            ClaimId::Lemma2ThreeQuarters => "lemma2-three-quarters",
            ClaimId::MapMultiplicity2 => "map-multiplicity-2",
            ClaimId::SlPrefixProbes => "sl-prefix-probes",
        }
    }

    /// Whether the claim is evaluated from a census table.
    pub fn needs_table(self) -> bool {
        matches!(
            self,
            ClaimId::PerGroupLinear
                | ClaimId::SoFamily13N
                | ClaimId::SoOddFamily13N
                | ClaimId::SpFamily13N
                | ClaimId::SlFamily43N
                | ClaimId::SlFamilyRefined
                | ClaimId::SlLowRank33N
                | ClaimId::Exceptional5N
                | ClaimId::Total78N
                | ClaimId::SlLower3N
        )
    }

    /// `(c, s)` for bounds of the form `c k - s sqrt(k)`; zeros otherwise.
    pub fn constants(self) -> (u64, u64) {
        match self {
            ClaimId::PerGroupLinear => (1, 0),
            ClaimId::SoFamily13N | ClaimId::SoOddFamily13N | ClaimId::SpFamily13N => (13, 0),
            ClaimId::SlFamily43N => (43, 0),
            ClaimId::SlFamilyRefined => (34, 27),
            ClaimId::SlLowRank33N => (33, 0),
            ClaimId::Exceptional5N => (5, 0),
            ClaimId::Total78N => (78, 27),
            ClaimId::SlLower3N => (3, 0),
            _ => (0, 0),
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown claim `{s}`")))
    }
}

/// Run one claim that does not need a census table.
pub fn check_standalone(id: ClaimId, n: u64) -> Result<ClaimReport> {
    match id {
        ClaimId::Lemma1Quarter => check_lemma1(n),
        ClaimId::Lemma2ThreeQuarters => check_lemma2(n),
        ClaimId::MapMultiplicity2 => check_map_multiplicity(n),
        ClaimId::SlPrefixProbes => check_sl_prefix(n),
        ClaimId::SlTail7 => check_sl_tail(n),
        other => Err(Error::InvariantViolation(format!("{other} needs a census table"))),
    }
}

/// Check each claim in `ids` at `n`, building one census (all families,
/// given convention) if any claim needs it. Reports come back in the order
/// of `ids`.
pub fn verify(ids: &[ClaimId], n: u64, convention: Convention) -> Result<Vec<ClaimReport>> {
    let table = if ids.iter().any(|c| c.needs_table()) {
        Some(census(&CensusConfig::new(n).with_convention(convention))?)
    } else {
        None
    };
    ids.iter()
        .map(|&id| match &table {
            Some(t) if id.needs_table() => evaluate_bound_claim(id, n, t),
            _ => check_standalone(id, n),
        })
        .collect()
}
