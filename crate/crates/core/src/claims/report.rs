use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde_json::{json, Map, Value};

use crate::lie::{GroupId, WeightTuple};

use super::ClaimId;

/// Exact non-negative rational used for margins.
pub type Margin = Ratio<u128>;

fn fraction(r: &Margin) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Violated,
    /// Nothing fell inside the claim's scope.
    Vacuous,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Vacuous => "vacuous",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What an inequality was evaluated on: a representation, a tuple, a group,
/// a dimension bound `k`, or a combination.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    /// Family name, or a scope name such as `total` or `exceptional`.
    pub family: String,
    pub rank: Option<u64>,
    pub weight: Option<WeightTuple>,
    /// Shifted coordinates, doubled for `so-odd`.
    pub l: Option<Vec<u64>>,
    pub k: Option<u64>,
}

impl Witness {
    pub fn scope(name: &str, k: u64) -> Self {
        Witness { family: name.to_string(), k: Some(k), ..Default::default() }
    }

    pub fn group(group: GroupId) -> Self {
        Witness { family: group.family().name().to_string(), rank: Some(group.rank()), ..Default::default() }
    }

    pub fn with_k(mut self, k: u64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_weight(mut self, w: WeightTuple) -> Self {
        self.weight = Some(w);
        self
    }

    pub fn with_l(mut self, l: Vec<u64>) -> Self {
        self.l = Some(l);
        self
    }

    fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("family".into(), Value::String(self.family.clone()));
        if let Some(r) = self.rank {
            m.insert("rank".into(), Value::String(r.to_string()));
        }
        if let Some(w) = &self.weight {
            m.insert("weight".into(), strings(w.coords()));
        }
        if let Some(l) = &self.l {
            m.insert("l".into(), strings(l));
        }
        if let Some(k) = self.k {
            m.insert("k".into(), Value::String(k.to_string()));
        }
        Value::Object(m)
    }
}

fn strings(xs: &[u64]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

/// One failed instance of a claim, with both sides of its inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub witness: Witness,
    pub lhs: String,
    pub rhs: String,
    /// The quantity the claim bounds, when it is a ratio.
    pub ratio: Option<Margin>,
}

/// The instance closest to (or furthest past) the claimed bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremal {
    pub witness: Witness,
    pub margin: Margin,
}

/// Outcome of checking one claim over a finite range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub params: BTreeMap<String, String>,
    pub checked_count: u64,
    pub violations: Vec<Violation>,
    pub extremal: Option<Extremal>,
    /// Extra named values (per-probe dimensions, excluded groups, ...).
    pub details: BTreeMap<String, String>,
}

impl ClaimReport {
    pub fn new(claim: ClaimId, n: u64) -> Self {
        let mut params = BTreeMap::new();
        params.insert("N".to_string(), n.to_string());
        ClaimReport {
            claim,
            params,
            checked_count: 0,
            violations: Vec::new(),
            extremal: None,
            details: BTreeMap::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn detail(&mut self, key: &str, value: impl ToString) {
        self.details.insert(key.to_string(), value.to_string());
    }

    pub fn verdict(&self) -> Verdict {
        if !self.violations.is_empty() {
            Verdict::Violated
        } else if self.checked_count == 0 {
            Verdict::Vacuous
        } else {
            Verdict::Holds
        }
    }

    /// Keep `candidate` if its margin beats the current extremal under
    /// `better` (ties keep the earlier witness).
    pub(crate) fn offer(
        &mut self,
        witness: impl FnOnce() -> Witness,
        margin: Margin,
        better: fn(&Margin, &Margin) -> bool,
    ) {
        let replace = match &self.extremal {
            None => true,
            Some(e) => better(&margin, &e.margin),
        };
        if replace {
            self.extremal = Some(Extremal { witness: witness(), margin });
        }
    }

    pub(crate) fn violate(&mut self, witness: Witness, lhs: impl ToString, rhs: impl ToString) {
        self.violations.push(Violation { witness, lhs: lhs.to_string(), rhs: rhs.to_string(), ratio: None });
    }

    pub(crate) fn violate_ratio(&mut self, witness: Witness, lhs: impl ToString, rhs: impl ToString, ratio: Margin) {
        self.violate(witness, lhs, rhs);
        self.violations.last_mut().unwrap().ratio = Some(ratio);
    }

    pub fn to_json(&self) -> Value {
        let violations: Vec<Value> = self
            .violations
            .iter()
            .map(|v| {
                let mut o = json!({ "witness": v.witness.to_json(), "lhs": v.lhs, "rhs": v.rhs });
                if let Some(r) = &v.ratio {
                    o["ratio"] = Value::String(fraction(r));
                }
                o
            })
            .collect();
        let extremal = match &self.extremal {
            Some(e) => json!({ "witness": e.witness.to_json(), "margin": fraction(&e.margin) }),
            None => Value::Null,
        };
        json!({
            "claim": self.claim.id(),
            "params": self.params,
            "checked_count": self.checked_count.to_string(),
            "violations": violations,
            "extremal": extremal,
            "verdict": self.verdict().name(),
            "details": self.details,
        })
    }

    /// Single-line summary for CSV output.
    pub fn csv_row(&self) -> [String; 6] {
        [
            self.claim.id().to_string(),
            self.params.get("N").cloned().unwrap_or_default(),
            self.checked_count.to_string(),
            self.violations.len().to_string(),
            self.extremal.as_ref().map(|e| fraction(&e.margin)).unwrap_or_default(),
            self.verdict().name().to_string(),
        ]
    }
}

pub const REPORT_CSV_HEADER: [&str; 6] = ["claim", "N", "checked_count", "violations", "margin", "verdict"];

/// Pretty JSON for a list of reports, newline-terminated.
pub fn reports_to_json(reports: &[ClaimReport]) -> String {
    let v = Value::Array(reports.iter().map(ClaimReport::to_json).collect());
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}
