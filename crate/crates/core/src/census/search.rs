//! Depth-first enumeration of all weights of one group with dimension
//! `<= bound`.
//!
//! Weights are built from generators with non-negative Dynkin labels: the
//! fundamental weights for exceptional groups and the columns `(1^p)` of
//! `lambda` for classical ones (`lambda = sum_p c_p (1^p)`, so
//! `c_p = lambda_p - lambda_{p+1}`; for `SL_n` this is `c_p = a_p - 1`).
//! Every Weyl factor is a non-decreasing function of each label and is
//! `>= 1`, hence the dimension never decreases when a generator is added.
//! That gives two prunes:
//!
//! * if `c (1^p)` alone exceeds the bound, so does every weight with
//!   coefficient `>= c` at `p`; in particular positions `p` whose generator
//!   exceeds the bound never appear;
//! * along one coefficient, the first overshoot ends the loop.
//!
//! The pruning is NOT justified by monotonicity in `lambda` coordinates,
//! which fails: for `SO_4`, `dim (1,0) = 4 > dim (1,1) = 3`.
//!
//! For classical groups the generator dimensions `dim (1^p)` are, as
//! functions of `p`, binomial-type sequences without interior local minima
//! (`C(n,p)`, `C(2n+1,p)`, `C(2n,p) - C(2n,p-2)`, and `C(2n,p)` followed by
//! `C(2n,n)/2`), so the admissible positions form a prefix plus a suffix and
//! are found by scanning inwards from both ends. This keeps the work per
//! group independent of the rank once the rank is large.

use std::time::Instant;

use crate::lie::exact::Bounded;
use crate::lie::{Family, GroupId, WeightTuple};
use crate::roots::{self, RootSystem};
use crate::Result;

use super::fastdim::{blocks_of_columns, classical_dim_bounded};
use super::EnumerationStats;

/// A weight as `(position, coefficient)` pairs, positions 1-based and
/// strictly increasing, coefficients `>= 1`.
pub(crate) type Columns = [(u64, u64)];

enum Evaluator {
    Classical { family: Family, n: u64 },
    Exceptional(&'static RootSystem),
}

pub(crate) struct GroupSearch {
    group: GroupId,
    bound: u64,
    positions: u64,
    eval: Evaluator,
    nodes: u64,
    prunes: u64,
    records: u64,
    labels: Vec<u64>,
}

impl GroupSearch {
    pub(crate) fn new(group: GroupId, bound: u64) -> Result<Self> {
        let family = group.family();
        let eval = if family.is_exceptional() {
            Evaluator::Exceptional(roots::exceptional_system(family)?)
        } else {
            Evaluator::Classical { family, n: group.rank() }
        };
        Ok(GroupSearch {
            group,
            bound,
            positions: group.lie_rank() as u64,
            eval,
            nodes: 0,
            prunes: 0,
            records: 0,
            labels: if family.is_exceptional() { vec![0; group.lie_rank()] } else { Vec::new() },
        })
    }

    fn evaluate(&mut self, cols: &Columns) -> Result<Bounded> {
        self.nodes += 1;
        let out = match self.eval {
            Evaluator::Classical { family, n } => {
                classical_dim_bounded(family, n, &blocks_of_columns(cols, n), self.bound)?
            }
            Evaluator::Exceptional(rs) => {
                self.labels.iter_mut().for_each(|l| *l = 0);
                for &(p, c) in cols {
                    self.labels[(p - 1) as usize] = c;
                }
                roots::weyl_dim_bounded(rs, &self.labels, self.bound)?
            }
        };
        if out == Bounded::Exceeds {
            self.prunes += 1;
        }
        Ok(out)
    }

    fn within(&mut self, p: u64) -> Result<bool> {
        Ok(matches!(self.evaluate(&[(p, 1)])?, Bounded::Within(_)))
    }

    /// Positions whose generator alone fits under the bound.
    fn candidate_positions(&mut self) -> Result<Vec<u64>> {
        let r = self.positions;
        if let Evaluator::Exceptional(_) = self.eval {
            let mut out = Vec::new();
            for p in 1..=r {
                if self.within(p)? {
                    out.push(p);
                }
            }
            return Ok(out);
        }
        let mut head = Vec::new();
        let mut p = 1;
        while p <= r && self.within(p)? {
            head.push(p);
            p += 1;
        }
        let mut q = r;
        let mut tail = Vec::new();
        while q > p && self.within(q)? {
            tail.push(q);
            q -= 1;
        }
        head.extend(tail.into_iter().rev());
        Ok(head)
    }

    /// Visit every nontrivial weight with dimension `<= bound`, in no
    /// particular order.
    pub(crate) fn run<F: FnMut(&Columns, u64)>(mut self, mut visit: F) -> Result<EnumerationStats> {
        let started = Instant::now();
        let cands = self.candidate_positions()?;
        let mut cols = Vec::with_capacity(cands.len());
        self.descend(0, &cands, &mut cols, &mut visit)?;
        Ok(EnumerationStats {
            group: self.group,
            nodes: self.nodes,
            prunes: self.prunes,
            records: self.records,
            wall: started.elapsed(),
        })
    }

    fn descend<F: FnMut(&Columns, u64)>(
        &mut self,
        start: usize,
        cands: &[u64],
        cols: &mut Vec<(u64, u64)>,
        visit: &mut F,
    ) -> Result<()> {
        for qi in start..cands.len() {
            cols.push((cands[qi], 0));
            loop {
                cols.last_mut().unwrap().1 += 1;
                match self.evaluate(cols)? {
                    Bounded::Within(d) => {
                        self.records += 1;
                        visit(cols, d);
                        self.descend(qi + 1, cands, cols, visit)?;
                    }
                    Bounded::Exceeds => break,
                }
            }
            cols.pop();
        }
        Ok(())
    }
}

/// Expand a column description into the group's weight tuple.
pub(crate) fn weight_of_columns(group: GroupId, cols: &Columns) -> WeightTuple {
    let len = group.tuple_len();
    match group.family() {
        Family::Sl => {
            let mut a = vec![1u64; len];
            for &(p, c) in cols {
                a[(p - 1) as usize] += c;
            }
            WeightTuple(a)
        }
        Family::SoOdd | Family::SoEven | Family::Sp => {
            let mut lam = vec![0u64; len];
            for &(p, c) in cols {
                lam[(p - 1) as usize] += c;
            }
            for i in (0..len.saturating_sub(1)).rev() {
                lam[i] += lam[i + 1];
            }
            WeightTuple(lam)
        }
        _ => {
            let mut labels = vec![0u64; len];
            for &(p, c) in cols {
                labels[(p - 1) as usize] = c;
            }
            WeightTuple(labels)
        }
    }
}
