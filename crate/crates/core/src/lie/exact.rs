//! Exact accumulation of products of rational factors.
//!
//! Every dimension formula in the crate is a product of fractions that are
//! each `>= 1`. [`ExactRatio`] multiplies them exactly with unbounded
//! integers; [`BoundedRatio`] keeps a reduced `u128` fraction and stops as
//! soon as the running product exceeds a bound, which is sound because the
//! running product never decreases.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Sink for the factors of a product formula. `mul` returns `false` to ask
/// the producer to stop early.
pub(crate) trait Accumulate {
    fn mul(&mut self, num: u64, den: u64) -> bool;
}

const REDUCE_EVERY: u32 = 16;

/// Unbounded exact product with batched `u128` staging and periodic
/// common-factor reduction.
#[derive(Debug, Clone)]
pub(crate) struct ExactRatio {
    num: BigUint,
    den: BigUint,
    stage_num: u128,
    stage_den: u128,
    flushes: u32,
}

impl Default for ExactRatio {
    fn default() -> Self {
        ExactRatio { num: BigUint::one(), den: BigUint::one(), stage_num: 1, stage_den: 1, flushes: 0 }
    }
}

impl ExactRatio {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn mul_wide(&mut self, num: u128, den: u128) {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        match (self.stage_num.checked_mul(num), self.stage_den.checked_mul(den)) {
            (Some(a), Some(b)) => {
                self.stage_num = a;
                self.stage_den = b;
            }
            _ => {
                self.flush();
                self.stage_num = num;
                self.stage_den = den;
            }
        }
    }

    fn flush(&mut self) {
        if self.stage_num != 1 {
            self.num *= BigUint::from(self.stage_num);
        }
        if self.stage_den != 1 {
            self.den *= BigUint::from(self.stage_den);
        }
        self.stage_num = 1;
        self.stage_den = 1;
        self.flushes += 1;
        if self.flushes.is_multiple_of(REDUCE_EVERY) {
            self.reduce();
        }
    }

    fn reduce(&mut self) {
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num /= &g;
            self.den /= &g;
        }
    }

    /// Final exact division. A non-unit denominator means a formula bug.
    pub(crate) fn finish(mut self, context: impl FnOnce() -> String) -> Result<BigUint> {
        self.flush();
        self.reduce();
        if self.den.is_one() && !self.num.is_zero() {
            Ok(self.num)
        } else {
            Err(Error::IntegralityFault {
                context: context(),
                numerator: self.num.to_string(),
                denominator: self.den.to_string(),
            })
        }
    }
}

impl Accumulate for ExactRatio {
    fn mul(&mut self, num: u64, den: u64) -> bool {
        self.mul_wide(num as u128, den as u128);
        true
    }
}

/// Outcome of a bounded evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Bounded {
    /// Exact value, `<= bound`.
    Within(u64),
    Exceeds,
}

/// Fraction that aborts once it exceeds `bound`. Kept reduced in `u128`;
/// when that overflows (many factors close to 1 with large terms, as at
/// high rank) it moves to unbounded integers and keeps the early exit.
#[derive(Debug, Clone)]
pub(crate) struct BoundedRatio {
    num: u128,
    den: u128,
    bound: u128,
    big: Option<Box<(BigUint, BigUint)>>,
    steps: u32,
    exceeded: bool,
}

impl BoundedRatio {
    pub(crate) fn new(bound: u64) -> Self {
        BoundedRatio { num: 1, den: 1, bound: bound as u128, big: None, steps: 0, exceeded: false }
    }

    pub(crate) fn finish(self, context: impl FnOnce() -> String) -> Result<Bounded> {
        if self.exceeded {
            return Ok(Bounded::Exceeds);
        }
        let (num, den) = match self.big {
            Some(b) => {
                let (n, d) = *b;
                let g = n.gcd(&d);
                ((n / &g).try_into().ok(), d / g)
            }
            None => (Some(self.num), BigUint::from(self.den)),
        };
        match num {
            Some(v) if den.is_one() => Ok(Bounded::Within(v as u64)),
            _ => Err(Error::IntegralityFault {
                context: context(),
                numerator: num.map_or_else(|| "(large)".to_string(), |v: u128| v.to_string()),
                denominator: den.to_string(),
            }),
        }
    }

    fn mul_big(&mut self, a: u128, b: u128) -> bool {
        let big = self.big.as_mut().expect("promoted");
        big.0 *= a;
        big.1 *= b;
        self.steps += 1;
        if self.steps.is_multiple_of(REDUCE_EVERY) {
            let g = big.0.gcd(&big.1);
            if !g.is_one() {
                big.0 /= &g;
                big.1 /= &g;
            }
        }
        if big.0 > &big.1 * self.bound {
            self.exceeded = true;
            return false;
        }
        true
    }
}

impl Accumulate for BoundedRatio {
    fn mul(&mut self, num: u64, den: u64) -> bool {
        if num == den {
            return true;
        }
        let g = num.gcd(&den);
        let (mut a, mut b) = ((num / g) as u128, (den / g) as u128);
        if self.big.is_some() {
            return self.mul_big(a, b);
        }
        if self.den != 1 {
            let g = a.gcd(&self.den);
            a /= g;
            self.den /= g;
        }
        if self.num != 1 && b != 1 {
            let g = b.gcd(&self.num);
            b /= g;
            self.num /= g;
        }
        match (self.num.checked_mul(a), self.den.checked_mul(b)) {
            (Some(n), Some(d)) => {
                self.num = n;
                self.den = d;
            }
            _ => {
                self.big = Some(Box::new((BigUint::from(self.num), BigUint::from(self.den))));
                return self.mul_big(a, b);
            }
        }
        match self.bound.checked_mul(self.den) {
            Some(limit) if self.num > limit => {
                self.exceeded = true;
                false
            }
            _ => true,
        }
    }
}
