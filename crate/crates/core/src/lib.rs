//! Exact dimensions and exhaustive censuses of irreducible representations of
//! the simple complex Lie groups, with checkers for linear growth bounds on
//! the cumulative counting function `R_N`.
//!
//! Layout:
//!
//! * [`lie`]: weight tuples, shifted `l`-coordinates and the four classical
//!   product formulas.
//! * [`roots`]: Cartan matrices, positive coroots by string closure, and the
//!   general Weyl dimension formula (used for G2, F4, E6, E7, E8 and as an
//!   independent check on the classical formulas).
//! * [`census`]: pruned enumeration of every irreducible of dimension `<= N`
//!   and the `r_k` / `R_k` tables.
//! * [`claims`]: bound and lemma checkers producing [`claims::ClaimReport`]s.
//! * [`cli`]: the `irrepcount` command line.
//!
//! All arithmetic is exact; no floating point is used for dimensions or
//! inequality checks.

pub mod census;
pub mod claims;
pub mod cli;
mod error;
pub mod lie;
pub mod roots;

pub use error::{Error, Result};
pub use lie::{Family, GroupId, LTuple, RepRecord, WeightTuple};
