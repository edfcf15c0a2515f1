//! Weight-tuple data model and the classical dimension formulas.

pub(crate) mod exact;
mod formulas;
mod types;

pub use formulas::{
    dim, dim_sl, dim_so_even, dim_so_odd, dim_sp, dynkin_labels, formula_factors, l_to_lambda, lambda_to_l,
    sl_formula_factors, weight_from_dynkin,
};
pub use types::{Family, GroupId, LTuple, RepRecord, WeightTuple};
