//! Exact arithmetic in the coefficient field `Q(q, v)`, `v = t^{1/2}`.

mod gcd;
mod intpoly;
mod ratfunc;

pub use gcd::gcd;
pub use intpoly::{IntPoly2, Mono};
pub use ratfunc::{one_minus, one_minus_qt, rf_arith, rf_eval, rf_normalize, ArithOp, RatFunc};
