//! Exact computation of type `GL_n` Macdonald polynomials through the
//! polynomial representation of the affine Hecke algebra, together with the
//! combinatorics of nonattacking fillings, queue tableaux, pipe dreams and
//! alcove walks.

pub mod affine_weyl;
pub mod coeff_field;
pub mod diagrams;
pub mod error;
pub mod expr;
pub mod hecke;
pub mod laurent;
pub mod macdonald;
pub mod serialize;

pub use coeff_field::{IntPoly2, Mono, RatFunc};
pub use error::{Error, Result};
