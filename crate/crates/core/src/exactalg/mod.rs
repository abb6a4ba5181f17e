//! Exact algebra: cyclotomic group-ring elements and sparse polynomials.

mod cyclotomic;
mod poly;

pub use cyclotomic::{cyclotomic_polynomial, CycElement, UniPoly};
pub use poly::{Coefficient, IntPoly, Monomial, MultiPoly};
