//! Exact arithmetic kernels: rationals, polynomials and rational functions in
//! one parameter `k`, and echelon forms over either field.

pub mod matrix;
pub mod rat;
pub mod ratfunc;
pub mod unipoly;

pub use matrix::{determinant, invert, rref, Echelon, Field, FieldMatrix};
pub use rat::{parse_rat, to_decimal, Rat};
pub use ratfunc::{eval_ratfunc, RatFuncK};
pub use unipoly::UniPolyK;
