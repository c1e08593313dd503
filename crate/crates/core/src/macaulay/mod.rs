//! Macaulay-type matrices of the A-hypergeometric system.

pub mod coeff;
pub mod echelon;
pub mod matrix;
pub mod row;

pub use coeff::{CoeffCX, CoeffVar};
pub use matrix::{build_macaulay, monomials_up_to, MacaulayMatrix};
pub use row::{euler_times_monomial, reduce_row, OperatorRow};
