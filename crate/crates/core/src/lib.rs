//! Exact evaluation of A-hypergeometric polynomials
//! `Z(β; x) = Σ_{Au=β} x^u/u!` and their derivatives by contiguity
//! recurrences read off Macaulay-type matrices.

pub mod algebra;
pub mod bench;
pub mod config;
pub mod error;
pub mod hgm;
pub mod macaulay;
pub mod poly;
pub mod problem;
pub mod recurrence;

pub use config::ConfigMatrix;
pub use error::{Error, Result};
pub use problem::Problem;
