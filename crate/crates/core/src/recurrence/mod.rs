//! Contiguity recurrences `Y(k-1) = R(k)·Y(k)` read off Macaulay matrices,
//! and parameter paths toward the origin.

pub mod basis;
pub mod direction;
pub mod extract;
pub mod matrix;
pub mod path;

pub use basis::{generic_point, guess_basis};
pub use direction::{decompose_direction, Direction};
pub use extract::{extract_along, extract_recurrence, pfaffian_matrix, ExtractOptions, MAX_DEGREE};
pub use matrix::{RecurrenceJson, RecurrenceMatrix};
pub use path::{find_path, Path};
