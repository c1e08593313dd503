//! Fibers, exact oracle values and the holonomic gradient method.

pub mod eval;
pub mod fiber;
pub mod oracle;
pub mod shift;

pub use eval::{expectation, expectation_with, hgm_eval, hgm_eval_traced, step_along, EvalPlan, EvalTrace, Leg};
pub use fiber::{enumerate_fiber, fiber_size, first_fiber_point, in_semigroup, Fiber};
pub use oracle::{oracle_vector, validate_basis, StateVector};
pub use shift::{shift_nonnegative, Shift};
