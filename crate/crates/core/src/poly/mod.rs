//! Commutative polynomials over Q, term orders and Gröbner bases.

pub mod groebner;
pub mod monomial;
pub mod order;
pub mod polynomial;
pub mod toric;

pub use groebner::{buchberger, normal_form, GroebnerBasis};
pub use monomial::ExpVec;
pub use order::{OrderSpec, TermOrder};
pub use polynomial::{Poly, PolyJson, TermJson};
pub use toric::{is_toric_basis, lattice_toric_gb, reduce_monomial, semigroup_member, toric_gb};
