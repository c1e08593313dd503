//! A heuristic choice of the basis `S` for systems that come without one.
//!
//! The non-pivot columns of the echelon form of `F'_T` (built with empty `S`)
//! at a numeric point are standard monomials of the specialized system. The
//! ones of degree at most `T` are taken as `S` once they stop changing from
//! one degree to the next. The result is a guess; extraction certifies it.

use crate::algebra::Rat;
use crate::config::ConfigMatrix;
use crate::error::{Error, Result};
use crate::macaulay::build_macaulay;
use crate::macaulay::echelon::SparseEchelon;
use crate::poly::{ExpVec, GroebnerBasis};

/// A fixed point with pairwise distinct, unremarkable rational coordinates.
pub fn generic_point(len: usize, salt: i64) -> Vec<Rat> {
    (0..len as i64)
        .map(|i| Rat::new((7 * i + 3 + salt).into(), (5 * i + 11 + 2 * salt).into()))
        .collect()
}

/// Standard monomials of the Euler system at `x`, `c`, with `1` first.
pub fn guess_basis(a: &ConfigMatrix, g: &GroebnerBasis, x: &[Rat], c: &[Rat], max_degree: u32) -> Result<Vec<ExpVec>> {
    let mut prev: Option<Vec<ExpVec>> = None;
    for t in 1..=max_degree {
        let m = build_macaulay(a, g, &[], t)?;
        let mut ech = SparseEchelon::<Rat>::new(m.ncols());
        for row in m.evaluate_sparse(x, c) {
            ech.insert(row);
        }
        let mut free: Vec<ExpVec> = (0..m.ncols())
            .filter(|&j| !ech.is_pivot(j))
            .map(|j| m.columns()[j].clone())
            .filter(|s| s.degree() <= t)
            .collect();
        if !free.iter().any(ExpVec::is_one) {
            free.push(ExpVec::zero(a.n()));
        }
        free.sort_by(|p, q| p.degree().cmp(&q.degree()).then_with(|| g.order().cmp(p, q)));
        if prev.as_ref() == Some(&free) {
            return Ok(free);
        }
        prev = Some(free);
    }
    Err(Error::GenericityFailure { max_degree })
}
