//! Toric ideals `I_A = ⟨∂^u - ∂^v | Au = Av⟩` by elimination.

use num_traits::One;

use super::groebner::{buchberger, GroebnerBasis};
use super::monomial::ExpVec;
use super::order::TermOrder;
use super::polynomial::Poly;
use crate::algebra::rat::Rat;
use crate::config::ConfigMatrix;
use crate::error::{Error, Result};
use crate::hgm::fiber::first_fiber_point;

/// Reduced Gröbner basis of `I_A` in the variables `∂1..∂n` for `order`.
pub fn toric_gb(a: &ConfigMatrix, order: &TermOrder) -> Result<GroebnerBasis> {
    lattice_toric_gb(a.rows(), order)
}

/// Same as [`toric_gb`] for an arbitrary integer matrix.
///
/// Works in `Q[t_1..t_d, y, ∂_1..∂_n]` with generators
/// `∂_j t^{a_j^-} - t^{a_j^+}`; when some entry is negative the extra
/// generator `y·t_1⋯t_d - 1` inverts the `t`'s. The `t`- and `y`-free part of
/// the block-order basis generates `I_A`.
pub fn lattice_toric_gb(rows: &[Vec<i64>], order: &TermOrder) -> Result<GroebnerBasis> {
    let d = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    if d == 0 || n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::invalid("A", "matrix must be nonempty and rectangular"));
    }
    if order.nvars() != n {
        return Err(Error::invalid("order", format!("order acts on {} variables, expected {n}", order.nvars())));
    }
    let negative = rows.iter().flatten().any(|&a| a < 0);
    let elim = d + usize::from(negative);
    let total = elim + n;
    let block = TermOrder::block(elim, order.clone());

    let mut gens = Vec::with_capacity(n + 1);
    for j in 0..n {
        let mut lhs = vec![0u32; total];
        let mut rhs = vec![0u32; total];
        lhs[elim + j] = 1;
        for (i, r) in rows.iter().enumerate() {
            let a = r[j];
            if a < 0 {
                lhs[i] = (-a) as u32;
            } else {
                rhs[i] = a as u32;
            }
        }
        gens.push(Poly::binomial(ExpVec::new(lhs), ExpVec::new(rhs), &block));
    }
    if negative {
        let mut ty = vec![1u32; elim];
        ty.resize(total, 0);
        gens.push(Poly::binomial(ExpVec::new(ty), ExpVec::zero(total), &block));
    }

    let g = buchberger(&gens, &block);
    let kept: Vec<Poly> = g
        .generators()
        .iter()
        .filter(|p| p.terms().iter().all(|(e, _)| e.exps()[..elim].iter().all(|&x| x == 0)))
        .map(|p| {
            Poly::from_terms(
                p.terms()
                    .iter()
                    .map(|(e, c)| (ExpVec::new(e.exps()[elim..].to_vec()), c.clone()))
                    .collect(),
                order,
            )
        })
        .collect();
    Ok(buchberger(&kept, order))
}

/// Normal form of the monomial `∂^u` modulo a binomial basis. The result is
/// again a monomial with coefficient one.
pub fn reduce_monomial(u: &ExpVec, g: &GroebnerBasis) -> ExpVec {
    let mut m = u.clone();
    'outer: loop {
        for p in g.generators() {
            let terms = p.terms();
            let Some((lm, _)) = terms.first() else { continue };
            if let Some(q) = m.div(lm) {
                m = match terms.get(1) {
                    Some((tail, _)) => q.mul(tail),
                    // a pure monomial generator would send ∂^u to zero; toric
                    // ideals never contain monomials
                    None => unreachable!("monomial in a toric ideal"),
                };
                continue 'outer;
            }
        }
        return m;
    }
}

/// True when every generator is `∂^u - ∂^v` with `Au = Av`.
pub fn is_toric_basis(a: &ConfigMatrix, g: &GroebnerBasis) -> bool {
    g.generators().iter().all(|p| match p.terms() {
        [(u, cu), (v, cv)] => cu.is_one() && *cv == -Rat::one() && a.apply(u.exps()) == a.apply(v.exps()),
        _ => false,
    })
}

/// Some `u` with `Au = β` whose monomial `∂^u` is standard for `g`, or `None`
/// when `β ∉ N_0·A`.
pub fn semigroup_member(a: &ConfigMatrix, g: &GroebnerBasis, beta: &[i64]) -> Option<ExpVec> {
    let u = first_fiber_point(a, beta)?;
    Some(reduce_monomial(&ExpVec::new(u), g))
}
