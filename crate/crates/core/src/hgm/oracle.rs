//! Exact values of `Z(β; X) = Σ_{Au=β} X^u/u!` and its derivatives `∂^v • Z`
//! by summing over the fiber.
//!
//! Terms are accumulated as integers over the common denominator
//! `D!·Π q_i^{U_i}`, where `X_i = p_i/q_i`, `U_i` bounds `u_i` on the fiber
//! and `D` bounds `|u|`. Each term is then
//! `(D!/u!)·Π p_i^{u_i} q_i^{U_i-u_i}`, built up multiplicatively along the
//! depth-first walk, and `∂^v • Z` reuses it through
//! `X^{u-v}/(u-v)! = (X^u/u!)·(u!/(u-v)!)/X^v`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fiber::FiberWalk;
use crate::algebra::rat::{serde_rat, Rat};
use crate::config::ConfigMatrix;
use crate::error::{Error, Result};
use crate::poly::ExpVec;

/// The vector `Y = (s • Z)(β; X)` for `s` running over a monomial basis `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateVector {
    pub beta: Vec<i64>,
    #[serde(rename = "X", with = "serde_rat::vec")]
    pub x: Vec<Rat>,
    #[serde(rename = "S")]
    pub basis: Vec<ExpVec>,
    #[serde(with = "serde_rat::vec")]
    pub values: Vec<Rat>,
}

impl StateVector {
    /// `Z(β; X)`, the component for the monomial `1`.
    pub fn z(&self) -> &Rat {
        &self.values[0]
    }

    /// Component for `∂^v`, if `∂^v ∈ S`.
    pub fn component(&self, v: &ExpVec) -> Option<&Rat> {
        self.basis.iter().position(|s| s == v).map(|i| &self.values[i])
    }
}

/// Checks that `S` is nonempty, starts with the monomial `1` and has the
/// right number of variables.
pub fn validate_basis(basis: &[ExpVec], n: usize) -> Result<()> {
    match basis.first() {
        None => return Err(Error::invalid("S", "basis is empty")),
        Some(s) if !s.is_one() || s.nvars() != n => {
            return Err(Error::invalid("S", "first element must be the zero vector (the monomial 1)"))
        }
        _ => {}
    }
    if let Some(i) = basis.iter().position(|s| s.nvars() != n) {
        return Err(Error::invalid("S", format!("element {} must have {n} exponents", i + 1)));
    }
    for (i, s) in basis.iter().enumerate() {
        if basis[..i].contains(s) {
            return Err(Error::invalid("S", format!("duplicate element {:?}", s)));
        }
    }
    Ok(())
}

/// Exact `(s • Z)(β; X)` for every `s ∈ S` by enumerating the fiber of `β`.
pub fn oracle_vector(a: &ConfigMatrix, basis: &[ExpVec], beta: &[i64], x: &[Rat]) -> Result<StateVector> {
    a.check_len("beta", beta)?;
    if x.len() != a.n() {
        return Err(Error::invalid("X", format!("expected {} entries, got {}", a.n(), x.len())));
    }
    validate_basis(basis, a.n())?;
    let values = if x.iter().any(Zero::is_zero) {
        direct_sums(a, basis, beta, x)
    } else {
        FastSum::new(a, basis, beta, x).run()
    };
    Ok(StateVector {
        beta: beta.to_vec(),
        x: x.to_vec(),
        basis: basis.to_vec(),
        values,
    })
}

/// Term-by-term rational summation; used when some `X_i` vanishes.
fn direct_sums(a: &ConfigMatrix, basis: &[ExpVec], beta: &[i64], x: &[Rat]) -> Vec<Rat> {
    let mut sums = vec![Rat::zero(); basis.len()];
    let walk = FiberWalk::new(a);
    walk.for_each(beta, |u| {
        for (s, acc) in basis.iter().zip(sums.iter_mut()) {
            if let Some(t) = shifted_term(u, s.exps(), x) {
                *acc += t;
            }
        }
        true
    });
    sums
}

/// `X^{u-v}/(u-v)!`, or `None` unless `u ≥ v`.
pub(crate) fn shifted_term(u: &[u32], v: &[u32], x: &[Rat]) -> Option<Rat> {
    let mut num = Rat::one();
    let mut fact = BigInt::one();
    for ((&ui, &vi), xi) in u.iter().zip(v).zip(x) {
        if ui < vi {
            return None;
        }
        let e = ui - vi;
        for m in 1..=e {
            fact *= m;
        }
        num *= num_traits::pow(xi.clone(), e as usize);
    }
    Some(num / Rat::from_integer(fact))
}

struct FastSum<'a> {
    walk: FiberWalk,
    beta: &'a [i64],
    basis: &'a [ExpVec],
    x: &'a [Rat],
    /// `pow[i][t] = p_i^t q_i^{U_i - t}`
    pow: Vec<Vec<BigInt>>,
    /// `binom[m][t] = C(m, t)`
    binom: Vec<Vec<BigInt>>,
    fact: Vec<BigInt>,
    degree_bound: usize,
    denominator: BigInt,
}

impl<'a> FastSum<'a> {
    fn new(a: &ConfigMatrix, basis: &'a [ExpVec], beta: &'a [i64], x: &'a [Rat]) -> Self {
        let walk = FiberWalk::new(a);
        let n = a.n();
        let nonneg = beta.iter().all(|&b| b >= 0);
        let caps: Vec<usize> = (0..n)
            .map(|j| if nonneg { walk.bound(j, beta).max(0) as usize } else { 0 })
            .collect();
        let degree_bound = match a.homogenizing_row() {
            Some(r) if nonneg => (beta[r] / a.entry(r, 0)).max(0) as usize,
            _ => caps.iter().sum(),
        };
        let pow = (0..n)
            .map(|i| {
                let (p, q) = (x[i].numer(), x[i].denom());
                (0..=caps[i])
                    .map(|t| num_traits::pow(p.clone(), t) * num_traits::pow(q.clone(), caps[i] - t))
                    .collect()
            })
            .collect();
        let mut fact = vec![BigInt::one()];
        for m in 1..=degree_bound {
            let next = &fact[m - 1] * m;
            fact.push(next);
        }
        let mut binom: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for m in 1..=degree_bound {
            let prev = &binom[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            row.push(BigInt::one());
            for t in 1..m {
                row.push(&prev[t - 1] + &prev[t]);
            }
            row.push(BigInt::one());
            binom.push(row);
        }
        let mut denominator = fact[degree_bound].clone();
        for i in 0..n {
            denominator *= num_traits::pow(x[i].denom().clone(), caps[i]);
        }
        FastSum {
            walk,
            beta,
            basis,
            x,
            pow,
            binom,
            fact,
            degree_bound,
            denominator,
        }
    }

    fn run(&self) -> Vec<Rat> {
        let k = self.basis.len();
        if self.beta.iter().any(|&b| b < 0) {
            return vec![Rat::zero(); k];
        }
        let n = self.walk.n();
        let sums = if self.walk.free.is_empty() {
            let mut acc = vec![BigInt::zero(); k];
            let mut u = vec![0u32; n];
            self.leaf(self.beta, &mut u, BigInt::one(), self.degree_bound, &mut acc);
            acc
        } else {
            let j = self.walk.free[0];
            let max = self.walk.bound(j, self.beta);
            (0..=max)
                .into_par_iter()
                .map(|t| {
                    let mut acc = vec![BigInt::zero(); k];
                    let mut u = vec![0u32; n];
                    let r: Vec<i64> = self
                        .beta
                        .iter()
                        .zip(self.walk.column(j))
                        .map(|(b, a)| b - t * a)
                        .collect();
                    u[j] = t as u32;
                    let t = t as usize;
                    let w = &self.binom[self.degree_bound][t] * &self.pow[j][t];
                    let mut r = r;
                    self.descend(1, &mut r, &mut u, w, self.degree_bound - t, &mut acc);
                    acc
                })
                .reduce(
                    || vec![BigInt::zero(); k],
                    |mut a, b| {
                        for (x, y) in a.iter_mut().zip(b) {
                            *x += y;
                        }
                        a
                    },
                )
        };
        sums.into_iter()
            .zip(self.basis)
            .map(|(s, v)| {
                let mut den = Rat::from_integer(self.denominator.clone());
                for (xi, &vi) in self.x.iter().zip(v.exps()) {
                    if vi > 0 {
                        den *= num_traits::pow(xi.clone(), vi as usize);
                    }
                }
                Rat::from_integer(s) / den
            })
            .collect()
    }

    fn descend(&self, level: usize, r: &mut Vec<i64>, u: &mut [u32], w: BigInt, rem: usize, acc: &mut [BigInt]) {
        if level == self.walk.free.len() {
            self.leaf(r, u, w, rem, acc);
            return;
        }
        let j = self.walk.free[level];
        let max = self.walk.bound(j, r);
        for t in 0..=max {
            let tu = t as usize;
            if tu > rem {
                break;
            }
            u[j] = t as u32;
            let wt = &w * &self.binom[rem][tu] * &self.pow[j][tu];
            self.descend(level + 1, r, u, wt, rem - tu, acc);
            for (x, a) in r.iter_mut().zip(self.walk.column(j)) {
                *x -= a;
            }
        }
        let done = (max + 1).min(rem as i64 + 1);
        for (x, a) in r.iter_mut().zip(self.walk.column(j)) {
            *x += a * done;
        }
        u[j] = 0;
    }

    fn leaf(&self, r: &[i64], u: &mut [u32], mut w: BigInt, mut rem: usize, acc: &mut [BigInt]) {
        if !self.walk.complete(r, u) {
            return;
        }
        for (j, &uj) in u.iter().enumerate() {
            if self.walk.free.contains(&j) {
                continue;
            }
            let t = uj as usize;
            if t > rem {
                return;
            }
            w *= &self.binom[rem][t];
            w *= &self.pow[j][t];
            rem -= t;
        }
        w *= &self.fact[rem];
        for (s, a) in self.basis.iter().zip(acc.iter_mut()) {
            let mut factor: u64 = 1;
            let mut ok = true;
            for (&ui, &vi) in u.iter().zip(s.exps()) {
                if ui < vi {
                    ok = false;
                    break;
                }
                for m in 0..vi {
                    factor *= (ui - m) as u64;
                }
            }
            if ok {
                if factor == 1 {
                    *a += &w;
                } else {
                    *a += &w * factor;
                }
            }
        }
    }
}
