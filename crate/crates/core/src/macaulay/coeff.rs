use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{Rat, UniPolyK};

/// Variables a Macaulay-matrix coefficient may depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoeffVar {
    X(usize),
    One,
    C(usize),
}

/// A coefficient `Σ q_m x_m + α + Σ γ_j c_j`, linear in `x` and affine in `c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CoeffCX {
    terms: BTreeMap<CoeffVar, Rat>,
}

impl CoeffCX {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(v: CoeffVar, q: Rat) -> Self {
        let mut c = Self::zero();
        c.add_term(v, q);
        c
    }

    pub fn constant(q: Rat) -> Self {
        Self::term(CoeffVar::One, q)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoeffVar, &Rat)> {
        self.terms.iter()
    }

    pub fn get(&self, v: CoeffVar) -> Rat {
        self.terms.get(&v).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, v: CoeffVar, q: Rat) {
        if q.is_zero() {
            return;
        }
        let e = self.terms.entry(v).or_insert_with(Rat::zero);
        *e += q;
        if e.is_zero() {
            self.terms.remove(&v);
        }
    }

    pub fn add_assign(&mut self, other: &CoeffCX) {
        for (v, q) in &other.terms {
            self.add_term(*v, q.clone());
        }
    }

    /// Value at `x = X` and `c = β + kH` as a polynomial in `k`.
    pub fn specialize(&self, x: &[Rat], beta: &[i64], h: &[i64]) -> UniPolyK {
        let mut c0 = Rat::zero();
        let mut c1 = Rat::zero();
        for (v, q) in &self.terms {
            match *v {
                CoeffVar::X(m) => c0 += q * &x[m],
                CoeffVar::One => c0 += q,
                CoeffVar::C(j) => {
                    c0 += q * Rat::from_integer(beta[j].into());
                    c1 += q * Rat::from_integer(h[j].into());
                }
            }
        }
        UniPolyK::new(vec![c0, c1])
    }

    /// Value at numeric `x` and `c`.
    pub fn eval(&self, x: &[Rat], c: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(v, q)| match *v {
                CoeffVar::X(m) => q * &x[m],
                CoeffVar::One => q.clone(),
                CoeffVar::C(j) => q * &c[j],
            })
            .fold(Rat::zero(), |a, b| a + b)
    }
}

impl fmt::Display for CoeffCX {
    /// Compact form such as `x2`, `1-c1` or `2*x1+x3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (v, q)) in self.terms.iter().enumerate() {
            let a = q.abs();
            if q.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            match v {
                CoeffVar::One => write!(f, "{a}")?,
                CoeffVar::X(m) | CoeffVar::C(m) => {
                    let name = if matches!(v, CoeffVar::X(_)) { 'x' } else { 'c' };
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "{name}{}", m + 1)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{frac, rat};

    #[test]
    fn display_and_specialize() {
        let mut e = CoeffCX::constant(rat(1));
        e.add_term(CoeffVar::C(0), rat(-1));
        assert_eq!(e.to_string(), "1-c1");
        assert_eq!(e.specialize(&[], &[3, 2, 1], &[1, 1, 1]).to_string(), "-k-2");
        let x = CoeffCX::term(CoeffVar::X(2), rat(1));
        assert_eq!(x.to_string(), "x3");
        let xs = [rat(1), rat(1), frac(1, 2), rat(1)];
        assert_eq!(x.specialize(&xs, &[0; 3], &[0; 3]).to_string(), "1/2");
        let mut s = CoeffCX::term(CoeffVar::X(0), rat(2));
        s.add_term(CoeffVar::X(0), rat(-2));
        assert!(s.is_zero());
    }
}
