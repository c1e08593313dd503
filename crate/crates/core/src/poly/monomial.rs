use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector of a monomial `x^u` (or `∂^u`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExpVec(Vec<u32>);

impl ExpVec {
    pub fn new(exps: Vec<u32>) -> Self {
        ExpVec(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    /// The unit vector `e_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExpVec(v)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &ExpVec) -> Option<ExpVec> {
        other
            .divides(self)
            .then(|| ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn increment(&self, i: usize) -> ExpVec {
        let mut v = self.0.clone();
        v[i] += 1;
        ExpVec(v)
    }

    /// Renders as `d1^2*d3`, or `1` for the constant monomial.
    pub fn display<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        MonomialDisplay { exps: self, var }
    }

    /// Compact column label: the variable indices repeated by multiplicity,
    /// e.g. `d1d1d4`, or `1` for the constant monomial.
    pub fn label(&self, var: &str) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (i, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                s.push_str(var);
                s.push_str(&(i + 1).to_string());
            }
        }
        s
    }
}

impl From<Vec<u32>> for ExpVec {
    fn from(v: Vec<u32>) -> Self {
        ExpVec(v)
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

struct MonomialDisplay<'a> {
    exps: &'a ExpVec,
    var: &'a str,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{}{}", self.var, i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = ExpVec::new(vec![1, 0, 2]);
        let b = ExpVec::new(vec![2, 1, 1]);
        assert_eq!(a.lcm(&b), ExpVec::new(vec![2, 1, 2]));
        assert!(!a.divides(&b));
        assert_eq!(a.mul(&b).div(&b), Some(a.clone()));
        assert_eq!(a.display("d").to_string(), "d1*d3^2");
        assert_eq!(a.label("d"), "d1d3d3");
        assert_eq!(ExpVec::zero(3).display("x").to_string(), "1");
    }
}
