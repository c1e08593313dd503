//! Moving an integer configuration into the nonnegative orthant.
//!
//! When every column lies on the hyperplane `hform·a = 1`, adding a fixed
//! vector `p` to each column gives `A' = (I + p·hform) A`, which has the same
//! kernel as `A` as long as `1 + hform·p ≠ 0`.

use num_traits::{One, Zero};

use crate::algebra::Rat;
use crate::config::ConfigMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shift {
    pub a: ConfigMatrix,
    pub p: Vec<i64>,
    pub hform: Vec<Rat>,
}

impl Shift {
    /// `β' = β + (hform·β)·p`; `hform·β` must be an integer.
    pub fn transform_beta(&self, beta: &[i64]) -> Result<Vec<i64>> {
        self.a.check_len("beta", beta)?;
        let s: Rat = dot(&self.hform, beta);
        if !s.is_integer() {
            return Err(Error::NoHyperplane(format!("hform·beta = {s} is not an integer")));
        }
        let s = s.to_integer();
        let s: i64 = s.try_into().map_err(|_| Error::NoHyperplane("hform·beta out of range".into()))?;
        Ok(beta.iter().zip(&self.p).map(|(b, p)| b + s * p).collect())
    }
}

fn dot(h: &[Rat], v: &[i64]) -> Rat {
    h.iter()
        .zip(v)
        .map(|(a, &b)| a * Rat::from_integer(b.into()))
        .fold(Rat::zero(), |x, y| x + y)
}

/// `p_i = max(0, -min_j a_ij)`, adjusted by a unit vector when
/// `hform·p = -1`; returns `A' = (a_j + p)_j`.
pub fn shift_nonnegative(rows: &[Vec<i64>], hform: &[Rat]) -> Result<Shift> {
    let d = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    if d == 0 || n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::invalid("A", "matrix must be nonempty and rectangular"));
    }
    if hform.len() != d {
        return Err(Error::invalid("hform", format!("expected {d} entries, got {}", hform.len())));
    }
    for j in 0..n {
        let col: Vec<i64> = rows.iter().map(|r| r[j]).collect();
        if !dot(hform, &col).is_one() {
            return Err(Error::NoHyperplane(format!("hform·a_{} != 1", j + 1)));
        }
    }
    let mut p: Vec<i64> = rows.iter().map(|r| (-r.iter().copied().min().unwrap()).max(0)).collect();
    if dot(hform, &p) == -Rat::one() {
        let e = hform.iter().position(|h| !h.is_zero()).expect("hform is nonzero");
        p[e] += 1;
    }
    let shifted: Vec<Vec<i64>> = rows
        .iter()
        .zip(&p)
        .map(|(r, pi)| r.iter().map(|a| a + pi).collect())
        .collect();
    Ok(Shift {
        a: ConfigMatrix::new(shifted)?,
        p,
        hform: hform.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    #[test]
    fn worked_shift() {
        let s = shift_nonnegative(&[vec![1, 1], vec![-1, 0]], &[rat(1), rat(0)]).unwrap();
        assert_eq!(s.p, vec![0, 1]);
        assert_eq!(s.a.rows(), &[vec![1, 1], vec![0, 1]]);
        assert_eq!(s.transform_beta(&[2, -1]).unwrap(), vec![2, 1]);
    }

    #[test]
    fn nonnegative_is_unchanged() {
        let rows = vec![vec![1, 1, 1], vec![0, 1, 2]];
        let s = shift_nonnegative(&rows, &[rat(1), rat(0)]).unwrap();
        assert_eq!(s.p, vec![0, 0]);
        assert_eq!(s.a.rows(), rows.as_slice());
    }

    #[test]
    fn hyperplane_required() {
        assert!(matches!(
            shift_nonnegative(&[vec![1, 2], vec![-1, 0]], &[rat(1), rat(0)]),
            Err(Error::NoHyperplane(_))
        ));
    }
}
