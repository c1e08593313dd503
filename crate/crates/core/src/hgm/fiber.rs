//! Enumeration of fibers `{u ∈ N_0^n : A u = β}`.
//!
//! The walk fixes a set of `d` linearly independent "basis" columns. The
//! remaining free coordinates are enumerated depth-first with the bound
//! `u_i ≤ min_j ⌊r_j / a_ji⌋` on the residual `r`, and at each leaf the basis
//! coordinates are solved for exactly.

use num_traits::{ToPrimitive, Zero};

use crate::algebra::{determinant, invert, FieldMatrix, Rat};
use crate::config::ConfigMatrix;

/// All solutions of `A u = β`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    points: Vec<Vec<u32>>,
}

impl Fiber {
    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Complete fiber of `β`. Negative or out-of-cone `β` give an empty fiber.
pub fn enumerate_fiber(a: &ConfigMatrix, beta: &[i64]) -> Fiber {
    let mut points = Vec::new();
    FiberWalk::new(a).for_each(beta, |u| {
        points.push(u.to_vec());
        true
    });
    points.sort();
    Fiber { points }
}

/// Number of fiber points, without storing them.
pub fn fiber_size(a: &ConfigMatrix, beta: &[i64]) -> u64 {
    let mut n = 0u64;
    FiberWalk::new(a).for_each(beta, |_| {
        n += 1;
        true
    });
    n
}

/// Some point of the fiber, or `None` when `β ∉ N_0·A`.
pub fn first_fiber_point(a: &ConfigMatrix, beta: &[i64]) -> Option<Vec<u32>> {
    let mut found = None;
    FiberWalk::new(a).for_each(beta, |u| {
        found = Some(u.to_vec());
        false
    });
    found
}

/// `β ∈ N_0·A`
pub fn in_semigroup(a: &ConfigMatrix, beta: &[i64]) -> bool {
    first_fiber_point(a, beta).is_some()
}

#[derive(Clone, Debug)]
struct BasisSolve {
    cols: Vec<usize>,
    /// adjugate of the basis submatrix, so that `u_B = adj·r / det`
    adj: Vec<Vec<i64>>,
    det: i64,
}

/// Precomputed traversal plan for one configuration matrix.
#[derive(Clone, Debug)]
pub(crate) struct FiberWalk {
    cols: Vec<Vec<i64>>,
    d: usize,
    /// free coordinates in traversal order
    pub(crate) free: Vec<usize>,
    basis: Option<BasisSolve>,
}

impl FiberWalk {
    pub(crate) fn new(a: &ConfigMatrix) -> Self {
        let cols = a.columns();
        let d = a.d();
        let basis = independent_columns(&cols, d).map(|bcols| {
            let m = FieldMatrix::from_rows(
                (0..d)
                    .map(|i| bcols.iter().map(|&j| Rat::from_integer(cols[j][i].into())).collect())
                    .collect(),
            );
            let det = determinant(&m).expect("square");
            let inv = invert(&m).expect("independent columns");
            let adj = inv
                .rows()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| (x * &det).to_integer().to_i64().expect("small adjugate"))
                        .collect()
                })
                .collect();
            BasisSolve {
                cols: bcols,
                adj,
                det: det.to_integer().to_i64().expect("small determinant"),
            }
        });
        let n = cols.len();
        let mut free: Vec<usize> = match &basis {
            Some(b) => (0..n).filter(|j| !b.cols.contains(j)).collect(),
            None => (0..n.saturating_sub(1)).collect(),
        };
        // tightest coordinates first: the ones with the largest column sums
        // have the smallest bounds
        free.sort_by_key(|&j| (std::cmp::Reverse(cols[j].iter().sum::<i64>()), j));
        FiberWalk {
            cols,
            d,
            free,
            basis,
        }
    }

    pub(crate) fn n(&self) -> usize {
        self.cols.len()
    }

    /// Largest `t` with `t·a_j ≤ r` componentwise.
    pub(crate) fn bound(&self, j: usize, r: &[i64]) -> i64 {
        self.cols[j]
            .iter()
            .zip(r)
            .filter(|(a, _)| **a > 0)
            .map(|(a, x)| x.div_euclid(*a))
            .min()
            .unwrap_or(0)
    }

    /// Solves for the non-free coordinates given the residual after the free
    /// coordinates are fixed. Writes them into `u`.
    pub(crate) fn complete(&self, r: &[i64], u: &mut [u32]) -> bool {
        match &self.basis {
            Some(b) => {
                for (row, &j) in b.adj.iter().zip(&b.cols) {
                    let num: i64 = row.iter().zip(r).map(|(x, y)| x * y).sum();
                    if num % b.det != 0 {
                        return false;
                    }
                    let v = num / b.det;
                    if v < 0 {
                        return false;
                    }
                    u[j] = v as u32;
                }
                true
            }
            None => {
                let j = self.n() - 1;
                let col = &self.cols[j];
                let Some(t) = col
                    .iter()
                    .zip(r)
                    .find(|(a, _)| **a != 0)
                    .map(|(a, x)| x / a)
                else {
                    return r.iter().all(Zero::is_zero);
                };
                if t < 0 || col.iter().zip(r).any(|(a, x)| a * t != *x) {
                    return false;
                }
                u[j] = t as u32;
                true
            }
        }
    }

    pub(crate) fn column(&self, j: usize) -> &[i64] {
        &self.cols[j]
    }

    /// Visits every fiber point; the visitor returns `false` to stop early.
    pub(crate) fn for_each(&self, beta: &[i64], mut visit: impl FnMut(&[u32]) -> bool) {
        assert_eq!(beta.len(), self.d, "parameter length");
        if beta.iter().any(|&b| b < 0) {
            return;
        }
        let mut u = vec![0u32; self.n()];
        let mut r = beta.to_vec();
        self.walk(0, &mut r, &mut u, &mut visit);
    }

    fn walk(
        &self,
        level: usize,
        r: &mut Vec<i64>,
        u: &mut [u32],
        visit: &mut impl FnMut(&[u32]) -> bool,
    ) -> bool {
        if level == self.free.len() {
            if self.complete(r, u) {
                return visit(u);
            }
            return true;
        }
        let j = self.free[level];
        let max = self.bound(j, r);
        let mut keep_going = true;
        for t in 0..=max {
            u[j] = t as u32;
            if !self.walk(level + 1, r, u, visit) {
                keep_going = false;
                break;
            }
            if t < max {
                for (x, a) in r.iter_mut().zip(&self.cols[j]) {
                    *x -= a;
                }
            }
        }
        // restore residual
        for (x, a) in r.iter_mut().zip(&self.cols[j]) {
            *x += a * u[j] as i64;
        }
        u[j] = 0;
        keep_going
    }
}

/// First `d` linearly independent columns in natural order, if the matrix has
/// full row rank.
fn independent_columns(cols: &[Vec<i64>], d: usize) -> Option<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    for j in 0..cols.len() {
        let mut trial = chosen.clone();
        trial.push(j);
        let m = FieldMatrix::from_rows(
            trial
                .iter()
                .map(|&c| cols[c].iter().map(|&x| Rat::from_integer(x.into())).collect())
                .collect(),
        );
        if crate::algebra::rref(&m).rank() == trial.len() {
            chosen = trial;
            if chosen.len() == d {
                return Some(chosen);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> ConfigMatrix {
        ConfigMatrix::new(vec![vec![1, 1, 1, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]).unwrap()
    }

    /// Independent oracle: every u in the box `0 ≤ u_i ≤ max(β)`.
    fn brute_force(a: &ConfigMatrix, beta: &[i64]) -> Vec<Vec<u32>> {
        let n = a.n();
        let top = beta.iter().copied().max().unwrap_or(0).max(0) as u32;
        let mut out = Vec::new();
        let mut u = vec![0u32; n];
        loop {
            if a.apply(&u) == beta {
                out.push(u.clone());
            }
            let mut i = 0;
            while i < n {
                if u[i] < top {
                    u[i] += 1;
                    break;
                }
                u[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        out.sort();
        out
    }

    #[test]
    fn small_example_fibers() {
        let a = example();
        assert_eq!(
            enumerate_fiber(&a, &[3, 2, 1]).points(),
            &[vec![0, 2, 1, 0], vec![1, 1, 0, 1]]
        );
        assert_eq!(enumerate_fiber(&a, &[2, 1, 0]).points(), &[vec![1, 1, 0, 0]]);
        assert_eq!(enumerate_fiber(&a, &[0, 0, 0]).points(), &[vec![0, 0, 0, 0]]);
        assert!(enumerate_fiber(&a, &[0, 1, 0]).is_empty());
        assert!(enumerate_fiber(&a, &[1, -1, 0]).is_empty());
        for beta in [[4, 2, 2], [5, 3, 1], [6, 3, 3], [3, 3, 3]] {
            assert_eq!(enumerate_fiber(&a, &beta).points(), brute_force(&a, &beta).as_slice());
        }
    }

    #[test]
    fn rank_deficient_fallback() {
        let a = ConfigMatrix::new(vec![vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
        assert_eq!(fiber_size(&a, &[6, 12]), brute_force(&a, &[6, 12]).len() as u64);
        assert_eq!(fiber_size(&a, &[6, 11]), 0);
    }

    #[test]
    fn non_unimodular_basis() {
        let a = ConfigMatrix::new(vec![vec![2, 0, 1], vec![0, 2, 1]]).unwrap();
        for beta in [[3, 3], [4, 2], [5, 3], [2, 2]] {
            assert_eq!(enumerate_fiber(&a, &beta).points(), brute_force(&a, &beta).as_slice());
        }
    }
}
