//! Dense matrices over an exact field with labeled columns: reduced row
//! echelon form, inversion and determinants.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::Rat;
use super::ratfunc::RatFuncK;
use crate::error::{Error, Result};

/// An exact field. Implemented for [`Rat`] and [`RatFuncK`].
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn inverse(&self) -> Option<Self>;
}

impl Field for Rat {
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Field for RatFuncK {
    fn inverse(&self) -> Option<Self> {
        self.recip()
    }
}

/// Row-major matrix whose columns carry totally ordered, unique labels.
///
/// Columns are always stored in increasing label order, which is also the
/// elimination order of [`rref`].
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix<F, L = usize> {
    labels: Vec<L>,
    rows: Vec<Vec<F>>,
}

impl<F: Field> FieldMatrix<F, usize> {
    /// Matrix with columns labeled `0..ncols`.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        FieldMatrix::with_labels((0..ncols).collect(), rows)
            .expect("rows of equal length")
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
            .collect();
        Self::from_rows(rows)
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self::from_rows(vec![vec![F::zero(); ncols]; nrows])
    }
}

impl<F: Field, L: Ord + Clone> FieldMatrix<F, L> {
    /// Builds a matrix, permuting columns into label order.
    pub fn with_labels(labels: Vec<L>, rows: Vec<Vec<F>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != labels.len()) {
            return Err(Error::invalid("matrix", "row length differs from column count"));
        }
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        if order.windows(2).any(|w| labels[w[0]] == labels[w[1]]) {
            return Err(Error::invalid("matrix", "duplicate column label"));
        }
        let labels = order.iter().map(|&i| labels[i].clone()).collect();
        let rows = rows
            .into_iter()
            .map(|r| order.iter().map(|&i| r[i].clone()).collect())
            .collect();
        Ok(FieldMatrix { labels, rows })
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.rows[i][j]
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn into_rows(self) -> Vec<Vec<F>> {
        self.rows
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> FieldMatrix<G, L> {
        FieldMatrix {
            labels: self.labels.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ncols(), "dimension mismatch");
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }
}

impl<F: Field> FieldMatrix<F, usize> {
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols(), rhs.nrows(), "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..rhs.ncols())
                    .map(|j| {
                        r.iter()
                            .zip(&rhs.rows)
                            .fold(F::zero(), |acc, (a, rr)| acc + a.clone() * rr[j].clone())
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(rows)
    }
}

impl<F: fmt::Display, L: fmt::Debug> fmt::Debug for FieldMatrix<F, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?}", self.labels)?;
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Result of [`rref`]: the echelon rows and the labels of their pivot columns.
#[derive(Clone, PartialEq)]
pub struct Echelon<F, L> {
    pub matrix: FieldMatrix<F, L>,
    pub pivots: Vec<L>,
}

impl<F: fmt::Display, L: fmt::Debug> fmt::Debug for Echelon<F, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pivots {:?}\n{:?}", self.pivots, self.matrix)
    }
}

impl<F, L> Echelon<F, L> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Reduced row echelon form, eliminating columns left to right.
///
/// The pivot of each column is the first remaining row with a nonzero entry.
/// Zero rows are dropped, so the result has exactly `rank` rows.
pub fn rref<F: Field, L: Ord + Clone>(m: &FieldMatrix<F, L>) -> Echelon<F, L> {
    let mut rows = m.rows.clone();
    let ncols = m.ncols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        for x in rows[r].iter_mut().skip(c) {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !pv.is_zero() {
                    *x = x.clone() - factor.clone() * pv.clone();
                }
            }
        }
        pivots.push(m.labels[c].clone());
        r += 1;
    }
    rows.truncate(r);
    Echelon {
        matrix: FieldMatrix {
            labels: m.labels.clone(),
            rows,
        },
        pivots,
    }
}

/// Inverse of a square matrix by Gauss-Jordan elimination.
pub fn invert<F: Field>(m: &FieldMatrix<F, usize>) -> Result<FieldMatrix<F, usize>> {
    if !m.is_square() {
        return Err(Error::invalid("matrix", "inverse of a non-square matrix"));
    }
    let n = m.nrows();
    let mut a = m.rows.clone();
    let mut inv = FieldMatrix::<F>::identity(n).rows;
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(Error::Singular)?;
        a.swap(c, p);
        inv.swap(c, p);
        let s = a[c][c].inverse().expect("nonzero pivot");
        for x in a[c].iter_mut() {
            *x = x.clone() * s.clone();
        }
        for x in inv[c].iter_mut() {
            *x = x.clone() * s.clone();
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].clone();
            for j in 0..n {
                let t = a[c][j].clone();
                if !t.is_zero() {
                    a[i][j] = a[i][j].clone() - factor.clone() * t;
                }
                let t = inv[c][j].clone();
                if !t.is_zero() {
                    inv[i][j] = inv[i][j].clone() - factor.clone() * t;
                }
            }
        }
    }
    Ok(FieldMatrix::from_rows(inv))
}

/// Determinant by elimination.
pub fn determinant<F: Field>(m: &FieldMatrix<F, usize>) -> Result<F> {
    if !m.is_square() {
        return Err(Error::invalid("matrix", "determinant of a non-square matrix"));
    }
    let n = m.nrows();
    let mut a = m.rows.clone();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok(F::zero());
        };
        if p != c {
            a.swap(c, p);
            det = -det;
        }
        let pivot = a[c][c].clone();
        let inv = pivot.inverse().expect("nonzero pivot");
        det = det * pivot;
        let pivot_row = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone() * inv.clone();
            for (x, t) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = x.clone() - factor.clone() * t.clone();
            }
        }
    }
    Ok(det)
}
