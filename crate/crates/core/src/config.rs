//! The configuration matrix `A` whose columns span the parameter semigroup.

use std::fmt;

use crate::algebra::{rref, FieldMatrix, Rat};
use crate::error::{Error, Result};

/// A `d × n` matrix of nonnegative integers with no zero column.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConfigMatrix {
    rows: Vec<Vec<i64>>,
}

impl ConfigMatrix {
    /// Validates shape, nonnegativity and the absence of zero columns.
    ///
    /// Rank deficiency is allowed here; use [`ConfigMatrix::rank`] to check it.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || n == 0 {
            return Err(Error::invalid("A", "matrix must be nonempty"));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::invalid(
                "A",
                format!("row {} has {} entries, expected {n}", i + 1, rows[i].len()),
            ));
        }
        if rows.iter().flatten().any(|&a| a < 0) {
            return Err(Error::invalid(
                "A",
                "entries must be nonnegative (shift the configuration first)",
            ));
        }
        if let Some(j) = (0..n).find(|&j| rows.iter().all(|r| r[j] == 0)) {
            return Err(Error::invalid("A", format!("column {} is zero", j + 1)));
        }
        Ok(ConfigMatrix { rows })
    }

    /// Number of rows `d`.
    pub fn d(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns `n`.
    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    /// Column `a_j` (0-based `j`).
    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<i64>> {
        (0..self.n()).map(|j| self.column(j)).collect()
    }

    /// `A·u`
    pub fn apply(&self, u: &[u32]) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(u).map(|(a, &x)| a * x as i64).sum())
            .collect()
    }

    pub fn rank(&self) -> usize {
        let m = FieldMatrix::from_rows(
            self.rows
                .iter()
                .map(|r| r.iter().map(|&a| Rat::from_integer(a.into())).collect())
                .collect(),
        );
        rref(&m).rank()
    }

    /// Index of a row whose entries are all equal and positive, if any. Such
    /// a row makes `|u|` constant on every fiber.
    pub fn homogenizing_row(&self) -> Option<usize> {
        self.rows
            .iter()
            .position(|r| r[0] > 0 && r.iter().all(|&a| a == r[0]))
    }

    pub(crate) fn check_len(&self, field: &str, v: &[i64]) -> Result<()> {
        if v.len() != self.d() {
            return Err(Error::invalid(
                field,
                format!("expected {} entries, got {}", self.d(), v.len()),
            ));
        }
        Ok(())
    }
}

impl fmt::Debug for ConfigMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConfigMatrix{:?}", self.rows)
    }
}

/// Componentwise `a - b`.
pub(crate) fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Componentwise `a + s*b`.
pub(crate) fn add_scaled(a: &[i64], b: &[i64], s: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ConfigMatrix::new(vec![vec![1, 0], vec![0, 0]]).is_err());
        assert!(ConfigMatrix::new(vec![vec![1, -1]]).is_err());
        assert!(ConfigMatrix::new(vec![vec![1, 1], vec![0]]).is_err());
        let a = ConfigMatrix::new(vec![vec![1, 1, 1, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]).unwrap();
        assert_eq!((a.d(), a.n(), a.rank()), (3, 4, 3));
        assert_eq!(a.apply(&[1, 1, 0, 1]), vec![3, 2, 1]);
        assert_eq!(a.homogenizing_row(), Some(0));
    }
}
