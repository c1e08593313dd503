//! Incremental sparse row echelon form with on-demand back-substitution.
//!
//! Rows are inserted one at a time and reduced against the pivot rows found
//! so far; pivot rows are kept monic but not reduced above. The fully reduced
//! row of a pivot column is computed only when asked for. Since the reduced
//! row echelon form of a row space is unique, the result does not depend on
//! insertion order.

use std::collections::HashMap;

use crate::algebra::Field;

pub type SparseRow<F> = Vec<(usize, F)>;

#[derive(Clone, Debug)]
pub struct SparseEchelon<F> {
    ncols: usize,
    pivot_rows: Vec<Option<SparseRow<F>>>,
    reduced: HashMap<usize, SparseRow<F>>,
    rank: usize,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(ncols: usize) -> Self {
        SparseEchelon {
            ncols,
            pivot_rows: vec![None; ncols],
            reduced: HashMap::new(),
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_rows[col].is_some()
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.is_pivot(c)).collect()
    }

    /// Reduces `row` (sorted by column) against the current pivots.
    pub fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        let mut i = 0;
        while i < row.len() {
            let c = row[i].0;
            match &self.pivot_rows[c] {
                Some(p) => {
                    let a = row[i].1.clone();
                    row = axpy(&row, &p[..], &a);
                }
                None => i += 1,
            }
        }
        row
    }

    /// Adds a row; returns `true` when it increased the rank.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        let row = self.reduce(row);
        let Some((c, lead)) = row.first().cloned() else {
            return false;
        };
        let inv = lead.inverse().expect("nonzero leading entry");
        let row: SparseRow<F> = row.into_iter().map(|(j, x)| (j, x * inv.clone())).collect();
        self.pivot_rows[c] = Some(row);
        self.reduced.clear();
        self.rank += 1;
        true
    }

    /// The row of the reduced echelon form with its pivot at `col`.
    pub fn reduced_row(&mut self, col: usize) -> Option<SparseRow<F>> {
        if let Some(r) = self.reduced.get(&col) {
            return Some(r.clone());
        }
        let start = self.pivot_rows[col].clone()?;
        // dependencies first, from the right
        let deps: Vec<usize> = start[1..].iter().map(|e| e.0).filter(|&c| self.is_pivot(c)).collect();
        for &d in deps.iter().rev() {
            if !self.reduced.contains_key(&d) {
                self.reduced_row(d);
            }
        }
        let mut row = start;
        let mut i = 1;
        while i < row.len() {
            let c = row[i].0;
            if self.is_pivot(c) {
                let a = row[i].1.clone();
                let r = &self.reduced[&c];
                row = axpy(&row, r, &a);
            } else {
                i += 1;
            }
        }
        self.reduced.insert(col, row.clone());
        Some(row)
    }
}

/// `row - a * p` for sorted sparse rows.
fn axpy<F: Field>(row: &[(usize, F)], p: &[(usize, F)], a: &F) -> SparseRow<F> {
    let mut out = Vec::with_capacity(row.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < p.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(a.clone() * p[j].1.clone())));
            j += 1;
        } else {
            let v = row[i].1.clone() - a.clone() * p[j].1.clone();
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
