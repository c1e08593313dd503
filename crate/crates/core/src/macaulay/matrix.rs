use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::algebra::{FieldMatrix, Rat, RatFuncK, UniPolyK};
use crate::config::ConfigMatrix;
use crate::error::{Error, Result};
use crate::poly::{ExpVec, GroebnerBasis, TermOrder};

use super::row::{euler_times_monomial, reduce_row, OperatorRow};

/// The toric-reduced Macaulay-type matrix `F'_T`.
///
/// Columns are `M'` (labels outside `S`) followed by `S`, each part sorted by
/// decreasing total degree and then decreasing term order. Rows are
/// `∂^u (E_j - c_j)` for `j = 1..d` (outer) and `|u| ≤ T` (inner).
#[derive(Clone, Debug)]
pub struct MacaulayMatrix {
    degree: u32,
    basis: Vec<ExpVec>,
    columns: Vec<ExpVec>,
    index: HashMap<ExpVec, usize>,
    basis_start: usize,
    rows: Vec<OperatorRow>,
}

impl MacaulayMatrix {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &[ExpVec] {
        &self.basis
    }

    /// Column labels in elimination order.
    pub fn columns(&self) -> &[ExpVec] {
        &self.columns
    }

    pub fn column_index(&self, label: &ExpVec) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Index of the first `S` column.
    pub fn basis_start(&self) -> usize {
        self.basis_start
    }

    pub fn rows(&self) -> &[OperatorRow] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    /// Sparse rows with entries in `Q[k]` after `x = X`, `c = β + kH`,
    /// sorted by column index.
    pub fn specialize_sparse(&self, x: &[Rat], beta: &[i64], h: &[i64]) -> Vec<Vec<(usize, UniPolyK)>> {
        self.rows
            .iter()
            .map(|r| {
                let mut v: Vec<(usize, UniPolyK)> = r
                    .entries()
                    .iter()
                    .map(|(l, c)| (self.index[l], c.specialize(x, beta, h)))
                    .filter(|(_, p)| !num_traits::Zero::is_zero(p))
                    .collect();
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }

    /// Sparse numeric rows at `x = X` and `c`.
    pub fn evaluate_sparse(&self, x: &[Rat], c: &[Rat]) -> Vec<Vec<(usize, Rat)>> {
        self.rows
            .iter()
            .map(|r| {
                let mut v: Vec<(usize, Rat)> = r
                    .entries()
                    .iter()
                    .map(|(l, q)| (self.index[l], q.eval(x, c)))
                    .filter(|(_, q)| !num_traits::Zero::is_zero(q))
                    .collect();
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }

    /// Dense matrix over `Q(k)`, columns labelled by their elimination index.
    pub fn specialize(&self, x: &[Rat], beta: &[i64], h: &[i64]) -> FieldMatrix<RatFuncK> {
        let n = self.ncols();
        let rows = self
            .specialize_sparse(x, beta, h)
            .into_iter()
            .map(|r| {
                let mut dense = vec![<RatFuncK as num_traits::Zero>::zero(); n];
                for (j, p) in r {
                    dense[j] = RatFuncK::from_poly(p);
                }
                dense
            })
            .collect();
        FieldMatrix::from_rows(rows)
    }

    /// Tab-separated dump: a header of column labels, then one line per row
    /// with each entry rendered by `cell`.
    pub fn to_tsv_with(&self, mut cell: impl FnMut(usize, &ExpVec, &OperatorRow) -> String) -> String {
        let mut s = self.columns.iter().map(|c| c.label("d")).collect::<Vec<_>>().join("\t");
        s.push('\n');
        for (i, r) in self.rows.iter().enumerate() {
            let line: Vec<String> = self.columns.iter().map(|c| cell(i, c, r)).collect();
            let _ = writeln!(s, "{}", line.join("\t"));
        }
        s
    }

    /// Symbolic TSV with entries such as `x2` and `1-c1`.
    pub fn to_tsv(&self) -> String {
        self.to_tsv_with(|_, c, r| r.get(c).map_or_else(|| "0".to_string(), ToString::to_string))
    }
}

/// All exponent vectors in `n` variables of total degree at most `t`,
/// by increasing degree.
pub fn monomials_up_to(n: usize, t: u32) -> Vec<ExpVec> {
    let mut out = vec![ExpVec::zero(n)];
    let mut layer = vec![ExpVec::zero(n)];
    for _ in 0..t {
        let mut next = BTreeSet::new();
        for m in &layer {
            for i in 0..n {
                next.insert(m.increment(i));
            }
        }
        layer = next.into_iter().collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Decreasing total degree, then decreasing `order`.
fn column_cmp(order: &TermOrder, a: &ExpVec, b: &ExpVec) -> Ordering {
    b.degree().cmp(&a.degree()).then_with(|| order.cmp(b, a))
}

/// Builds `F'_T` from the Euler operators of `A`, reducing column labels by
/// the toric basis `g`.
pub fn build_macaulay(a: &ConfigMatrix, g: &GroebnerBasis, basis: &[ExpVec], t: u32) -> Result<MacaulayMatrix> {
    if let Some(s) = basis.iter().find(|s| !g.is_standard(s)) {
        return Err(Error::BasisNotIrreducible(s.exps().to_vec()));
    }
    let monos = monomials_up_to(a.n(), t);
    let jobs: Vec<(usize, &ExpVec)> = (0..a.d()).flat_map(|j| monos.iter().map(move |u| (j, u))).collect();
    let rows: Vec<OperatorRow> = jobs
        .par_iter()
        .map(|&(j, u)| reduce_row(&euler_times_monomial(a, j, u), g))
        .collect();

    let order = g.order();
    let mut labels: BTreeSet<&ExpVec> = BTreeSet::new();
    for r in &rows {
        labels.extend(r.entries().keys());
    }
    let mut outside: Vec<ExpVec> = labels.into_iter().filter(|l| !basis.contains(l)).cloned().collect();
    outside.sort_by(|x, y| column_cmp(order, x, y));
    let mut inside = basis.to_vec();
    inside.sort_by(|x, y| column_cmp(order, x, y));
    let basis_start = outside.len();
    let columns: Vec<ExpVec> = outside.into_iter().chain(inside).collect();
    let index = columns.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    Ok(MacaulayMatrix {
        degree: t,
        basis: basis.to_vec(),
        columns,
        index,
        basis_start,
        rows,
    })
}
