use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::algebra::Rat;
use crate::config::ConfigMatrix;
use crate::poly::{reduce_monomial, ExpVec, GroebnerBasis};

use super::coeff::{CoeffCX, CoeffVar};

/// One row of a Macaulay-type matrix: column label `∂^u` ↦ coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorRow {
    entries: BTreeMap<ExpVec, CoeffCX>,
}

impl OperatorRow {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &BTreeMap<ExpVec, CoeffCX> {
        &self.entries
    }

    pub fn get(&self, label: &ExpVec) -> Option<&CoeffCX> {
        self.entries.get(label)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&mut self, label: ExpVec, c: &CoeffCX) {
        match self.entries.entry(label) {
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c.clone());
                }
            }
        }
    }
}

/// `∂^u (E_j - c_j) = Σ_k a_jk x_k ∂^{u+e_k} + (Σ_k a_jk u_k - c_j) ∂^u`,
/// from `∂_k x_k = x_k ∂_k + 1`. `j` is 0-based.
pub fn euler_times_monomial(a: &ConfigMatrix, j: usize, u: &ExpVec) -> OperatorRow {
    let mut row = OperatorRow::new();
    let mut shift = 0i64;
    for k in 0..a.n() {
        let ajk = a.entry(j, k);
        if ajk != 0 {
            row.add(u.increment(k), &CoeffCX::term(CoeffVar::X(k), Rat::from_integer(ajk.into())));
            shift += ajk * u.exps()[k] as i64;
        }
    }
    let mut c = CoeffCX::constant(Rat::from_integer(shift.into()));
    c.add_term(CoeffVar::C(j), Rat::from_integer((-1).into()));
    row.add(u.clone(), &c);
    row
}

/// Replaces every column label by its toric normal form, carrying the
/// coefficient over.
pub fn reduce_row(row: &OperatorRow, g: &GroebnerBasis) -> OperatorRow {
    let mut out = OperatorRow::new();
    for (label, c) in &row.entries {
        out.add(reduce_monomial(label, g), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{toric_gb, TermOrder};

    fn example() -> ConfigMatrix {
        ConfigMatrix::new(vec![vec![1, 1, 1, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]).unwrap()
    }

    fn show(row: &OperatorRow) -> Vec<(String, String)> {
        row.entries()
            .iter()
            .map(|(e, c)| (e.label("d"), c.to_string()))
            .collect()
    }

    fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
        let mut v: Vec<(String, String)> = v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        v.sort();
        v
    }

    #[test]
    fn euler_rows() {
        let a = example();
        let mut got = show(&euler_times_monomial(&a, 0, &ExpVec::zero(4)));
        got.sort();
        assert_eq!(
            got,
            pairs(&[("d1", "x1"), ("d2", "x2"), ("d3", "x3"), ("d4", "x4"), ("1", "-c1")])
        );
        let mut got = show(&euler_times_monomial(&a, 0, &ExpVec::unit(4, 0)));
        got.sort();
        assert_eq!(
            got,
            pairs(&[
                ("d1d1", "x1"),
                ("d1d2", "x2"),
                ("d1d3", "x3"),
                ("d1d4", "x4"),
                ("d1", "1-c1")
            ])
        );
        let mut got = show(&euler_times_monomial(&a, 1, &ExpVec::unit(4, 3)));
        got.sort();
        assert_eq!(got, pairs(&[("d2d4", "x2"), ("d4d4", "x4"), ("d4", "1-c2")]));
    }

    #[test]
    fn toric_reduction_of_labels() {
        let a = example();
        let g = toric_gb(&a, &TermOrder::grevlex(4)).unwrap();
        let mut row = OperatorRow::new();
        row.add(ExpVec::new(vec![1, 1, 1, 0]), &CoeffCX::term(CoeffVar::X(0), Rat::from_integer(1.into())));
        row.add(ExpVec::new(vec![0, 1, 1, 0]), &CoeffCX::constant(Rat::from_integer(2.into())));
        let mut got = show(&reduce_row(&row, &g));
        got.sort();
        assert_eq!(got, pairs(&[("d1d1d4", "x1"), ("d1d4", "2")]));
        // collisions add up
        let mut row = OperatorRow::new();
        row.add(ExpVec::new(vec![0, 1, 1, 0]), &CoeffCX::constant(Rat::from_integer(2.into())));
        row.add(ExpVec::new(vec![1, 0, 0, 1]), &CoeffCX::constant(Rat::from_integer((-2).into())));
        assert!(reduce_row(&row, &g).is_empty());
    }
}
