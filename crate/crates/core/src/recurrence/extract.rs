use num_traits::{One, Zero};

use crate::algebra::{FieldMatrix, Rat, RatFuncK};
use crate::config::ConfigMatrix;
use crate::error::{Error, Result};
use crate::hgm::oracle::validate_basis;
use crate::macaulay::echelon::SparseEchelon;
use crate::macaulay::{build_macaulay, MacaulayMatrix};
use crate::poly::{reduce_monomial, ExpVec, GroebnerBasis};

use super::direction::{decompose_direction, Direction};
use super::matrix::RecurrenceMatrix;

/// Hard cap on the Macaulay degree.
pub const MAX_DEGREE: u32 = 12;

/// Knobs for [`extract_recurrence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractOptions {
    /// Starting degree; by default the largest degree of a target `NF(∂^h s)`.
    pub initial_degree: Option<u32>,
    pub max_degree: u32,
    /// Weights for [`decompose_direction`].
    pub weights: Option<Vec<i64>>,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions {
            initial_degree: None,
            max_degree: MAX_DEGREE,
            weights: None,
        }
    }
}

/// `R(k)` for the line `β + kH` at `x = X`.
pub fn extract_recurrence(
    a: &ConfigMatrix,
    g: &GroebnerBasis,
    basis: &[ExpVec],
    beta: &[i64],
    x: &[Rat],
    big_h: &[i64],
    opts: &ExtractOptions,
) -> Result<RecurrenceMatrix> {
    let direction = decompose_direction(a, big_h, opts.weights.as_deref())?;
    extract_along(a, g, basis, beta, x, direction, opts)
}

/// `P_i`: the recurrence along the column `a_i` with `h = e_i` (0-based `i`).
pub fn pfaffian_matrix(
    a: &ConfigMatrix,
    g: &GroebnerBasis,
    basis: &[ExpVec],
    beta: &[i64],
    x: &[Rat],
    i: usize,
    opts: &ExtractOptions,
) -> Result<RecurrenceMatrix> {
    if i >= a.n() {
        return Err(Error::invalid("i", format!("column index must be below {}", a.n())));
    }
    extract_along(a, g, basis, beta, x, Direction::column(a, i), opts)
}

/// Extraction for an explicit decomposition `h` of `H`.
pub fn extract_along(
    a: &ConfigMatrix,
    g: &GroebnerBasis,
    basis: &[ExpVec],
    beta: &[i64],
    x: &[Rat],
    direction: Direction,
    opts: &ExtractOptions,
) -> Result<RecurrenceMatrix> {
    a.check_len("beta", beta)?;
    if x.len() != a.n() {
        return Err(Error::invalid("X", format!("expected {} entries, got {}", a.n(), x.len())));
    }
    validate_basis(basis, a.n())?;
    if let Some(s) = basis.iter().find(|s| !g.is_standard(s)) {
        return Err(Error::BasisNotIrreducible(s.exps().to_vec()));
    }
    let hv = ExpVec::new(direction.h.clone());
    let targets: Vec<ExpVec> = basis.iter().map(|s| reduce_monomial(&s.mul(&hv), g)).collect();
    let r = basis.len();
    let unit_rows = |targets: &[ExpVec]| -> Option<Vec<Vec<RatFuncK>>> {
        targets
            .iter()
            .map(|t| {
                let i = basis.iter().position(|s| s == t)?;
                Some((0..r).map(|j| if i == j { RatFuncK::one() } else { RatFuncK::zero() }).collect())
            })
            .collect()
    };
    let finish = |rows: Vec<Vec<RatFuncK>>, degree: u32| RecurrenceMatrix {
        basis: basis.to_vec(),
        beta: beta.to_vec(),
        direction: direction.clone(),
        x: x.to_vec(),
        degree,
        r: FieldMatrix::from_rows(rows),
    };
    if let Some(rows) = unit_rows(&targets) {
        return Ok(finish(rows, 0));
    }

    let start = opts
        .initial_degree
        .unwrap_or_else(|| targets.iter().map(ExpVec::degree).max().unwrap_or(0));
    for t in start..=opts.max_degree.max(start) {
        let m = build_macaulay(a, g, basis, t)?;
        if let Some(rows) = read_rows(&m, &targets, x, beta, &direction.big_h) {
            return Ok(finish(rows, t));
        }
    }
    Err(Error::GenericityFailure {
        max_degree: opts.max_degree.max(start),
    })
}

/// Eliminates the specialized matrix over `Q(k)` and reads each target's
/// relation off its reduced pivot row; `None` when some target is not
/// expressible through `S` at this degree.
fn read_rows(
    m: &MacaulayMatrix,
    targets: &[ExpVec],
    x: &[Rat],
    beta: &[i64],
    big_h: &[i64],
) -> Option<Vec<Vec<RatFuncK>>> {
    let basis = m.basis();
    let r = basis.len();
    let mut ech = SparseEchelon::<RatFuncK>::new(m.ncols());
    for row in m.specialize_sparse(x, beta, big_h) {
        ech.insert(row.into_iter().map(|(j, p)| (j, RatFuncK::from_poly(p))).collect());
    }
    let s_col: Vec<usize> = basis.iter().map(|s| m.column_index(s).expect("basis column")).collect();
    targets
        .iter()
        .map(|t| {
            if let Some(i) = basis.iter().position(|s| s == t) {
                return Some((0..r).map(|j| if i == j { RatFuncK::one() } else { RatFuncK::zero() }).collect());
            }
            let col = m.column_index(t)?;
            let row = ech.reduced_row(col)?;
            let mut out = vec![RatFuncK::zero(); r];
            for (c, v) in row.into_iter().skip(1) {
                let j = s_col.iter().position(|&s| s == c)?;
                out[j] = -v;
            }
            Some(out)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{frac, rat};
    use crate::poly::{toric_gb, TermOrder};

    fn setup() -> (ConfigMatrix, GroebnerBasis, Vec<ExpVec>, Vec<Rat>) {
        let a = ConfigMatrix::new(vec![vec![1, 1, 1, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]).unwrap();
        let g = toric_gb(&a, &TermOrder::grevlex(4)).unwrap();
        let s = vec![ExpVec::zero(4), ExpVec::unit(4, 3)];
        let x = vec![rat(1), rat(1), frac(1, 2), rat(1)];
        (a, g, s, x)
    }

    #[test]
    fn worked_recurrence() {
        let (a, g, s, x) = setup();
        let r = extract_recurrence(&a, &g, &s, &[3, 2, 1], &x, &[1, 1, 1], &ExtractOptions::default()).unwrap();
        assert_eq!(
            r.entry_strings(),
            vec![vec!["(0)/1", "(1)/1"], vec!["(-2*k^2-6*k-4)/1", "(3*k+5)/1"]]
        );
        let r0 = r.at(0).unwrap();
        assert_eq!(r0.mul_vec(&[frac(5, 4), rat(1)]), vec![rat(1), rat(0)]);
    }

    #[test]
    fn zero_direction_is_identity() {
        let (a, g, s, x) = setup();
        let r = extract_recurrence(&a, &g, &s, &[3, 2, 1], &x, &[0, 0, 0], &ExtractOptions::default()).unwrap();
        assert_eq!(r.entry_strings(), vec![vec!["(1)/1", "(0)/1"], vec!["(0)/1", "(1)/1"]]);
    }

    #[test]
    fn pfaffian_along_fourth_column() {
        let (a, g, s, x) = setup();
        let opts = ExtractOptions::default();
        let p = pfaffian_matrix(&a, &g, &s, &[3, 2, 1], &x, 3, &opts).unwrap();
        let r = extract_recurrence(&a, &g, &s, &[3, 2, 1], &x, &[1, 1, 1], &opts).unwrap();
        assert_eq!(p.r, r.r);
    }

    #[test]
    fn incomplete_basis_fails() {
        let (a, g, _, x) = setup();
        let opts = ExtractOptions {
            max_degree: 3,
            ..Default::default()
        };
        let s = vec![ExpVec::zero(4)];
        assert!(matches!(
            extract_recurrence(&a, &g, &s, &[3, 2, 1], &x, &[1, 1, 1], &opts),
            Err(Error::GenericityFailure { max_degree: 3 })
        ));
    }
}
