//! The difference holonomic gradient method: start from exact oracle values
//! at `β₀` and step along each leg with `Y(k) = R(k)^{-1} Y(k-1)`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::oracle::{oracle_vector, StateVector};
use crate::algebra::rat::serde_rat;
use crate::algebra::{invert, Rat};
use crate::config::{add_scaled, ConfigMatrix};
use crate::error::{Error, Result};
use crate::poly::{ExpVec, GroebnerBasis};
use crate::recurrence::{extract_recurrence, pfaffian_matrix, ExtractOptions, RecurrenceMatrix};

/// `steps` applications of the contiguity along `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leg {
    #[serde(rename = "H")]
    pub big_h: Vec<i64>,
    pub steps: u32,
}

/// Where to start, which legs to walk, and at which `X` with which `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalPlan {
    pub beta: Vec<i64>,
    pub legs: Vec<Leg>,
    #[serde(rename = "X", with = "serde_rat::vec")]
    pub x: Vec<Rat>,
    #[serde(rename = "S")]
    pub basis: Vec<ExpVec>,
}

impl EvalPlan {
    /// `β₀ + Σ m·H` over all legs.
    pub fn endpoint(&self) -> Vec<i64> {
        self.legs
            .iter()
            .fold(self.beta.clone(), |b, leg| add_scaled(&b, &leg.big_h, leg.steps as i64))
    }
}

/// Applies `Y ← R(k)^{-1} Y` for `k = from+1 ..= to`.
pub fn step_along(r: &RecurrenceMatrix, mut y: Vec<Rat>, from: i64, to: i64) -> Result<Vec<Rat>> {
    for k in from + 1..=to {
        let rk = r.at(k)?;
        let inv = invert(&rk).map_err(|_| Error::SingularStep {
            k,
            reason: "R(k) is not invertible".to_string(),
        })?;
        y = inv.mul_vec(&y);
    }
    Ok(y)
}

/// A finished evaluation with the recurrence used on each leg.
#[derive(Clone, Debug)]
pub struct EvalTrace {
    pub result: StateVector,
    pub start: StateVector,
    pub recurrences: Vec<RecurrenceMatrix>,
}

/// `(S • Z)` at the plan's endpoint.
pub fn hgm_eval(a: &ConfigMatrix, g: &GroebnerBasis, plan: &EvalPlan, opts: &ExtractOptions) -> Result<StateVector> {
    hgm_eval_traced(a, g, plan, opts).map(|t| t.result)
}

pub fn hgm_eval_traced(
    a: &ConfigMatrix,
    g: &GroebnerBasis,
    plan: &EvalPlan,
    opts: &ExtractOptions,
) -> Result<EvalTrace> {
    for leg in &plan.legs {
        a.check_len("H", &leg.big_h)?;
    }
    let start = oracle_vector(a, &plan.basis, &plan.beta, &plan.x)?;
    let mut y = start.values.clone();
    let mut beta = plan.beta.clone();
    let mut recurrences = Vec::with_capacity(plan.legs.len());
    for leg in &plan.legs {
        if leg.steps == 0 {
            continue;
        }
        let r = extract_recurrence(a, g, &plan.basis, &beta, &plan.x, &leg.big_h, opts)?;
        y = step_along(&r, y, 0, leg.steps as i64)?;
        beta = add_scaled(&beta, &leg.big_h, leg.steps as i64);
        recurrences.push(r);
    }
    Ok(EvalTrace {
        result: StateVector {
            beta,
            x: plan.x.clone(),
            basis: plan.basis.clone(),
            values: y,
        },
        start,
        recurrences,
    })
}

/// `E[U_i] = x_i (∂_i • Z)/Z`, with `∂_i ∈ S` (0-based `i`).
pub fn expectation(y: &StateVector, i: usize) -> Result<Rat> {
    let n = y.x.len();
    let di = y
        .component(&ExpVec::unit(n, i))
        .ok_or_else(|| Error::invalid("S", format!("d{} is not in the basis", i + 1)))?;
    ratio(y, di, i)
}

/// Like [`expectation`], but when `∂_i ∉ S` obtains `∂_i • Z(β) = Z(β - a_i)`
/// from the first row of `P_i` at `k = 0`.
pub fn expectation_with(
    a: &ConfigMatrix,
    g: &GroebnerBasis,
    y: &StateVector,
    i: usize,
    opts: &ExtractOptions,
) -> Result<Rat> {
    if y.component(&ExpVec::unit(a.n(), i)).is_some() {
        return expectation(y, i);
    }
    let p = pfaffian_matrix(a, g, &y.basis, &y.beta, &y.x, i, opts)?;
    let row = p.at(0)?.mul_vec(&y.values);
    ratio(y, &row[0], i)
}

fn ratio(y: &StateVector, di: &Rat, i: usize) -> Result<Rat> {
    let z = y.z();
    if z.is_zero() {
        return Err(Error::ZeroNormalizer);
    }
    Ok(&y.x[i] * di / z)
}
