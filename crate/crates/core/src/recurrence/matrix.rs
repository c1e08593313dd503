use serde::{Deserialize, Serialize};

use crate::algebra::rat::serde_rat;
use crate::algebra::{determinant, eval_ratfunc, FieldMatrix, Rat, RatFuncK};
use crate::error::{Error, Result};
use crate::poly::ExpVec;

use super::direction::Direction;

/// `R(k)` with `Y(k-1) = R(k)·Y(k)`, where `Y(k) = (S • Z)(β + kH; X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceMatrix {
    pub basis: Vec<ExpVec>,
    pub beta: Vec<i64>,
    pub direction: Direction,
    pub x: Vec<Rat>,
    /// Macaulay degree at which the rows were found.
    pub degree: u32,
    pub r: FieldMatrix<RatFuncK>,
}

impl RecurrenceMatrix {
    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &RatFuncK {
        self.r.get(i, j)
    }

    /// `R(k0)`; a pole becomes [`Error::SingularStep`].
    pub fn at(&self, k0: i64) -> Result<FieldMatrix<Rat>> {
        let k = Rat::from_integer(k0.into());
        let rows = self
            .r
            .rows()
            .iter()
            .map(|row| row.iter().map(|f| eval_ratfunc(f, &k)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::SingularStep {
                k: k0,
                reason: e.to_string(),
            })?;
        Ok(FieldMatrix::from_rows(rows))
    }

    /// `det R(k)` as a rational function.
    pub fn determinant(&self) -> RatFuncK {
        determinant(&self.r).expect("square")
    }

    /// Entries as canonical strings such as `(-2*k^2-6*k-4)/1`.
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        self.r
            .rows()
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect()
    }

    pub fn to_json(&self) -> RecurrenceJson {
        RecurrenceJson {
            basis: self.basis.clone(),
            beta: self.beta.clone(),
            direction: self.direction.clone(),
            x: self.x.clone(),
            degree: self.degree,
            r: self.entry_strings(),
        }
    }

    pub fn from_json(j: &RecurrenceJson) -> Result<Self> {
        let n = j.basis.len();
        if j.r.len() != n || j.r.iter().any(|row| row.len() != n) {
            return Err(Error::invalid("R", format!("expected a {n}x{n} matrix")));
        }
        let rows = j
            .r
            .iter()
            .map(|row| row.iter().map(|s| s.parse::<RatFuncK>()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(RecurrenceMatrix {
            basis: j.basis.clone(),
            beta: j.beta.clone(),
            direction: j.direction.clone(),
            x: j.x.clone(),
            degree: j.degree,
            r: FieldMatrix::from_rows(rows),
        })
    }
}

/// Serialized form of a [`RecurrenceMatrix`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceJson {
    #[serde(rename = "S")]
    pub basis: Vec<ExpVec>,
    pub beta: Vec<i64>,
    pub direction: Direction,
    #[serde(rename = "X", with = "serde_rat::vec")]
    pub x: Vec<Rat>,
    #[serde(rename = "T")]
    pub degree: u32,
    #[serde(rename = "R")]
    pub r: Vec<Vec<String>>,
}
