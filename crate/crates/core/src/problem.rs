//! Problem files: one JSON document describing `A`, `β`, `X`, `S` and the legs
//! of an evaluation plan.
//!
//! ```json
//! {
//!   "A": [[1,1,1,1],[0,1,0,1],[0,0,1,1]],
//!   "beta": [3,2,1],
//!   "X": ["1","1","1/2","1"],
//!   "S": [[0,0,0,0],[0,0,0,1]],
//!   "legs": [{"H": [1,1,1], "steps": 4}],
//!   "order": "grevlex"
//! }
//! ```
//!
//! `legs`, `order` (default `grevlex`) and `weights` are optional. Without
//! `S` a basis is guessed from the Macaulay matrix, see
//! [`guess_basis`](crate::recurrence::guess_basis).

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rat, Rat};
use crate::config::ConfigMatrix;
use crate::error::{Error, Result};
use crate::hgm::{EvalPlan, Leg};
use crate::poly::{toric_gb, ExpVec, GroebnerBasis, OrderSpec, TermOrder};
use crate::recurrence::{generic_point, guess_basis, MAX_DEGREE};

/// The file as written on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    pub beta: Vec<i64>,
    #[serde(rename = "X")]
    pub x: Vec<String>,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<u32>>>,
    #[serde(default)]
    pub legs: Vec<Leg>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
}

/// A validated problem.
#[derive(Clone, Debug)]
pub struct Problem {
    pub a: ConfigMatrix,
    pub beta: Vec<i64>,
    pub x: Vec<Rat>,
    pub basis: Option<Vec<ExpVec>>,
    pub legs: Vec<Leg>,
    pub order: TermOrder,
    pub weights: Option<Vec<i64>>,
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ProblemFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(raw)
    }

    pub fn from_file(raw: ProblemFile) -> Result<Self> {
        let a = ConfigMatrix::new(raw.a)?;
        let n = a.n();
        a.check_len("beta", &raw.beta)?;
        if raw.x.len() != n {
            return Err(Error::invalid("X", format!("expected {n} entries, got {}", raw.x.len())));
        }
        let x = raw
            .x
            .iter()
            .enumerate()
            .map(|(i, s)| parse_rat(s).map_err(|e| Error::invalid(format!("X[{}]", i + 1), e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let basis = match raw.basis {
            None => None,
            Some(s) => {
                if let Some(i) = s.iter().position(|v| v.len() != n) {
                    return Err(Error::invalid(format!("S[{}]", i + 1), format!("expected {n} entries")));
                }
                let s: Vec<ExpVec> = s.into_iter().map(ExpVec::new).collect();
                crate::hgm::validate_basis(&s, n)?;
                Some(s)
            }
        };
        for (i, leg) in raw.legs.iter().enumerate() {
            if leg.big_h.len() != a.d() {
                return Err(Error::invalid(
                    format!("legs[{}].H", i + 1),
                    format!("expected {} entries, got {}", a.d(), leg.big_h.len()),
                ));
            }
        }
        let order = raw
            .order
            .as_deref()
            .unwrap_or("grevlex")
            .parse::<OrderSpec>()?
            .build(n)?;
        if let Some(w) = &raw.weights {
            if w.len() != n {
                return Err(Error::invalid("weights", format!("expected {n} entries, got {}", w.len())));
            }
        }
        Ok(Problem {
            a,
            beta: raw.beta,
            x,
            basis,
            legs: raw.legs,
            order,
            weights: raw.weights,
        })
    }

    pub fn toric_gb(&self) -> Result<GroebnerBasis> {
        toric_gb(&self.a, &self.order)
    }

    /// The given `S`, or a guess at a generic point.
    pub fn basis_or_guess(&self, g: &GroebnerBasis) -> Result<Vec<ExpVec>> {
        match &self.basis {
            Some(s) => Ok(s.clone()),
            None => guess_basis(
                &self.a,
                g,
                &generic_point(self.a.n(), 0),
                &generic_point(self.a.d(), 1),
                MAX_DEGREE,
            ),
        }
    }

    pub fn plan(&self, basis: Vec<ExpVec>) -> EvalPlan {
        EvalPlan {
            beta: self.beta.clone(),
            legs: self.legs.clone(),
            x: self.x.clone(),
            basis,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = r#"{
        "A": [[1,1,1,1],[0,1,0,1],[0,0,1,1]],
        "beta": [3,2,1],
        "X": ["1","1","1/2","1"],
        "S": [[0,0,0,0],[0,0,0,1]],
        "legs": [{"H": [1,1,1], "steps": 4}]
    }"#;

    #[test]
    fn parses_example() {
        let p = Problem::from_json(EXAMPLE).unwrap();
        assert_eq!(p.a.d(), 3);
        assert_eq!(p.x[2], Rat::new(1.into(), 2.into()));
        assert_eq!(p.legs[0].steps, 4);
        assert_eq!(p.order, TermOrder::grevlex(4));
    }

    #[test]
    fn errors_name_the_field() {
        let bad = EXAMPLE.replace("[3,2,1]", "[3,2]");
        let e = Problem::from_json(&bad).unwrap_err();
        assert!(e.to_string().starts_with("beta: expected 3 entries"), "{e}");
        let bad = EXAMPLE.replace("\"1/2\"", "\"1/0\"");
        assert!(Problem::from_json(&bad).unwrap_err().to_string().starts_with("X[3]"));
        let bad = EXAMPLE.replace("[[0,0,0,0],[0,0,0,1]]", "[[0,0,0,1]]");
        assert!(Problem::from_json(&bad).unwrap_err().to_string().starts_with("S:"));
        let e = Problem::from_json("{\"A\": [[1]],\n \"beta\": }").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
    }
}
