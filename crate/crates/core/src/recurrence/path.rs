use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::{add_scaled, sub, ConfigMatrix};
use crate::error::{Error, Result};
use crate::hgm::fiber::in_semigroup;
use crate::poly::{semigroup_member, ExpVec, GroebnerBasis};

/// A greedy walk from `β` toward the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Path {
    /// `(column, multiplicity)` with 1-based column indices.
    pub steps: Vec<(usize, u32)>,
    pub endpoint: Vec<i64>,
}

impl fmt::Display for Path {
    /// `[(1,1),(2,1)] -> (1,1,1)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<String> = self.steps.iter().map(|(i, m)| format!("({i},{m})")).collect();
        let end: Vec<String> = self.endpoint.iter().map(ToString::to_string).collect();
        write!(f, "[{}] -> ({})", steps.join(","), end.join(","))
    }
}

/// Repeatedly subtracts `m·a_i` from `β`, taking the largest `m` such that
/// every shifted parameter `β - γ_s - l·a_i` (`∂^s ∈ S`, `1 ≤ l ≤ m`) stays
/// in `N_0·A`. `m` is bounded by the multiplicity of `a_i` in the current
/// standard expression of `β`; ties go to the smallest column.
pub fn find_path(a: &ConfigMatrix, g: &GroebnerBasis, beta: &[i64], basis: &[ExpVec]) -> Result<Path> {
    a.check_len("beta", beta)?;
    let gammas: Vec<Vec<i64>> = basis.iter().map(|s| a.apply(s.exps())).collect();
    let mut cur = beta.to_vec();
    let mut steps = Vec::new();
    loop {
        let u = semigroup_member(a, g, &cur).ok_or_else(|| Error::NotInSemigroup(cur.clone()))?;
        if u.is_one() {
            break;
        }
        let mut best: Option<(usize, u32)> = None;
        for (i, &ni) in u.exps().iter().enumerate() {
            let col = a.column(i);
            let mut m = 0;
            for l in 1..=ni {
                let ok = gammas
                    .iter()
                    .all(|gm| in_semigroup(a, &add_scaled(&sub(&cur, gm), &col, -(l as i64))));
                if !ok {
                    break;
                }
                m = l;
            }
            if m > 0 && best.is_none_or(|(_, bm)| m > bm) {
                best = Some((i, m));
            }
        }
        let Some((i, m)) = best else { break };
        cur = add_scaled(&cur, &a.column(i), -(m as i64));
        steps.push((i + 1, m));
    }
    Ok(Path { steps, endpoint: cur })
}
