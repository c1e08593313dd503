//! Timing the HGM against exhaustive fiber enumeration.

use std::fmt;
use std::time::Instant;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::hgm::{fiber_size, hgm_eval, oracle_vector, EvalPlan, Leg};
use crate::poly::{ExpVec, GroebnerBasis};
use crate::problem::Problem;
use crate::recurrence::ExtractOptions;

pub const CSV_HEADER: &str = "method,k,wall_seconds,value,fiber_count";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Hgm,
    Enumerate,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Hgm => "hgm",
            Method::Enumerate => "enumerate",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub method: Method,
    pub k: i64,
    pub wall_seconds: f64,
    /// `Z` at the endpoint as an exact fraction.
    pub value: String,
    pub fiber_count: Option<u64>,
}

impl BenchRecord {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{:.3},{},{}",
            self.method,
            self.k,
            self.wall_seconds,
            self.value,
            self.fiber_count.map(|c| c.to_string()).unwrap_or_default()
        )
    }
}

/// Legs for parameter `k`: the file's step counts divided by their gcd, times
/// `k`. A file with steps 10 and 20 walks `k` and `2k` steps.
pub fn scaled_legs(legs: &[Leg], k: u32) -> Vec<Leg> {
    let g = legs.iter().fold(0u32, |g, l| g.gcd(&l.steps));
    legs.iter()
        .map(|l| Leg {
            big_h: l.big_h.clone(),
            steps: l.steps.checked_div(g).map_or(0, |q| q * k),
        })
        .collect()
}

/// Runs both methods for each `k`, failing with [`Error::Mismatch`] when they
/// disagree.
pub fn run_bench(
    problem: &Problem,
    g: &GroebnerBasis,
    basis: &[ExpVec],
    ks: &[u32],
    opts: &ExtractOptions,
    mut sink: impl FnMut(&BenchRecord),
) -> Result<Vec<BenchRecord>> {
    let mut out = Vec::new();
    for &k in ks {
        let plan = EvalPlan {
            legs: scaled_legs(&problem.legs, k),
            ..problem.plan(basis.to_vec())
        };
        let t0 = Instant::now();
        let y = hgm_eval(&problem.a, g, &plan, opts)?;
        let hgm = BenchRecord {
            method: Method::Hgm,
            k: k.into(),
            wall_seconds: t0.elapsed().as_secs_f64(),
            value: y.z().to_string(),
            fiber_count: None,
        };
        sink(&hgm);

        let end = plan.endpoint();
        let t0 = Instant::now();
        let z = oracle_vector(&problem.a, &basis[..1], &end, &problem.x)?;
        let wall = t0.elapsed().as_secs_f64();
        let en = BenchRecord {
            method: Method::Enumerate,
            k: k.into(),
            wall_seconds: wall,
            value: z.z().to_string(),
            fiber_count: Some(fiber_size(&problem.a, &end)),
        };
        sink(&en);
        if hgm.value != en.value {
            return Err(Error::Mismatch {
                k: k.into(),
                hgm: hgm.value,
                enumerate: en.value,
            });
        }
        out.push(hgm);
        out.push(en);
    }
    Ok(out)
}
