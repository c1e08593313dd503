//! Monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::monomial::ExpVec;
use crate::error::{Error, Result};

/// A term order on exponent vectors.
///
/// `priority` lists variable indices from most to least significant, so the
/// natural order `x1 > x2 > ... > xn` is `[0, 1, ..., n-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Lex { priority: Vec<usize> },
    Grevlex { priority: Vec<usize> },
    /// Elimination order: the first `elim` variables are compared first by
    /// graded reverse lexicographic order; ties are broken by `inner` applied
    /// to the remaining variables.
    Block { elim: usize, inner: Box<TermOrder> },
}

impl TermOrder {
    pub fn lex(n: usize) -> Self {
        TermOrder::Lex {
            priority: (0..n).collect(),
        }
    }

    pub fn grevlex(n: usize) -> Self {
        TermOrder::Grevlex {
            priority: (0..n).collect(),
        }
    }

    pub fn block(elim: usize, inner: TermOrder) -> Self {
        TermOrder::Block {
            elim,
            inner: Box::new(inner),
        }
    }

    /// Number of variables the order acts on.
    pub fn nvars(&self) -> usize {
        match self {
            TermOrder::Lex { priority } | TermOrder::Grevlex { priority } => priority.len(),
            TermOrder::Block { elim, inner } => elim + inner.nvars(),
        }
    }

    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        cmp_slices(self, a.exps(), b.exps())
    }

    /// Same kind of order on `n` variables with natural priority.
    pub fn resized(&self, n: usize) -> TermOrder {
        match self {
            TermOrder::Lex { .. } => TermOrder::lex(n),
            TermOrder::Grevlex { .. } => TermOrder::grevlex(n),
            TermOrder::Block { elim, inner } => {
                TermOrder::block(*elim, inner.resized(n.saturating_sub(*elim)))
            }
        }
    }

    fn validate(self) -> Result<Self> {
        if let TermOrder::Lex { priority } | TermOrder::Grevlex { priority } = &self {
            let mut seen = vec![false; priority.len()];
            for &p in priority {
                if p >= seen.len() || seen[p] {
                    return Err(Error::invalid("order", "priority must be a permutation"));
                }
                seen[p] = true;
            }
        }
        Ok(self)
    }
}

fn cmp_slices(order: &TermOrder, a: &[u32], b: &[u32]) -> Ordering {
    match order {
        TermOrder::Lex { priority } => {
            for &v in priority {
                match a[v].cmp(&b[v]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        }
        TermOrder::Grevlex { priority } => {
            let da: u32 = priority.iter().map(|&v| a[v]).sum();
            let db: u32 = priority.iter().map(|&v| b[v]).sum();
            if da != db {
                return da.cmp(&db);
            }
            for &v in priority.iter().rev() {
                match a[v].cmp(&b[v]) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        }
        TermOrder::Block { elim, inner } => {
            let head = TermOrder::grevlex(*elim);
            match cmp_slices(&head, &a[..*elim], &b[..*elim]) {
                Ordering::Equal => cmp_slices(inner, &a[*elim..], &b[*elim..]),
                o => o,
            }
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let natural = |p: &[usize]| p.iter().enumerate().all(|(i, &v)| i == v);
        let write_priority = |f: &mut fmt::Formatter<'_>, name: &str, p: &[usize]| {
            if natural(p) {
                f.write_str(name)
            } else {
                let p: Vec<String> = p.iter().map(|v| (v + 1).to_string()).collect();
                write!(f, "{name}:{}", p.join(","))
            }
        };
        match self {
            TermOrder::Lex { priority } => write_priority(f, "lex", priority),
            TermOrder::Grevlex { priority } => write_priority(f, "grevlex", priority),
            TermOrder::Block { elim, inner } => write!(f, "block({elim};{inner})"),
        }
    }
}

/// Unsized order specification as written in problem files and on the command
/// line: `lex`, `grevlex`, or either with an explicit 1-based variable
/// priority such as `grevlex:4,3,2,1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSpec {
    pub graded: bool,
    pub priority: Option<Vec<usize>>,
}

impl Default for OrderSpec {
    fn default() -> Self {
        OrderSpec {
            graded: true,
            priority: None,
        }
    }
}

impl OrderSpec {
    pub fn build(&self, n: usize) -> Result<TermOrder> {
        let priority = match &self.priority {
            None => (0..n).collect(),
            Some(p) if p.len() == n => p.clone(),
            Some(p) => {
                return Err(Error::invalid(
                    "order",
                    format!("priority lists {} variables, expected {n}", p.len()),
                ))
            }
        };
        let order = if self.graded {
            TermOrder::Grevlex { priority }
        } else {
            TermOrder::Lex { priority }
        };
        order.validate()
    }
}

impl FromStr for OrderSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, prio) = match s.trim().split_once(':') {
            Some((k, p)) => (k.trim(), Some(p)),
            None => (s.trim(), None),
        };
        let graded = match kind {
            "lex" => false,
            "grevlex" => true,
            other => {
                return Err(Error::invalid(
                    "order",
                    format!("unknown term order {other:?} (expected lex or grevlex)"),
                ))
            }
        };
        let priority = prio
            .map(|p| {
                p.split(',')
                    .map(|v| match v.trim().parse::<usize>() {
                        Ok(i) if i >= 1 => Ok(i - 1),
                        _ => Err(Error::invalid("order", format!("bad variable index {v:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Ok(OrderSpec { graded, priority })
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.graded { "grevlex" } else { "lex" })?;
        if let Some(p) = &self.priority {
            let p: Vec<String> = p.iter().map(|v| (v + 1).to_string()).collect();
            write!(f, ":{}", p.join(","))?;
        }
        Ok(())
    }
}
