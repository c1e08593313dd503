use std::cmp::Ordering;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::ExpVec;
use super::order::TermOrder;
use crate::algebra::rat::{serde_rat, Rat};

/// Sparse polynomial over Q.
///
/// Terms are kept sorted in decreasing order with respect to the term order
/// the polynomial was built with; every operation that takes a `TermOrder`
/// expects that same order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: Vec<(ExpVec, Rat)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    /// Combines like terms, drops zeros and sorts by `order`.
    pub fn from_terms(mut terms: Vec<(ExpVec, Rat)>, order: &TermOrder) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(ExpVec, Rat)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn monomial(e: ExpVec, c: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(e, c)] }
        }
    }

    /// `x^u - x^v`
    pub fn binomial(u: ExpVec, v: ExpVec, order: &TermOrder) -> Self {
        Self::from_terms(vec![(u, Rat::one()), (v, -Rat::one())], order)
    }

    pub fn terms(&self) -> &[(ExpVec, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(ExpVec, Rat)> {
        self.terms.first()
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(ExpVec, Rat)> {
        (!self.terms.is_empty()).then(|| self.terms.remove(0))
    }

    pub fn leading_monomial(&self) -> Option<&ExpVec> {
        self.terms.first().map(|(e, _)| e)
    }

    pub fn nvars(&self) -> Option<usize> {
        self.terms.first().map(|(e, _)| e.nvars())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e.degree()).max()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by `c * x^m`; term order is preserved by multiplicativity.
    pub fn mul_term(&self, m: &ExpVec, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, a)| (e.mul(m), a * c)).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// `self + c * x^m * other`, merging the two sorted term lists.
    pub fn add_scaled(&self, other: &Poly, m: &ExpVec, c: &Rat, order: &TermOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(e, x)| (e.mul(m), x * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((ea, _)), Some((eb, _))) => order.cmp(ea, eb),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (e, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + y;
                    if !s.is_zero() {
                        out.push((e.clone(), s));
                    }
                }
            }
        }
        Poly { terms: out }
    }

    pub fn add(&self, other: &Poly, order: &TermOrder) -> Self {
        match other.nvars() {
            None => self.clone(),
            Some(n) => self.add_scaled(other, &ExpVec::zero(n), &Rat::one(), order),
        }
    }

    pub fn sub(&self, other: &Poly, order: &TermOrder) -> Self {
        match other.nvars() {
            None => self.clone(),
            Some(n) => self.add_scaled(other, &ExpVec::zero(n), &-Rat::one(), order),
        }
    }

    pub fn mul(&self, other: &Poly, order: &TermOrder) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                terms.push((ea.mul(eb), ca * cb));
            }
        }
        Self::from_terms(terms, order)
    }

    /// Re-sorts under a different order.
    pub fn reorder(&self, order: &TermOrder) -> Self {
        Self::from_terms(self.terms.clone(), order)
    }

    /// Human-readable form such as `2*d2*d3 - d1*d4`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let a = c.abs();
            if e.is_one() {
                let _ = write!(s, "{a}");
            } else if a.is_one() {
                let _ = write!(s, "{}", e.display(var));
            } else {
                let _ = write!(s, "{a}*{}", e.display(var));
            }
        }
        s
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    e: e.exps().to_vec(),
                    c: c.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson, order: &TermOrder) -> Self {
        Self::from_terms(
            j.terms
                .iter()
                .map(|t| (ExpVec::new(t.e.clone()), t.c.clone()))
                .collect(),
            order,
        )
    }
}

/// Exponent-vector JSON form `{"terms":[{"e":[0,1,1,0],"c":"1"}, ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<u32>,
    #[serde(with = "serde_rat")]
    pub c: Rat,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn e(v: &[u32]) -> ExpVec {
        ExpVec::new(v.to_vec())
    }

    #[test]
    fn display_and_json() {
        let o = TermOrder::grevlex(4);
        let p = Poly::from_terms(
            vec![(e(&[1, 0, 0, 1]), rat(-1)), (e(&[0, 1, 1, 0]), rat(2))],
            &o,
        );
        assert_eq!(p.display_with("d"), "2*d2*d3 - d1*d4");
        let j = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(
            j,
            r#"{"terms":[{"e":[0,1,1,0],"c":"2"},{"e":[1,0,0,1],"c":"-1"}]}"#
        );
        let back: PolyJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Poly::from_json(&back, &o), p);
    }

    #[test]
    fn arithmetic() {
        let o = TermOrder::lex(2);
        let x = Poly::monomial(e(&[1, 0]), rat(1));
        let y = Poly::monomial(e(&[0, 1]), rat(1));
        let s = x.add(&y, &o);
        let sq = s.mul(&s, &o);
        assert_eq!(sq.display_with("x"), "x1^2 + 2*x1*x2 + x2^2");
        assert!(s.sub(&s, &o).is_zero());
        assert_eq!(Poly::from_terms(vec![(e(&[0, 0]), rat(0))], &o), Poly::zero());
    }
}
