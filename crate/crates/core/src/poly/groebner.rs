//! Buchberger's algorithm with the product and chain criteria.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_traits::One;

use super::monomial::ExpVec;
use super::order::TermOrder;
use super::polynomial::Poly;
use crate::algebra::rat::Rat;

/// A reduced Gröbner basis together with its term order.
///
/// Generators are monic, sorted by decreasing leading monomial, and no term of
/// any generator is divisible by the leading monomial of another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Poly>,
    order: TermOrder,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &ExpVec> {
        self.generators.iter().filter_map(Poly::leading_monomial)
    }

    /// True when `m` is divisible by no leading monomial, i.e. is standard.
    pub fn is_standard(&self, m: &ExpVec) -> bool {
        !self.leading_monomials().any(|lm| lm.divides(m))
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        reduce(p, &self.generators, &self.order)
    }

    /// True when every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| reduce(&s_polynomial(&g[i], &g[j], &self.order), g, &self.order).is_zero())
        })
    }

    /// True when the basis is reduced (monic, no term divisible by another
    /// generator's leading monomial).
    pub fn is_reduced(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, g)| {
            g.leading().is_some_and(|(_, c)| c.is_one())
                && g.terms().iter().all(|(m, _)| {
                    self.generators
                        .iter()
                        .enumerate()
                        .all(|(j, h)| i == j || !h.leading_monomial().unwrap().divides(m))
                })
        })
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.generators.is_empty() {
            return "(empty ideal)".to_string();
        }
        self.generators
            .iter()
            .map(|g| g.display_with(var))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Remainder of `p` on full multivariate division by `g`.
pub fn normal_form(p: &Poly, g: &GroebnerBasis) -> Poly {
    g.normal_form(p)
}

fn reduce(p: &Poly, divisors: &[Poly], order: &TermOrder) -> Poly {
    let mut rest = p.clone();
    let mut remainder: Vec<(ExpVec, Rat)> = Vec::new();
    while let Some((lm, lc)) = rest.leading().cloned() {
        let hit = divisors.iter().find_map(|g| {
            let (gm, gc) = g.leading()?;
            lm.div(gm).map(|q| (g, q, gc))
        });
        match hit {
            Some((g, q, gc)) => {
                let c = -(&lc / gc);
                rest = rest.add_scaled(g, &q, &c, order);
            }
            None => {
                rest.pop_leading();
                remainder.push((lm, lc));
            }
        }
    }
    Poly::from_terms(remainder, order)
}

fn s_polynomial(f: &Poly, g: &Poly, order: &TermOrder) -> Poly {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).unwrap(), &fc.recip());
    a.add_scaled(g, &l.div(gm).unwrap(), &-gc.recip(), order)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Poly], order: &TermOrder) -> GroebnerBasis {
    let mut basis: Vec<Poly> = Vec::new();
    for g in gens {
        let g = g.reorder(order);
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut done: HashSet<(usize, usize)> = HashSet::new();

    while let Some(idx) = select_pair(&pairs, &basis, order) {
        let (i, j) = pairs.swap_remove(idx);
        done.insert((i, j));
        let li = basis[i].leading_monomial().unwrap().clone();
        let lj = basis[j].leading_monomial().unwrap().clone();
        if li.is_coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && done.contains(&key(i, k))
                && done.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            let n = basis.len();
            basis.push(r.monic());
            for i in 0..n {
                pairs.push((i, n));
            }
        }
    }

    GroebnerBasis {
        generators: interreduce(basis, order),
        order: order.clone(),
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Normal selection strategy: smallest lcm of leading monomials first.
fn select_pair(pairs: &[(usize, usize)], basis: &[Poly], order: &TermOrder) -> Option<usize> {
    let lcm = |&(i, j): &(usize, usize)| {
        basis[i]
            .leading_monomial()
            .unwrap()
            .lcm(basis[j].leading_monomial().unwrap())
    };
    pairs
        .iter()
        .enumerate()
        .map(|(idx, p)| (idx, lcm(p)))
        .min_by(|(ia, a), (ib, b)| match a.degree().cmp(&b.degree()) {
            Ordering::Equal => order.cmp(a, b).then(ia.cmp(ib)),
            o => o,
        })
        .map(|(idx, _)| idx)
}

fn interreduce(mut basis: Vec<Poly>, order: &TermOrder) -> Vec<Poly> {
    // drop generators whose leading monomial is a multiple of another's
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Poly> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced: Vec<Poly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Poly> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            reduce(&minimal[i], &others, order).monic()
        })
        .collect();
    reduced.retain(|p| !p.is_zero());
    reduced.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    reduced
}

impl GroebnerBasis {
    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }
}
