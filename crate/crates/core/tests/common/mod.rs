//! Shared fixtures and independent oracles for the integration tests.

#![allow(dead_code)]

use ahgm::algebra::rat::{frac, rat};
use ahgm::algebra::Rat;
use ahgm::hgm::{enumerate_fiber, fiber_size, Leg};
use ahgm::poly::ExpVec;
use ahgm::ConfigMatrix;
use rand::Rng;

pub fn example() -> ConfigMatrix {
    ConfigMatrix::new(vec![vec![1, 1, 1, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]).unwrap()
}

pub fn example_x() -> Vec<Rat> {
    vec![rat(1), rat(1), frac(1, 2), rat(1)]
}

pub fn example_basis() -> Vec<ExpVec> {
    vec![ExpVec::zero(4), ExpVec::unit(4, 3)]
}

pub fn cube() -> ConfigMatrix {
    ConfigMatrix::new(vec![
        vec![1; 8],
        vec![0, 1, 0, 0, 1, 1, 0, 1],
        vec![0, 0, 1, 0, 1, 0, 1, 1],
        vec![0, 0, 0, 1, 0, 1, 1, 1],
    ])
    .unwrap()
}

pub fn cube_x() -> Vec<Rat> {
    vec![rat(1), frac(1, 2), frac(1, 3), frac(2, 3), rat(1), rat(1), rat(1), rat(1)]
}

pub fn cube_basis() -> Vec<ExpVec> {
    let mut s = vec![ExpVec::zero(8)];
    s.extend((4..8).map(|i| ExpVec::unit(8, i)));
    s.push(ExpVec::new(vec![0, 0, 0, 0, 0, 0, 0, 2]));
    s
}

/// `Σ_{u ≥ v} X^{u-v}/(u-v)!` by a plain loop over the stored fiber.
pub fn naive_component(a: &ConfigMatrix, beta: &[i64], x: &[Rat], v: &[u32]) -> Rat {
    let mut total = rat(0);
    for u in enumerate_fiber(a, beta).points() {
        if u.iter().zip(v).any(|(a, b)| a < b) {
            continue;
        }
        let mut term = rat(1);
        for ((&ui, &vi), xi) in u.iter().zip(v).zip(x) {
            for m in 1..=(ui - vi) {
                term = term * xi / rat(m as i64);
            }
        }
        total += term;
    }
    total
}

/// A random small system: first row all ones, entries in `0..=2`, full row
/// rank.
pub fn random_config(rng: &mut impl Rng) -> ConfigMatrix {
    loop {
        let d = rng.gen_range(1..=3);
        let n = rng.gen_range(d + 1..=5);
        let mut rows = vec![vec![1i64; n]];
        for _ in 1..d {
            rows.push((0..n).map(|_| rng.gen_range(0..=2)).collect());
        }
        let Ok(a) = ConfigMatrix::new(rows) else { continue };
        let distinct = (0..n).all(|i| (0..i).all(|j| a.column(i) != a.column(j)));
        if a.rank() == d && distinct {
            return a;
        }
    }
}

pub fn random_x(rng: &mut impl Rng, n: usize) -> Vec<Rat> {
    (0..n)
        .map(|_| frac(rng.gen_range(1..=9), rng.gen_range(1..=7)))
        .collect()
}

/// `β = A u` for a random small `u`.
pub fn random_beta(rng: &mut impl Rng, a: &ConfigMatrix, max_fiber: u64) -> Vec<i64> {
    loop {
        let u: Vec<u32> = (0..a.n()).map(|_| rng.gen_range(0..=3)).collect();
        let beta = a.apply(&u);
        if fiber_size(a, &beta) <= max_fiber {
            return beta;
        }
    }
}

/// One or two legs, each along a column of `A`.
pub fn random_legs(rng: &mut impl Rng, a: &ConfigMatrix, beta: &[i64], max_fiber: u64) -> Vec<Leg> {
    loop {
        let nlegs = rng.gen_range(1..=2);
        let legs: Vec<Leg> = (0..nlegs)
            .map(|_| {
                let i = rng.gen_range(0..a.n());
                Leg {
                    big_h: a.column(i),
                    steps: rng.gen_range(1..=4),
                }
            })
            .collect();
        let end = legs.iter().fold(beta.to_vec(), |b, l| {
            b.iter().zip(&l.big_h).map(|(x, y)| x + y * l.steps as i64).collect()
        });
        if fiber_size(a, &end) <= max_fiber {
            return legs;
        }
    }
}

pub struct SuiteCase {
    pub a: ConfigMatrix,
    pub plan: ahgm::hgm::EvalPlan,
    pub outcome: ahgm::Result<ahgm::hgm::StateVector>,
}

/// `count` random systems, each walked by the HGM with a guessed basis.
pub fn random_suite(seed: u64, count: usize) -> Vec<SuiteCase> {
    use ahgm::hgm::{hgm_eval, EvalPlan};
    use ahgm::poly::{toric_gb, TermOrder};
    use ahgm::recurrence::{generic_point, guess_basis, ExtractOptions};
    use rand::SeedableRng;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let opts = ExtractOptions {
        max_degree: 6,
        ..Default::default()
    };
    (0..count)
        .map(|_| {
            let a = random_config(&mut rng);
            let g = toric_gb(&a, &TermOrder::grevlex(a.n())).unwrap();
            let basis = guess_basis(&a, &g, &generic_point(a.n(), 0), &generic_point(a.d(), 1), 6).unwrap();
            let beta = random_beta(&mut rng, &a, 500);
            let x = random_x(&mut rng, a.n());
            let plan = EvalPlan {
                legs: random_legs(&mut rng, &a, &beta, 500),
                beta,
                x,
                basis,
            };
            let outcome = hgm_eval(&a, &g, &plan, &opts);
            SuiteCase { a, plan, outcome }
        })
        .collect()
}
