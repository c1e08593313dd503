//! Univariate polynomials in the line parameter `k` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rat::{parse_rat, Rat};
use crate::error::{Error, Result};

/// Polynomial in `k`, coefficients stored lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPolyK {
    coeffs: Vec<Rat>,
}

impl UniPolyK {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPolyK { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `a + b*k`
    pub fn linear(a: Rat, b: Rat) -> Self {
        Self::new(vec![a, b])
    }

    /// The monomial `k`.
    pub fn k() -> Self {
        Self::linear(Rat::zero(), Rat::one())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, k: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * k + c)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPolyK {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn parse(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

impl Zero for UniPolyK {
    fn zero() -> Self {
        UniPolyK { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UniPolyK {
    fn one() -> Self {
        Self::constant(Rat::one())
    }
}

impl From<Rat> for UniPolyK {
    fn from(c: Rat) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a UniPolyK> for &'a UniPolyK {
    type Output = UniPolyK;

    fn add(self, rhs: &UniPolyK) -> UniPolyK {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        UniPolyK::new(coeffs)
    }
}

impl<'a> Sub<&'a UniPolyK> for &'a UniPolyK {
    type Output = UniPolyK;

    fn sub(self, rhs: &UniPolyK) -> UniPolyK {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a UniPolyK> for &'a UniPolyK {
    type Output = UniPolyK;

    fn mul(self, rhs: &UniPolyK) -> UniPolyK {
        if self.is_zero() || rhs.is_zero() {
            return UniPolyK::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPolyK::new(coeffs)
    }
}

impl Neg for &UniPolyK {
    type Output = UniPolyK;

    fn neg(self) -> UniPolyK {
        UniPolyK {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPolyK {
            type Output = UniPolyK;
            fn $m(self, rhs: UniPolyK) -> UniPolyK {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPolyK {
    type Output = UniPolyK;
    fn neg(self) -> UniPolyK {
        -&self
    }
}

impl fmt::Display for UniPolyK {
    /// Highest degree first, e.g. `-2*k^2-6*k-4` or `1/2*k+3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let a = c.abs();
            match deg {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    f.write_str("k")?;
                    if deg > 1 {
                        write!(f, "^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPolyK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPolyK({self})")
    }
}

fn parse_poly(s: &str) -> Result<UniPolyK> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let bad = |t: &str| Error::Parse(format!("bad polynomial term {t:?} in {s:?}"));
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !s[..i].ends_with('^') {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);

    let mut coeffs: Vec<Rat> = Vec::new();
    for term in terms {
        let (neg, body) = match term.as_bytes().first() {
            Some(b'-') => (true, &term[1..]),
            Some(b'+') => (false, &term[1..]),
            _ => (false, term),
        };
        let (coef, deg) = if let Some(kpos) = body.find('k') {
            let coef_str = &body[..kpos];
            let coef = if coef_str.is_empty() {
                Rat::one()
            } else {
                let c = coef_str.strip_suffix('*').ok_or_else(|| bad(term))?;
                parse_rat(c).map_err(|_| bad(term))?
            };
            let rest = &body[kpos + 1..];
            let deg = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| bad(term))?
            };
            (coef, deg)
        } else {
            (parse_rat(body).map_err(|_| bad(term))?, 0)
        };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, Rat::zero());
        }
        if neg {
            coeffs[deg] -= coef;
        } else {
            coeffs[deg] += coef;
        }
    }
    Ok(UniPolyK::new(coeffs))
}
