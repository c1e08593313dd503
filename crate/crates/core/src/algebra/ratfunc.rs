//! The field Q(k) of rational functions in one parameter.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::rat::Rat;
use super::unipoly::UniPolyK;
use crate::error::{Error, Result};

/// A reduced fraction `num/den` with monic denominator.
///
/// Normalization is canonical, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFuncK {
    num: UniPolyK,
    den: UniPolyK,
}

impl RatFuncK {
    /// Builds and normalizes `num/den`; errors when `den` is zero.
    pub fn new(num: UniPolyK, den: UniPolyK) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Singular);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: UniPolyK, den: UniPolyK) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFuncK { num, den }
        } else {
            let inv = lc.recip();
            RatFuncK {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: UniPolyK) -> Self {
        RatFuncK {
            num: p,
            den: UniPolyK::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UniPolyK::constant(c))
    }

    pub fn numer(&self) -> &UniPolyK {
        &self.num
    }

    pub fn denom(&self) -> &UniPolyK {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }

    /// Value at `k0`, or `PoleAt(k0)` when the denominator vanishes there.
    pub fn eval(&self, k0: &Rat) -> Result<Rat> {
        let d = self.den.eval(k0);
        if d.is_zero() {
            return Err(Error::PoleAt(k0.clone()));
        }
        Ok(self.num.eval(k0) / d)
    }
}

/// Exact value of `f` at `k0`; see [`RatFuncK::eval`].
pub fn eval_ratfunc(f: &RatFuncK, k0: &Rat) -> Result<Rat> {
    f.eval(k0)
}

impl Zero for RatFuncK {
    fn zero() -> Self {
        RatFuncK {
            num: UniPolyK::zero(),
            den: UniPolyK::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFuncK {
    fn one() -> Self {
        Self::from_poly(UniPolyK::one())
    }
}

impl From<UniPolyK> for RatFuncK {
    fn from(p: UniPolyK) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RatFuncK> for &'a RatFuncK {
    type Output = RatFuncK;

    fn add(self, rhs: &RatFuncK) -> RatFuncK {
        if self.den == rhs.den {
            return RatFuncK::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFuncK::normalized(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RatFuncK> for &'a RatFuncK {
    type Output = RatFuncK;

    fn sub(self, rhs: &RatFuncK) -> RatFuncK {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFuncK> for &'a RatFuncK {
    type Output = RatFuncK;

    fn mul(self, rhs: &RatFuncK) -> RatFuncK {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncK::zero();
        }
        RatFuncK::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RatFuncK> for &'a RatFuncK {
    type Output = RatFuncK;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFuncK) -> RatFuncK {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

impl Neg for &RatFuncK {
    type Output = RatFuncK;

    fn neg(self) -> RatFuncK {
        RatFuncK {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFuncK {
            type Output = RatFuncK;
            fn $m(self, rhs: RatFuncK) -> RatFuncK {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFuncK {
    type Output = RatFuncK;
    fn neg(self) -> RatFuncK {
        -&self
    }
}

impl fmt::Display for RatFuncK {
    /// `(num)/den`, with the denominator parenthesized unless it is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "({})/1", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFuncK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RatFuncK {
    type Err = Error;

    /// Accepts the [`Display`](fmt::Display) form as well as a bare polynomial.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational function: {s:?}"));
        if let Some(rest) = s.strip_prefix('(') {
            let close = rest.find(')').ok_or_else(bad)?;
            let num = UniPolyK::parse(&rest[..close])?;
            let tail = rest[close + 1..].trim();
            let den_str = tail.strip_prefix('/').ok_or_else(bad)?.trim();
            let den_str = den_str
                .strip_prefix('(')
                .and_then(|d| d.strip_suffix(')'))
                .unwrap_or(den_str);
            let den = UniPolyK::parse(den_str)?;
            RatFuncK::new(num, den)
        } else {
            Ok(Self::from_poly(UniPolyK::parse(s)?))
        }
    }
}
