//! Arbitrary-precision rationals and their text forms.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

/// Formats `r` with `digits` significant digits, in the style of C's `%g`.
///
/// `to_decimal(&frac(1, 3), 6) == "0.333333"`, and very small or large values
/// switch to exponent notation such as `3.38299e-16`.
pub fn to_decimal(r: &Rat, digits: usize) -> String {
    let digits = digits.max(1);
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let a = r.abs();
    let ten = BigInt::from(10);

    // Find e with 10^e <= a < 10^(e+1).
    let mut e = estimate_exponent(&a);
    loop {
        let lower = pow10_rat(e);
        if a < lower {
            e -= 1;
            continue;
        }
        if a >= pow10_rat(e + 1) {
            e += 1;
            continue;
        }
        break;
    }

    // mantissa = round(a * 10^(digits-1-e)), half away from zero
    let scaled = &a * pow10_rat(digits as i64 - 1 - e);
    let mut mant = round_half_up(&scaled);
    if mant >= ten.pow(digits as u32) {
        mant /= &ten;
        e += 1;
    }

    let mant_str = mant.to_string();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if e < -4 || e >= digits as i64 {
        let (head, tail) = mant_str.split_at(1);
        out.push_str(head);
        let tail = tail.trim_end_matches('0');
        if !tail.is_empty() {
            out.push('.');
            out.push_str(tail);
        }
        let sign = if e < 0 { '-' } else { '+' };
        out.push_str(&format!("e{sign}{:02}", e.abs()));
    } else if e >= 0 {
        let int_len = (e + 1) as usize;
        let (head, tail) = mant_str.split_at(int_len);
        out.push_str(head);
        let tail = tail.trim_end_matches('0');
        if !tail.is_empty() {
            out.push('.');
            out.push_str(tail);
        }
    } else {
        out.push_str("0.");
        for _ in 0..(-e - 1) {
            out.push('0');
        }
        out.push_str(mant_str.trim_end_matches('0'));
    }
    out
}

fn estimate_exponent(a: &Rat) -> i64 {
    let n = a.numer().to_string().len() as i64;
    let d = a.denom().to_string().len() as i64;
    n - d
}

fn pow10_rat(e: i64) -> Rat {
    let ten = BigInt::from(10);
    match e.cmp(&0) {
        Ordering::Less => Rat::new(BigInt::one(), ten.pow((-e) as u32)),
        _ => Rat::from_integer(ten.pow(e as u32)),
    }
}

fn round_half_up(x: &Rat) -> BigInt {
    let (q, r) = x.numer().div_mod_floor(x.denom());
    if BigInt::from(2) * r >= *x.denom() {
        q + 1
    } else {
        q
    }
}

/// Sign-aware conversion used when a value must be an integer.
pub fn as_integer(r: &Rat) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}

pub mod serde_rat {
    //! Serde adapter for rationals as `"p/q"` strings.
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{parse_rat, Rat};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(de::Error::custom)
    }

    pub mod vec {
        use serde::{de, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        use super::super::{parse_rat, Rat};

        pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&r.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
            let v = Vec::<String>::deserialize(d)?;
            v.iter()
                .map(|s| parse_rat(s).map_err(de::Error::custom))
                .collect()
        }
    }
}
