//! Small helpers around `BigRational`: parsing, canonical formatting and
//! decimal rendering for reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Canonical text form: `numer` when the denominator is one, `numer/denom`
/// otherwise. Round-trips through [`parse_rational`].
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Accepts `p/q`, plain integers, decimals (`0.01`) and scientific shorthand
/// for inverse powers of ten (`1e-12`).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let d: BigInt = d
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((m, e)) = s.split_once(['e', 'E']) {
        let exp: i32 = e
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
        let mantissa = parse_rational(m)?;
        let ten = BigInt::from(10);
        let scale = num_traits::pow::pow(ten, exp.unsigned_abs() as usize);
        let scale = BigRational::from_integer(scale);
        return Ok(if exp >= 0 {
            mantissa * scale
        } else {
            mantissa / scale
        });
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse()
                .map_err(|_| Error::Parse(format!("bad decimal in {s:?}")))?
        };
        let frac_digits = frac.len();
        let frac_num: BigInt = if frac.is_empty() {
            BigInt::zero()
        } else {
            frac.parse()
                .map_err(|_| Error::Parse(format!("bad decimal in {s:?}")))?
        };
        let denom = num_traits::pow::pow(BigInt::from(10), frac_digits);
        let mut value =
            BigRational::from_integer(int.clone()).abs() + BigRational::new(frac_num, denom);
        if neg {
            value = -value;
        }
        return Ok(value);
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))?;
    Ok(BigRational::from_integer(n))
}

/// Convenience decimal rendering for report output; not authoritative.
pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Fall back to a scaled division when numerator/denominator
        // individually overflow f64.
        let digits = 30usize;
        let scale = num_traits::pow::pow(BigInt::from(10), digits);
        let scaled = (x * BigRational::from_integer(scale)).to_integer();
        scaled.to_f64().unwrap_or(f64::NAN) / 10f64.powi(digits as i32)
    })
}

/// `x^k` for a nonnegative exponent.
pub fn rat_pow(x: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = x.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        k >>= 1;
    }
    acc
}

pub mod serde_rational {
    //! Serialize rationals as canonical `p/q` strings.
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        format_rational(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
