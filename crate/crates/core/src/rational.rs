//! Exact scalar helpers: `p/q` serialization and significant-digit decimal
//! rendering of rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_usize(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q`, with `/q` omitted when `q = 1`.
pub fn to_exact_string(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn parse_exact(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidArgument(format!("not an exact rational: {text:?}"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

fn pow10(e: u32) -> BigInt {
    BigInt::from(10u32).pow(e)
}

/// Rounds to the nearest integer, ties to even.
pub fn round_half_even(value: &Rational) -> BigInt {
    let floor = value.floor().to_integer();
    let frac = value - Rational::from_integer(floor.clone());
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    if frac > half || (frac == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    }
}

/// Decimal rendering with at most `digits` significant digits, rounding half
/// to even. Integers that fit in `digits` digits print bare (`29`, `396`);
/// everything else prints exactly `digits` significant digits (`228.89`,
/// `12.800`). Values too large or small for positional notation switch to
/// `d.ddde±x`.
pub fn to_decimal_string(value: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if value.is_zero() {
        return "0".into();
    }
    if value.is_integer() {
        let s = value.numer().abs().to_string();
        if s.len() <= digits {
            return value.numer().to_string();
        }
    }
    let sign = if value.is_negative() { "-" } else { "" };
    let abs = value.abs();

    // exponent e with 10^e <= abs < 10^(e+1)
    let mut e: i64 = abs.numer().to_string().len() as i64 - abs.denom().to_string().len() as i64;
    let ten_pow = |e: i64| -> Rational {
        if e >= 0 {
            Rational::from_integer(pow10(e as u32))
        } else {
            Rational::new(BigInt::one(), pow10((-e) as u32))
        }
    };
    while abs < ten_pow(e) {
        e -= 1;
    }
    while abs >= ten_pow(e + 1) {
        e += 1;
    }

    let shift = digits as i64 - 1 - e;
    let mut mantissa = round_half_even(&(&abs * ten_pow(shift)));
    if mantissa == pow10(digits as u32) {
        mantissa /= 10;
        e += 1;
    }
    let m = mantissa.to_string();
    debug_assert_eq!(m.len(), digits);

    if e >= digits as i64 || e < -5 {
        let (lead, rest) = m.split_at(1);
        if rest.is_empty() {
            format!("{sign}{lead}e{e}")
        } else {
            format!("{sign}{lead}.{rest}e{e}")
        }
    } else if e >= 0 {
        let (int_part, frac) = m.split_at(e as usize + 1);
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    } else {
        let zeros = "0".repeat((-e - 1) as usize);
        format!("{sign}0.{zeros}{m}")
    }
}
