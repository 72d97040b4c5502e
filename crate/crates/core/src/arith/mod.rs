//! Exact arithmetic: big rationals, dense integer polynomials, and the
//! real quadratic field Q(√5).

mod golden;
mod poly;

pub use golden::{tau_power, GoldenApprox, GoldenValue};
pub use poly::IntPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ArithError;

/// Reduced big rational with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Formats as `p` or `p/q`.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let err = || ArithError::Parse { what: "rational", input: s.to_string() };
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            if let Ok(n) = s.parse::<BigInt>() {
                return Ok(Rational::from_integer(n));
            }
            // plain decimal such as 2.5
            let (int, frac) = s.split_once('.').ok_or_else(err)?;
            let neg = int.starts_with('-');
            let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
            let n: BigInt = digits.parse().map_err(|_| err())?;
            let d = num_traits::pow(BigInt::from(10), frac.len());
            let r = Rational::new(n, d);
            Ok(if neg { -r } else { r })
        }
    }
}

/// `2^e` as f64 for any exponent, saturating to 0 or infinity.
pub(crate) fn pow2(e: i64) -> f64 {
    if e > 1023 {
        f64::INFINITY
    } else if e < -1074 {
        0.0
    } else if e < -1022 {
        2f64.powi(-1022) * 2f64.powi((e + 1022) as i32)
    } else {
        2f64.powi(e as i32)
    }
}

/// Nearest-ish f64 of an arbitrary big integer scaled by `2^shift`.
pub(crate) fn bigint_to_f64_scaled(x: &BigInt, shift: i64) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let bits = x.bits() as i64;
    let drop = (bits - 64).max(0);
    let top = x >> (drop as usize);
    let m = num_traits::ToPrimitive::to_f64(&top).unwrap_or(0.0);
    m * pow2(drop + shift)
}

/// log2 |x| for a nonzero big integer.
pub(crate) fn bigint_log2(x: &BigInt) -> f64 {
    let bits = x.bits() as i64;
    let drop = (bits - 64).max(0);
    let top = x.abs() >> (drop as usize);
    num_traits::ToPrimitive::to_f64(&top).unwrap_or(1.0).log2() + drop as f64
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    let (n, d) = (r.numer(), r.denom());
    if n.is_zero() {
        return 0.0;
    }
    let s = 64 + d.bits() as i64 - n.bits() as i64;
    let shifted = if s >= 0 { n << (s as usize) } else { n >> ((-s) as usize) };
    let q = shifted.div_floor(d);
    bigint_to_f64_scaled(&q, -s)
}

/// Integer square root (floor).
pub(crate) fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    n.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7, 1));
        assert_eq!(parse_rational("2.5").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn rational_float_conversion() {
        assert_eq!(rational_to_f64(&rat(1, 4)), 0.25);
        assert!((rational_to_f64(&rat(-1, 3)) + 1.0 / 3.0).abs() < 1e-16);
        let big = Rational::new(BigInt::from(10).pow(400u32) + 1, BigInt::from(10).pow(400u32));
        assert_eq!(rational_to_f64(&big), 1.0);
    }
}
