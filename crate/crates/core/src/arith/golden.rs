use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{isqrt, parse_rational, rat, rational_to_f64, rational_to_string, IntPoly, Rational};
use crate::error::ArithError;

/// Exact real number `a + b√5` with rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenValue {
    a: Rational,
    b: Rational,
}

impl GoldenValue {
    pub fn new(a: Rational, b: Rational) -> Self {
        GoldenValue { a, b }
    }

    /// `(a + b√5) / den` from integers.
    pub fn from_ints(a: i64, b: i64, den: i64) -> Self {
        GoldenValue { a: rat(a, den), b: rat(b, den) }
    }

    pub fn from_rational(a: Rational) -> Self {
        GoldenValue { a, b: Rational::zero() }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        Self::from_rational(Rational::from_integer(a.into()))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The golden ratio τ = (1 + √5)/2.
    pub fn tau() -> Self {
        Self::from_ints(1, 1, 2)
    }

    /// The golden point q = τ + 1 = (3 + √5)/2.
    pub fn golden_point() -> Self {
        Self::from_ints(3, 1, 2)
    }

    pub fn sqrt5() -> Self {
        Self::from_ints(0, 1, 1)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b√5`.
    pub fn conj(&self) -> Self {
        GoldenValue { a: self.a.clone(), b: -&self.b }
    }

    /// Field norm `a^2 - 5 b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - rat(5, 1) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self, ArithError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::DivideByZero);
        }
        Ok(GoldenValue { a: &self.a / &n, b: -&self.b / &n })
    }

    pub fn checked_div(&self, rhs: &GoldenValue) -> Result<Self, ArithError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Exact sign of the real number `a + b√5`.
    pub fn sign(&self) -> i8 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sa >= 0 && sb >= 0 {
            return sa.max(sb);
        }
        if sa <= 0 && sb <= 0 {
            return sa.min(sb);
        }
        // opposite signs: compare a^2 with 5 b^2
        let a2 = &self.a * &self.a;
        let b2 = rat(5, 1) * &self.b * &self.b;
        if a2 > b2 {
            sa
        } else {
            sb
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Whether this lies in Z[τ], the ring of integers of Q(√5): both `2a`
    /// and `2b` are integers of equal parity.
    pub fn is_algebraic_integer(&self) -> bool {
        let two = rat(2, 1);
        let a2 = &self.a * &two;
        let b2 = &self.b * &two;
        if !a2.is_integer() || !b2.is_integer() {
            return false;
        }
        ((a2.numer() - b2.numer()) % BigInt::from(2)).is_zero()
    }

    /// Approximation with relative error at most `2^(1 - precision_bits)`.
    pub fn approx(&self, precision_bits: u32) -> GoldenApprox {
        let bits = precision_bits.max(24);
        if self.is_zero() {
            return GoldenApprox { value: Rational::zero(), error: Rational::zero(), bits };
        }
        if self.b.is_zero() {
            return GoldenApprox { value: self.a.clone(), error: Rational::zero(), bits };
        }
        let mut k = bits as usize + 8;
        loop {
            // s / 2^k <= √5 < (s + 1) / 2^k
            let scale = BigInt::one() << k;
            let s = isqrt(&(BigInt::from(5) << (2 * k)));
            let root = Rational::new(2 * s + 1, &scale * 2);
            let half_ulp = Rational::new(BigInt::one(), &scale * 2);
            let value = &self.a + &self.b * &root;
            let error = self.b.abs() * half_ulp;
            let budget = Rational::new(BigInt::one(), BigInt::one() << (bits as usize - 1));
            let lower = value.abs() - &error;
            if lower.is_positive() && error <= lower * budget {
                return GoldenApprox { value, error, bits };
            }
            k += 64;
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.approx(64).to_f64()
    }
}

/// `τ^k` for any integer `k`, using τ^-1 = τ - 1.
pub fn tau_power(k: i64) -> GoldenValue {
    let base = if k >= 0 { GoldenValue::tau() } else { GoldenValue::from_ints(-1, 1, 2) };
    base.pow(k.unsigned_abs() as u32)
}

fn rat_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// A rational approximation of a [`GoldenValue`] with an absolute error
/// bound: the true value lies in `[value - error, value + error]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GoldenApprox {
    pub value: Rational,
    pub error: Rational,
    pub bits: u32,
}

impl GoldenApprox {
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.value)
    }

    pub fn error_f64(&self) -> f64 {
        rational_to_f64(&self.error)
    }

    /// Sign of the approximation if the error bound excludes zero.
    pub fn certain_sign(&self) -> Option<i8> {
        if self.value.abs() > self.error {
            Some(rat_sign(&self.value))
        } else if self.value.is_zero() && self.error.is_zero() {
            Some(0)
        } else {
            None
        }
    }
}

impl IntPoly {
    /// Exact Horner evaluation in Q(√5).
    pub fn eval_golden(&self, x: &GoldenValue) -> GoldenValue {
        self.coeffs().iter().rev().fold(GoldenValue::zero(), |acc, c| {
            let mut v = &acc * x;
            v.a += Rational::from_integer(c.clone());
            v
        })
    }
}

impl PartialOrd for GoldenValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl Add for &GoldenValue {
    type Output = GoldenValue;
    fn add(self, rhs: &GoldenValue) -> GoldenValue {
        GoldenValue { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &GoldenValue {
    type Output = GoldenValue;
    fn sub(self, rhs: &GoldenValue) -> GoldenValue {
        GoldenValue { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &GoldenValue {
    type Output = GoldenValue;
    fn mul(self, rhs: &GoldenValue) -> GoldenValue {
        GoldenValue {
            a: &self.a * &rhs.a + rat(5, 1) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &GoldenValue {
    type Output = GoldenValue;
    fn neg(self) -> GoldenValue {
        GoldenValue { a: -&self.a, b: -&self.b }
    }
}

impl Neg for GoldenValue {
    type Output = GoldenValue;
    fn neg(self) -> GoldenValue {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GoldenValue {
            type Output = GoldenValue;
            fn $m(self, rhs: GoldenValue) -> GoldenValue {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for GoldenValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}√5", rational_to_string(&self.a), rational_to_string(&self.b))
    }
}

impl fmt::Debug for GoldenValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenValue({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct GoldenJson {
    a: String,
    b: String,
}

impl Serialize for GoldenValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GoldenJson { a: rational_to_string(&self.a), b: rational_to_string(&self.b) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GoldenValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GoldenJson::deserialize(d)?;
        let a = parse_rational(&raw.a).map_err(serde::de::Error::custom)?;
        let b = parse_rational(&raw.b).map_err(serde::de::Error::custom)?;
        Ok(GoldenValue { a, b })
    }
}
