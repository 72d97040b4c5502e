use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::ArithError;

/// Dense univariate polynomial in `q` with big-integer coefficients, stored
/// in ascending degree. The zero polynomial has no coefficients; otherwise
/// the last coefficient is nonzero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// `q - root`.
    pub fn linear(root: i64) -> Self {
        Self::from_i64s(&[-root, 1])
    }

    /// `q (q-1) ... (q-n+1)`, the chromatic polynomial of `K_n`.
    pub fn falling_factorial(n: usize) -> Self {
        (0..n as i64).fold(Self::one(), |acc, s| &acc * &Self::linear(s))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
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

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Quotient `self / divisor`, failing unless the division is exact in
    /// Z[q].
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly, ArithError> {
        let dd = divisor.degree().ok_or(ArithError::DivideByZero)?;
        let Some(nd) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if nd < dd {
            return Err(ArithError::DivisionNotExact);
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(ArithError::DivisionNotExact);
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &qk * c;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ArithError::DivisionNotExact);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Homogenised evaluation at `num/den`: returns `den^deg * p(num/den)`.
    fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // Horner with the denominator pushed onto lower coefficients.
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let Some(d) = self.degree() else {
            return Rational::zero();
        };
        let h = self.eval_homogeneous(x.numer(), x.denom());
        Rational::new(h, num_traits::pow(x.denom().clone(), d))
    }

    /// Exact sign of `p(x)`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let h = self.eval_homogeneous(x.numer(), x.denom());
        sign_of(&h)
    }

    /// Sign of `p(x)` as `x -> +inf` (or `-inf` when `negative`).
    pub fn sign_at_infinity(&self, negative: bool) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = sign_of(&self.leading());
                if negative && d % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        }
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Remainder `r` of `|lc(b)|^(deg a - deg b + 1) a = Q b + r`; the
    /// multiplier is positive so signs are preserved.
    pub fn pseudo_rem(&self, b: &IntPoly) -> Result<IntPoly, ArithError> {
        let db = b.degree().ok_or(ArithError::DivideByZero)?;
        let lead = b.leading();
        let mut rem = self.clone();
        let Some(da) = rem.degree() else {
            return Ok(rem);
        };
        if da < db {
            return Ok(rem);
        }
        let steps = da - db + 1;
        let mut used = 0;
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            let top = rem.leading();
            let shifted = IntPoly::monomial(top, dr - db);
            rem = &rem.scale(&lead) - &(&shifted * b);
            used += 1;
        }
        // Pad the multiplier to lc(b)^steps, then fix its sign.
        let mut r = rem.scale(&num_traits::pow(lead.clone(), steps - used));
        if lead.is_negative() && steps % 2 == 1 {
            r = -r;
        }
        Ok(r)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("b is nonzero");
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// Yun's square-free decomposition: returns `(s_i, i)` with each `s_i`
    /// primitive, square-free, pairwise coprime, and `self = c * prod s_i^i`.
    /// Factors equal to 1 are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let p = self.primitive_part();
        let dp = p.derivative();
        let b = p.gcd(&dp);
        let mut c = p.div_exact(&b).expect("gcd divides");
        let mut d = &dp.div_exact(&b).expect("gcd divides derivative") - &c.derivative();
        let mut i = 1;
        while c.degree().unwrap_or(0) > 0 {
            let a = c.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            c = c.div_exact(&a).expect("gcd divides");
            d = &d.div_exact(&a).expect("gcd divides") - &c.derivative();
            i += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> IntPoly {
        self.squarefree_decomposition()
            .into_iter()
            .fold(IntPoly::one(), |acc, (s, _)| &acc * &s)
    }

    /// True when the nonzero coefficients alternate in sign.
    pub fn has_alternating_signs(&self) -> bool {
        let Some(d) = self.degree() else { return true };
        self.coeffs.iter().enumerate().all(|(k, c)| {
            let expected = if (d - k) % 2 == 0 { 1 } else { -1 };
            c.is_zero() || sign_of(c) == expected
        })
    }
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs(
            (0..n)
                .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<String>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson { coeffs: self.coeffs.iter().map(ToString::to_string).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::from_coeffs(coeffs))
    }
}
