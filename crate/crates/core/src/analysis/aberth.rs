//! Simultaneous complex root iteration (Aberth–Ehrlich) in fixed-point
//! big-integer arithmetic, with inclusion radii computed exactly.

use num_bigint::BigInt;
use num_traits::{Float, One, Signed, Zero};

use crate::arith::{bigint_to_f64_scaled, IntPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Fx {
    pub re: BigInt,
    pub im: BigInt,
}

fn fixed_from_f64(x: f64, prec: usize) -> BigInt {
    if x == 0.0 || !x.is_finite() {
        return BigInt::zero();
    }
    let (m, e, s) = Float::integer_decode(x);
    let shift = e as i64 + prec as i64;
    let m = BigInt::from(m);
    let v = if shift >= 0 { m << (shift as usize) } else { m >> ((-shift) as usize) };
    if s < 0 {
        -v
    } else {
        v
    }
}

pub(crate) struct Ctx {
    pub prec: usize,
}

impl Ctx {
    pub fn fixed(&self, re: f64, im: f64) -> Fx {
        Fx { re: fixed_from_f64(re, self.prec), im: fixed_from_f64(im, self.prec) }
    }

    pub fn to_f64(&self, z: &Fx) -> (f64, f64) {
        let s = -(self.prec as i64);
        (bigint_to_f64_scaled(&z.re, s), bigint_to_f64_scaled(&z.im, s))
    }

    /// Rescales a value held at another precision.
    pub fn convert(&self, z: &Fx, from: usize) -> Fx {
        let sh = |x: &BigInt| if self.prec >= from { x << (self.prec - from) } else { x >> (from - self.prec) };
        Fx { re: sh(&z.re), im: sh(&z.im) }
    }

    fn one(&self) -> Fx {
        Fx { re: BigInt::one() << self.prec, im: BigInt::zero() }
    }

    fn add(&self, a: &Fx, b: &Fx) -> Fx {
        Fx { re: &a.re + &b.re, im: &a.im + &b.im }
    }

    fn sub(&self, a: &Fx, b: &Fx) -> Fx {
        Fx { re: &a.re - &b.re, im: &a.im - &b.im }
    }

    fn mul(&self, a: &Fx, b: &Fx) -> Fx {
        Fx {
            re: (&a.re * &b.re - &a.im * &b.im) >> self.prec,
            im: (&a.re * &b.im + &a.im * &b.re) >> self.prec,
        }
    }

    fn div(&self, a: &Fx, b: &Fx) -> Option<Fx> {
        let den = &b.re * &b.re + &b.im * &b.im;
        if den.is_zero() {
            return None;
        }
        let re = ((&a.re * &b.re + &a.im * &b.im) << self.prec) / &den;
        let im = ((&a.im * &b.re - &a.re * &b.im) << self.prec) / &den;
        Some(Fx { re, im })
    }

    fn magnitude(&self, z: &Fx) -> f64 {
        let (x, y) = self.to_f64(z);
        x.hypot(y)
    }

    /// `p(z)` and `p'(z)` by Horner.
    fn eval(&self, coeffs: &[BigInt], z: &Fx) -> (Fx, Fx) {
        let d = coeffs.len() - 1;
        let lift = |c: &BigInt| Fx { re: c << self.prec, im: BigInt::zero() };
        let mut b = lift(&coeffs[d]);
        let mut db = Fx { re: BigInt::zero(), im: BigInt::zero() };
        for c in coeffs[..d].iter().rev() {
            db = self.add(&self.mul(&db, z), &b);
            b = self.add(&self.mul(&b, z), &lift(c));
        }
        (b, db)
    }
}

/// Starting points on a circle enclosing the roots.
pub(crate) fn initial_guesses(p: &IntPoly) -> Vec<(f64, f64)> {
    let d = p.degree().unwrap_or(0);
    let c = p.coeffs();
    let lead = bigint_to_f64_scaled(&c[d], 0);
    let center = -bigint_to_f64_scaled(&c[d - 1], 0) / (d as f64 * lead);
    let mut radius: f64 = 0.0;
    for k in 1..=d {
        let r = (bigint_to_f64_scaled(&c[d - k], 0) / lead).abs().powf(1.0 / k as f64);
        radius = radius.max(r);
    }
    let radius = radius.max(1.0);
    (0..d)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            (center + radius * t.cos(), radius * t.sin())
        })
        .collect()
}

/// Runs the iteration at `prec` bits from `start` (values at `start_prec`
/// bits), returning the final approximations at `prec` bits.
pub(crate) fn aberth(p: &IntPoly, start: &[Fx], start_prec: usize, prec: usize, max_iter: usize) -> Vec<Fx> {
    let ctx = Ctx { prec };
    let coeffs = p.coeffs();
    let mut z: Vec<Fx> = start.iter().map(|s| ctx.convert(s, start_prec)).collect();
    let d = z.len();
    let stop = 2f64.powi(-((prec / 2) as i32).min(1000));
    let nudge = Fx { re: BigInt::one() << prec.saturating_sub(12), im: BigInt::one() << prec.saturating_sub(13) };
    for _ in 0..max_iter {
        let mut worst: f64 = 0.0;
        for k in 0..d {
            let (v, dv) = ctx.eval(coeffs, &z[k]);
            if v.re.is_zero() && v.im.is_zero() {
                continue;
            }
            let Some(w) = ctx.div(&v, &dv) else {
                z[k] = ctx.add(&z[k], &nudge);
                worst = f64::INFINITY;
                continue;
            };
            let mut s = Fx { re: BigInt::zero(), im: BigInt::zero() };
            for j in 0..d {
                if j == k {
                    continue;
                }
                let diff = ctx.sub(&z[k], &z[j]);
                match ctx.div(&ctx.one(), &diff) {
                    Some(inv) => s = ctx.add(&s, &inv),
                    None => z[j] = ctx.add(&z[j], &nudge),
                }
            }
            let denom = ctx.sub(&ctx.one(), &ctx.mul(&w, &s));
            let delta = ctx.div(&w, &denom).unwrap_or(w);
            worst = worst.max(ctx.magnitude(&delta) / ctx.magnitude(&z[k]).max(1.0));
            z[k] = ctx.sub(&z[k], &delta);
        }
        if worst < stop {
            break;
        }
    }
    z
}

/// `log2 |a + bi|` for big integers, `-inf` at zero.
fn log2_abs(re: &BigInt, im: &BigInt) -> f64 {
    let bits = re.bits().max(im.bits()) as i64;
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    let shift = -(bits - 60);
    let x = bigint_to_f64_scaled(re, shift);
    let y = bigint_to_f64_scaled(im, shift);
    x.hypot(y).log2() + (bits - 60) as f64
}

/// Exact `Σ a_k Z^k S^(d-k)` with `Z = re + i·im` and `S = 2^prec`.
fn homogeneous_eval(coeffs: &[BigInt], z: &Fx, prec: usize) -> (BigInt, BigInt) {
    let d = coeffs.len() - 1;
    let (mut hr, mut hi) = (coeffs[d].clone(), BigInt::zero());
    for (k, c) in coeffs[..d].iter().enumerate().rev() {
        let nr = &hr * &z.re - &hi * &z.im;
        let ni = &hr * &z.im + &hi * &z.re;
        hr = nr + (c << (prec * (d - k)));
        hi = ni;
    }
    (hr, hi)
}

/// Exact `log2 |p(z)|` and the Newton inclusion radius `d·|p(z)/p'(z)|`,
/// both as f64 (the radius may be infinite).
pub(crate) fn residual_and_radius(p: &IntPoly, z: &Fx, prec: usize) -> (f64, f64) {
    let coeffs = p.coeffs();
    let d = coeffs.len() - 1;
    let (vr, vi) = homogeneous_eval(coeffs, z, prec);
    let lv = log2_abs(&vr, &vi) - (prec * d) as f64;
    if lv == f64::NEG_INFINITY {
        return (0.0, 0.0);
    }
    let dp = p.derivative();
    let (dr, di) = homogeneous_eval(dp.coeffs(), z, prec);
    let ld = log2_abs(&dr, &di) - (prec * (d - 1)) as f64;
    let radius = if ld == f64::NEG_INFINITY { f64::INFINITY } else { (lv - ld + (d as f64).log2()).exp2() };
    (lv.exp2(), radius)
}

/// Sign of the imaginary part.
pub(crate) fn im_sign(z: &Fx) -> i8 {
    if z.im.is_zero() {
        0
    } else if z.im.is_positive() {
        1
    } else {
        -1
    }
}
