//! Sturm sequences over Z[q] and exact real-root isolation.

use num_traits::{One, Signed};

use crate::arith::{rat_int, rational_to_f64, IntPoly, Rational};

/// Interval endpoint; finite endpoints are exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    At(Rational),
    PosInf,
}

impl Endpoint {
    pub fn int(x: i64) -> Self {
        Endpoint::At(rat_int(x))
    }
}

/// Sturm chain of the square-free part of a polynomial. `count(a, b)` is
/// the number of distinct real roots in the half-open interval `(a, b]`.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let s = p.squarefree_part();
        let mut chain = vec![s.clone()];
        if s.degree().unwrap_or(0) == 0 {
            return SturmChain { chain };
        }
        chain.push(s.derivative());
        loop {
            let k = chain.len();
            let r = chain[k - 2].pseudo_rem(&chain[k - 1]).expect("nonzero chain member");
            if r.is_zero() {
                break;
            }
            // positive rescaling keeps the sign pattern
            let c = r.content();
            let r = IntPoly::from_coeffs(r.coeffs().iter().map(|x| -(x / &c)).collect());
            chain.push(r);
        }
        SturmChain { chain }
    }

    /// The square-free polynomial the chain was built from.
    pub fn base(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn variations(&self, x: &Endpoint) -> usize {
        let signs = self.chain.iter().map(|p| match x {
            Endpoint::NegInf => p.sign_at_infinity(true),
            Endpoint::PosInf => p.sign_at_infinity(false),
            Endpoint::At(r) => p.sign_at(r),
        });
        let mut last = 0i8;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Distinct real roots in `(lo, hi]` (empty when `hi <= lo`).
    pub fn count(&self, lo: &Endpoint, hi: &Endpoint) -> usize {
        let lv = self.variations(lo);
        let hv = self.variations(hi);
        lv.saturating_sub(hv)
    }

    /// Distinct real roots in the open interval `(lo, hi)`.
    pub fn count_open(&self, lo: &Endpoint, hi: &Endpoint) -> usize {
        let c = self.count(lo, hi);
        match hi {
            Endpoint::At(h) if self.base().sign_at(h) == 0 && c > 0 => c - 1,
            _ => c,
        }
    }
}

/// Every real root has absolute value below this bound.
pub fn cauchy_bound(p: &IntPoly) -> Rational {
    let lead = p.leading().abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    Rational::one() + Rational::new(max, lead).ceil()
}

/// A real algebraic number: the unique root of the square-free `poly` in
/// `(lo, hi]`. Either `lo == hi` (an exact rational root) or `poly` has
/// opposite nonzero signs at the two endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicReal {
    poly: IntPoly,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicReal {
    /// Builds from an interval known to contain exactly one root of the
    /// square-free `poly` in `(lo, hi]`.
    fn from_isolating(poly: IntPoly, chain: &SturmChain, lo: Rational, hi: Rational) -> Self {
        let mut x = AlgebraicReal { poly, lo, hi };
        if x.poly.sign_at(&x.hi) == 0 {
            x.lo = x.hi.clone();
            return x;
        }
        // push lo off any neighbouring root
        while x.poly.sign_at(&x.lo) == 0 {
            let mid = (&x.lo + &x.hi) / rat_int(2);
            if chain.count(&Endpoint::At(x.lo.clone()), &Endpoint::At(mid.clone())) == 1 {
                if x.poly.sign_at(&mid) == 0 {
                    x.lo = mid.clone();
                    x.hi = mid;
                    return x;
                }
                x.hi = mid;
            } else {
                x.lo = mid;
            }
        }
        x
    }

    /// The only real root of `p` (panics unless there is exactly one).
    pub fn unique_real_root(p: &IntPoly) -> Self {
        let mut roots = isolate_real_roots(p, &Endpoint::NegInf, &Endpoint::PosInf);
        assert_eq!(roots.len(), 1, "polynomial {p} has {} real roots", roots.len());
        roots.pop().unwrap()
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn exact(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn bisect(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / rat_int(2);
        let sm = self.poly.sign_at(&mid);
        if sm == 0 {
            self.lo = mid.clone();
            self.hi = mid;
        } else if sm == self.poly.sign_at(&self.hi) {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn refine_to(&mut self, width: &Rational) {
        while &self.width() > width {
            self.bisect();
        }
    }

    /// Midpoint of the isolating interval.
    pub fn approx(&self) -> f64 {
        rational_to_f64(&((&self.lo + &self.hi) / rat_int(2)))
    }
}

/// Isolates the distinct real roots of `p` in `(lo, hi]`, in increasing
/// order.
pub fn isolate_real_roots(p: &IntPoly, lo: &Endpoint, hi: &Endpoint) -> Vec<AlgebraicReal> {
    let chain = SturmChain::new(p);
    let s = chain.base().clone();
    if s.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let b = cauchy_bound(&s);
    let lo = match lo {
        Endpoint::NegInf => -b.clone(),
        Endpoint::At(x) => x.clone().max(-b.clone()),
        Endpoint::PosInf => return Vec::new(),
    };
    let hi = match hi {
        Endpoint::PosInf => b,
        Endpoint::At(x) => x.clone().min(b),
        Endpoint::NegInf => return Vec::new(),
    };
    if hi <= lo {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let c = chain.count(&Endpoint::At(a.clone()), &Endpoint::At(b.clone()));
        match c {
            0 => {}
            1 => out.push(AlgebraicReal::from_isolating(s.clone(), &chain, a, b)),
            _ => {
                let mid = (&a + &b) / rat_int(2);
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn counts_on_k4() {
        let k4 = IntPoly::falling_factorial(4);
        let s = SturmChain::new(&k4);
        assert_eq!(s.count(&Endpoint::NegInf, &Endpoint::PosInf), 4);
        assert_eq!(s.count(&Endpoint::int(0), &Endpoint::int(2)), 2);
        assert_eq!(s.count_open(&Endpoint::int(0), &Endpoint::int(2)), 1);
        assert_eq!(s.count(&Endpoint::NegInf, &Endpoint::int(0)), 1);
        assert_eq!(s.count_open(&Endpoint::NegInf, &Endpoint::int(0)), 0);
    }

    #[test]
    fn repeated_roots_counted_once() {
        let f = &IntPoly::linear(2).pow(3) * &p(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f, &Endpoint::NegInf, &Endpoint::PosInf);
        assert_eq!(roots.len(), 3);
        let mut two = roots[2].clone();
        two.refine_to(&rat(1, 1 << 30));
        assert!((two.approx() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn lambda_tc_root() {
        let mut r = AlgebraicReal::unique_real_root(&p(&[-32, 29, -9, 1]));
        r.refine_to(&rat(1, 1_000_000_000));
        assert!((r.approx() - 2.546602348483596).abs() < 1e-9);
    }

    #[test]
    fn woodall_cubic_root() {
        let mut r = AlgebraicReal::unique_real_root(&p(&[-35, 30, -9, 1]));
        r.refine_to(&rat(1, 1_000_000_000));
        assert!((r.approx() - 2.677814645373914).abs() < 1e-9);
    }

    #[test]
    fn windowed_isolation() {
        let f = IntPoly::falling_factorial(5);
        let roots = isolate_real_roots(&f, &Endpoint::At(rat(1, 2)), &Endpoint::int(3));
        assert_eq!(roots.len(), 3);
        for (mut r, want) in roots.into_iter().zip([1.0, 2.0, 3.0]) {
            r.refine_to(&rat(1, 1 << 30));
            assert!((r.approx() - want).abs() < 1e-9);
        }
    }
}
