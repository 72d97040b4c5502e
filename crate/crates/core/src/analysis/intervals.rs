//! Exact zero counts on the classical zero-free intervals and the Woodall
//! interval, with algebraic endpoints kept exact.

use serde::{Deserialize, Serialize};

use crate::arith::{rat, IntPoly, Rational};
use crate::families::{lambda_tc, woodall_cubic};

use super::sturm::{isolate_real_roots, AlgebraicReal, Endpoint, SturmChain};

/// Real root of `λ_TC`, ≈ 2.546602.
pub fn rho_tc() -> AlgebraicReal {
    AlgebraicReal::unique_real_root(&lambda_tc())
}

/// Real root of `q^3 - 9q^2 + 30q - 35`, ≈ 2.6778146.
pub fn q_m() -> AlgebraicReal {
    AlgebraicReal::unique_real_root(&woodall_cubic())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalReport {
    /// `(-∞, 0)`
    pub negative: usize,
    /// `(0, 1)`
    pub zero_one: usize,
    /// `(1, 32/27]`
    pub one_to_32_27: usize,
    /// `(2, ρ_TC)`
    pub two_to_rho_tc: usize,
    /// `(q_m, 3)`
    pub woodall: usize,
    pub rho_tc_is_root: bool,
    pub q_m_is_root: bool,
    pub woodall_roots: Vec<f64>,
    pub woodall_counterexample: bool,
    pub rho_tc: f64,
    pub q_m: f64,
}

impl IntervalReport {
    /// No zeros in any of the classical zero-free intervals.
    pub fn zero_free(&self) -> bool {
        self.negative == 0 && self.zero_one == 0 && self.one_to_32_27 == 0 && self.two_to_rho_tc == 0
    }
}

/// Whether `x` is a root of `p`, and an isolating interval `(lo, hi]` for
/// `x` in which `p` has no other root. `x` must be irrational.
fn separate(chain: &SturmChain, p: &IntPoly, x: &AlgebraicReal) -> (bool, Rational, Rational) {
    debug_assert!(x.exact().is_none());
    let mut x = x.clone();
    let g = p.gcd(x.poly());
    let shared = g.degree().unwrap_or(0) > 0 && {
        let gc = SturmChain::new(&g);
        gc.count(&Endpoint::At(x.lo().clone()), &Endpoint::At(x.hi().clone())) == 1
    };
    loop {
        let c = chain.count(&Endpoint::At(x.lo().clone()), &Endpoint::At(x.hi().clone()));
        if c == usize::from(shared) && x.exact().is_none() {
            return (shared, x.lo().clone(), x.hi().clone());
        }
        x.bisect();
    }
}

/// Counts distinct zeros of `p` on each guarded interval.
pub fn interval_checks(p: &IntPoly) -> IntervalReport {
    let chain = SturmChain::new(p);
    let s = chain.base().clone();
    let at = |x: Rational| Endpoint::At(x);
    let is_root = |x: &Rational| s.degree().unwrap_or(0) > 0 && s.sign_at(x) == 0;
    let open_minus = |c: usize, hi: &Rational| c - usize::from(is_root(hi));

    let zero = rat(0, 1);
    let one = rat(1, 1);
    let negative = open_minus(chain.count(&Endpoint::NegInf, &at(zero.clone())), &zero);
    let zero_one = open_minus(chain.count(&at(zero), &at(one.clone())), &one);
    let one_to_32_27 = chain.count(&at(one), &at(rat(32, 27)));

    let rho = rho_tc();
    let (rho_root, rho_lo, _) = separate(&chain, &s, &rho);
    let two_to_rho_tc = chain.count(&at(rat(2, 1)), &at(rho_lo));

    let qm = q_m();
    let (qm_root, _, qm_hi) = separate(&chain, &s, &qm);
    let three = rat(3, 1);
    let woodall = open_minus(chain.count(&at(qm_hi.clone()), &at(three.clone())), &three);
    let woodall_roots = isolate_real_roots(&s, &at(qm_hi), &at(three.clone()))
        .into_iter()
        .filter(|r| r.exact() != Some(&three))
        .map(|mut r| {
            r.refine_to(&rat(1, 1 << 40));
            r.approx()
        })
        .collect();

    IntervalReport {
        negative,
        zero_one,
        one_to_32_27,
        two_to_rho_tc,
        woodall,
        rho_tc_is_root: rho_root,
        q_m_is_root: qm_root,
        woodall_roots,
        woodall_counterexample: woodall > 0,
        rho_tc: approx_fine(&rho),
        q_m: approx_fine(&qm),
    }
}

fn approx_fine(x: &AlgebraicReal) -> f64 {
    let mut x = x.clone();
    x.refine_to(&rat(1, 1 << 52));
    x.approx()
}
