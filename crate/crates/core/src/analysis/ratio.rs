//! Tutte's golden bound `|P(G, τ+1)| ≤ τ^(5-n)` and the normalised ratio
//! `r = |P(τ+1)| · τ^(n-5)`.

use serde::{Deserialize, Serialize};

use crate::arith::{tau_power, GoldenValue, IntPoly};
use crate::error::AnalysisError;
use crate::families::{family_poly, family_n, Family, FamilySpec};

/// `U(n) = τ^(5-n)`.
pub fn tutte_bound(n: usize) -> Result<GoldenValue, AnalysisError> {
    if n < 3 {
        return Err(AnalysisError::InvalidParameter(format!("tutte bound needs n >= 3, got {n}")));
    }
    Ok(tau_power(5 - n as i64))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub n: usize,
    pub value: GoldenValue,
    pub bound: GoldenValue,
    pub ratio: GoldenValue,
    pub value_f64: f64,
    pub bound_f64: f64,
    pub ratio_f64: f64,
    /// `r > 1`, i.e. the bound fails.
    pub violation: bool,
    /// `r = 1` exactly.
    pub saturated: bool,
}

pub fn tutte_ratio(p: &IntPoly, n: usize) -> Result<RatioReport, AnalysisError> {
    if p.degree() != Some(n) {
        return Err(AnalysisError::DegreeMismatch { degree: p.degree(), expected: n });
    }
    let bound = tutte_bound(n)?;
    let value = p.eval_golden(&GoldenValue::golden_point());
    let ratio = &value.abs() * &tau_power(n as i64 - 5);
    let cmp = (&ratio - &GoldenValue::one()).sign();
    Ok(RatioReport {
        n,
        value_f64: value.to_f64(),
        bound_f64: bound.to_f64(),
        ratio_f64: ratio.to_f64(),
        violation: cmp > 0,
        saturated: cmp == 0,
        value,
        bound,
        ratio,
    })
}

/// Closed-form ratio for a family member, as published for each family.
/// The result is already made nonnegative.
pub fn published_ratio(spec: FamilySpec) -> GoldenValue {
    let g = |a: i64, b: i64, d: i64| GoldenValue::from_ints(a, b, d);
    let p = spec.param;
    let up = |x: GoldenValue, e: i64| x.pow(e as u32);
    let prefactor = g(3, 1, 4);
    let r = match spec.family {
        Family::R => tau_power(-(p - 1)),
        Family::TC => &prefactor * &up(g(3, -1, 1), p),
        Family::I => &prefactor * &up(g(-315, 141, 2), p),
        Family::B => {
            let one_minus_tau = &GoldenValue::one() - &GoldenValue::tau();
            let inner = &GoldenValue::one() + &(&GoldenValue::tau() * &up(one_minus_tau, p - 2));
            &tau_power(-1) * &inner
        }
        Family::H => &g(-7, 3, 2) + &(&g(5, -3, 2) * &up(g(1, -1, 2), p - 5)),
        Family::CM => up(g(115, -51, 2), p),
        Family::CE12 => g(101, -45, 1),
    };
    r.abs()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioCheck {
    pub param: i64,
    pub exact: GoldenValue,
    pub formula: GoldenValue,
    pub equal: bool,
}

/// Compares the ratio of the expanded closed form with the published
/// formula for each parameter, exactly.
pub fn ratio_formula_check(
    family: Family,
    params: impl IntoIterator<Item = i64>,
) -> Result<Vec<RatioCheck>, AnalysisError> {
    params
        .into_iter()
        .map(|param| {
            let spec = FamilySpec::new(family, param)?;
            let poly = family_poly(spec)?;
            let exact = tutte_ratio(&poly, family_n(spec))?.ratio;
            let formula = published_ratio(spec);
            Ok(RatioCheck { param: spec.param, equal: exact == formula, exact, formula })
        })
        .collect()
}
