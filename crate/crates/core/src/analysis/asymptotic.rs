//! Per-vertex asymptotic constants `a = |λ_dom(τ+1)|^(1/α) / (τ-1)`.

use serde::{Deserialize, Serialize};

use crate::arith::{tau_power, GoldenValue, IntPoly};
use crate::error::AnalysisError;
use crate::families::ChromaticForm;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticReport {
    pub a: f64,
    /// Absolute error bound on `a`.
    pub a_error: f64,
    pub lambda_dom_at_golden: GoldenValue,
    pub alpha: i64,
    /// 1-based index of the dominant term.
    pub dominant_index: usize,
}

/// Index (0-based) of the largest `|λ_j(q)|` among terms admitted by
/// `keep`; ties go to the lowest index.
pub(crate) fn dominant_term(
    form: &ChromaticForm,
    q: &GoldenValue,
    keep: impl Fn(&IntPoly) -> bool,
) -> Option<(usize, GoldenValue)> {
    let mut best: Option<(usize, GoldenValue)> = None;
    for (j, t) in form.terms.iter().enumerate() {
        if !keep(&t.c) {
            continue;
        }
        let m = t.lambda.eval_golden(q).abs();
        if best.as_ref().is_none_or(|(_, b)| m > *b) {
            best = Some((j, m));
        }
    }
    best
}

/// `ln |x|` for a nonzero golden value, good to about 1e-15 relative.
pub(crate) fn ln_abs(x: &GoldenValue) -> f64 {
    let ap = x.approx(80);
    let v = ap.value;
    (crate::arith::bigint_log2(v.numer()) - crate::arith::bigint_log2(v.denom())) * std::f64::consts::LN_2
}

/// The dominant term is chosen among those whose coefficient does not
/// vanish at `τ+1`, i.e. `q` is fixed before `n` grows.
pub fn asymptotic_constant(form: &ChromaticForm, alpha: i64) -> Result<AsymptoticReport, AnalysisError> {
    if alpha < 1 {
        return Err(AnalysisError::InvalidParameter(format!("alpha must be >= 1, got {alpha}")));
    }
    if form.terms.is_empty() {
        return Err(AnalysisError::InvalidParameter("empty chromatic form".into()));
    }
    let q = GoldenValue::golden_point();
    let (j, lambda) =
        dominant_term(form, &q, |c| !c.eval_golden(&q).is_zero()).ok_or(AnalysisError::AllCoefficientsVanish)?;
    let a = if lambda.is_zero() {
        0.0
    } else {
        (ln_abs(&lambda) / alpha as f64 - ln_abs(&tau_power(-1))).exp()
    };
    Ok(AsymptoticReport { a, a_error: a * 1e-14, lambda_dom_at_golden: lambda, alpha, dominant_index: j + 1 })
}
