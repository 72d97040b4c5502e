//! Ground-state degeneracy `W = lim [P(G, q)]^(1/n)` and entropy
//! `S0 = ln W` of the recursive families, in either order of limits.

use serde::{Deserialize, Serialize};

use crate::arith::{rational_to_string, GoldenValue};
use crate::error::AnalysisError;
use crate::families::{family_form, family_n, ChromaticForm, Family, FamilySpec};

use super::asymptotic::{dominant_term, ln_abs};

/// `Qn`: `q → q_s` after `n → ∞`; `Nq`: `q` fixed first, then `n → ∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LimitOrder {
    Qn,
    Nq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderOutcome {
    Qn,
    Nq,
    BothEqual,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport {
    pub family: Family,
    pub q: GoldenValue,
    pub order: LimitOrder,
    pub w: f64,
    pub w_error: f64,
    pub s0: f64,
    /// `BothEqual` when the two orders agree at this `q`, otherwise the
    /// order that was evaluated.
    pub limit_order: OrderOutcome,
    pub dominant_index: usize,
}

fn check_range(family: Family, q: &GoldenValue, order: LimitOrder) -> Result<(), AnalysisError> {
    let cmp = |k: i64| (q - &GoldenValue::from_int(k)).sign();
    let ok = match family {
        Family::R => cmp(4) >= 0,
        Family::TC => cmp(3) >= 0,
        Family::I => cmp(3) > 0,
        // the dominance rule extends the bipyramid-type formulas down to
        // q = 2, covering the golden point
        Family::B | Family::H => match order {
            LimitOrder::Nq | LimitOrder::Qn => cmp(2) >= 0,
        },
        Family::CM | Family::CE12 => false,
    };
    if ok {
        Ok(())
    } else {
        let q = if q.is_rational() { rational_to_string(q.a()) } else { q.to_string() };
        Err(AnalysisError::OutOfRange { family: family.name(), q })
    }
}

/// `(W, dominant index)` from the dominance rule for one order of limits.
fn dominant_w(form: &ChromaticForm, family: Family, q: &GoldenValue, order: LimitOrder) -> Option<(f64, usize)> {
    let (j, lambda) = match order {
        LimitOrder::Qn => dominant_term(form, q, |c| !c.is_zero()),
        LimitOrder::Nq => dominant_term(form, q, |c| !c.eval_golden(q).is_zero()),
    }?;
    let (alpha, _) = family.vertex_relation();
    let per_vertex = form.terms[j].exp.a as f64 / alpha as f64;
    let w = if lambda.is_zero() { 0.0 } else { (ln_abs(&lambda) * per_vertex).exp() };
    Some((w, j + 1))
}

pub fn family_entropy(family: Family, q: &GoldenValue, order: LimitOrder) -> Result<EntropyReport, AnalysisError> {
    check_range(family, q, order)?;
    let form = family_form(family);
    let (w, dominant_index) = dominant_w(&form, family, q, order).ok_or(AnalysisError::AllCoefficientsVanish)?;
    let other = match order {
        LimitOrder::Qn => LimitOrder::Nq,
        LimitOrder::Nq => LimitOrder::Qn,
    };
    let w_other = dominant_w(&form, family, q, other).map(|x| x.0);
    let limit_order = match (w_other, order) {
        (Some(o), _) if (o - w).abs() <= 1e-14 * w.max(1.0) => OrderOutcome::BothEqual,
        (_, LimitOrder::Qn) => OrderOutcome::Qn,
        (_, LimitOrder::Nq) => OrderOutcome::Nq,
    };
    Ok(EntropyReport {
        family,
        q: q.clone(),
        order,
        w,
        w_error: w * 1e-14,
        s0: w.ln(),
        limit_order,
        dominant_index,
    })
}

/// `P(G_param, q)` straight from the form, without expanding.
pub fn form_value(form: &ChromaticForm, param: i64, q: &GoldenValue) -> Result<GoldenValue, AnalysisError> {
    let mut acc = GoldenValue::zero();
    for t in &form.terms {
        let e = t.exp.at(param);
        if e < 0 {
            return Err(AnalysisError::InvalidParameter(format!("negative exponent at param {param}")));
        }
        acc = &acc + &(&t.c.eval_golden(q) * &t.lambda.eval_golden(q).pow(e as u32));
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalPoint {
    pub param: i64,
    pub n: usize,
    /// `|P(q)|^(1/n)`
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalW {
    pub points: Vec<EmpiricalPoint>,
    /// `|P_k / P_(k-1)|^(1/Δn)` over the last two points, which converges
    /// much faster than the raw sequence.
    pub ratio_limit: Option<f64>,
}

pub fn empirical_w(
    family: Family,
    q: &GoldenValue,
    params: impl IntoIterator<Item = i64>,
) -> Result<EmpiricalW, AnalysisError> {
    let form = family_form(family);
    let mut points = Vec::new();
    let mut logs: Vec<(usize, f64)> = Vec::new();
    for param in params {
        let spec = FamilySpec::new(family, param)?;
        let n = family_n(spec);
        let v = form_value(&form, spec.param, q)?;
        let value = if v.is_zero() {
            0.0
        } else {
            let l = ln_abs(&v);
            logs.push((n, l));
            (l / n as f64).exp()
        };
        points.push(EmpiricalPoint { param: spec.param, n, value });
    }
    let ratio_limit = match logs.as_slice() {
        [.., (n0, l0), (n1, l1)] if n1 != n0 => Some(((l1 - l0) / (*n1 as f64 - *n0 as f64)).exp()),
        _ => None,
    };
    Ok(EmpiricalW { points, ratio_limit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::family_poly;

    fn q(k: i64) -> GoldenValue {
        GoldenValue::from_int(k)
    }

    #[test]
    fn closed_form_values() {
        let i4 = family_entropy(Family::I, &q(4), LimitOrder::Nq).unwrap();
        assert!((i4.w - 1.29155).abs() < 1e-5);
        assert!((i4.w - 10f64.powf(1.0 / 9.0)).abs() < 1e-12);
        let r4 = family_entropy(Family::R, &q(4), LimitOrder::Qn).unwrap();
        assert_eq!(r4.w, 1.0);
        assert_eq!(r4.s0, 0.0);
        let tc3 = family_entropy(Family::TC, &q(3), LimitOrder::Nq).unwrap();
        assert_eq!(tc3.w, 1.0);
        let tc4 = family_entropy(Family::TC, &q(4), LimitOrder::Nq).unwrap();
        assert!((tc4.w - 4f64.powf(1.0 / 3.0)).abs() < 1e-12);
        let b5 = family_entropy(Family::B, &q(5), LimitOrder::Nq).unwrap();
        assert!((b5.w - 3.0).abs() < 1e-12);
        assert_eq!(b5.limit_order, OrderOutcome::BothEqual);
    }

    #[test]
    fn ranges() {
        assert!(family_entropy(Family::R, &q(3), LimitOrder::Nq).is_err());
        assert!(family_entropy(Family::I, &q(3), LimitOrder::Nq).is_err());
        assert!(family_entropy(Family::CM, &q(5), LimitOrder::Nq).is_err());
    }

    #[test]
    fn golden_point_noncommutativity() {
        let g = GoldenValue::golden_point();
        let nq = family_entropy(Family::B, &g, LimitOrder::Nq).unwrap();
        let qn = family_entropy(Family::B, &g, LimitOrder::Qn).unwrap();
        assert!((nq.w - 0.6180339887).abs() < 1e-10);
        assert_eq!(qn.w, 1.0);
        assert_eq!(qn.dominant_index, 3);
        assert_eq!(nq.limit_order, OrderOutcome::Nq);
    }

    #[test]
    fn form_value_matches_expansion() {
        let g = GoldenValue::golden_point();
        for (f, p) in [(Family::B, 9), (Family::H, 11), (Family::TC, 4)] {
            let spec = FamilySpec::new(f, p).unwrap();
            let direct = form_value(&family_form(f), p, &g).unwrap();
            assert_eq!(direct, family_poly(spec).unwrap().eval_golden(&g));
        }
    }

    #[test]
    fn empirical_sequences() {
        let r = empirical_w(Family::R, &q(5), 10..=50).unwrap();
        assert!((r.ratio_limit.unwrap() - 2.0).abs() < 1e-12);
        let tc = empirical_w(Family::TC, &q(4), [30, 60, 90]).unwrap();
        assert!((tc.ratio_limit.unwrap() - 4f64.powf(1.0 / 3.0)).abs() < 1e-9);
        let b = empirical_w(Family::B, &q(4), 10..=100).unwrap();
        assert!((b.points.last().unwrap().value - 2.0).abs() < 0.02);
        assert!((b.ratio_limit.unwrap() - 2.0).abs() < 1e-9);
    }
}
