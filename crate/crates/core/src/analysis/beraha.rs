//! Tutte–Beraha numbers `q_r = 4 cos²(π/r)`.

use serde::{Deserialize, Serialize};

use crate::arith::GoldenValue;
use crate::error::AnalysisError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BerahaNumber {
    pub r: u32,
    pub value: f64,
    /// Exact value when it lies in Q(√5).
    pub exact: Option<GoldenValue>,
}

pub fn beraha(r: u32) -> Result<BerahaNumber, AnalysisError> {
    if r < 2 {
        return Err(AnalysisError::InvalidParameter(format!("beraha index must be >= 2, got {r}")));
    }
    let g = |a, b, d| Some(GoldenValue::from_ints(a, b, d));
    let exact = match r {
        2 => g(0, 0, 1),
        3 => g(1, 0, 1),
        4 => g(2, 0, 1),
        5 => Some(GoldenValue::golden_point()),
        6 => g(3, 0, 1),
        10 => g(5, 1, 2),
        _ => None,
    };
    // 2 + 2cos(2π/r) avoids squaring a rounded cosine
    let value = match &exact {
        Some(x) => x.to_f64(),
        None => 2.0 + 2.0 * (std::f64::consts::TAU / r as f64).cos(),
    };
    Ok(BerahaNumber { r, value, exact })
}
