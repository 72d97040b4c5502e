//! Exact chromatic polynomials: a memoised deletion-contraction engine,
//! two independent brute-force oracles, and the clique-gluing rule.

mod brute;
mod engine;

pub use brute::{chromatic_brute, chromatic_by_colorings, chromatic_by_subgraphs, BRUTE_MAX_VERTICES};
pub use engine::{ChromaticEngine, EngineStats, DEFAULT_BUDGET, ENGINE_MAX_VERTICES};

use crate::arith::IntPoly;
use crate::error::{ArithError, ChromaError};
use crate::graph::Graph;

/// Chromatic polynomial with the default engine settings.
pub fn chromatic_poly(g: &Graph) -> Result<IntPoly, ChromaError> {
    ChromaticEngine::new().chromatic_poly(g)
}

/// Chromatic polynomial of `G ∪ H` when `G ∩ H = K_p`.
pub fn chromatic_glue(pg: &IntPoly, ph: &IntPoly, p: usize) -> Result<IntPoly, ArithError> {
    (pg * ph).div_exact(&IntPoly::falling_factorial(p))
}

/// Structural facts every chromatic polynomial of a graph with `n`
/// vertices and `e` edges must satisfy. Returns the first violated one.
pub fn check_chromatic_invariants(p: &IntPoly, n: usize, e: usize, has_triangle: bool) -> Result<(), String> {
    use num_bigint::BigInt;
    use num_traits::Zero;
    if p.degree() != Some(n) {
        return Err(format!("degree {:?} != n = {n}", p.degree()));
    }
    if !p.is_monic() {
        return Err("not monic".into());
    }
    if n >= 1 && p.coeff(n - 1) != BigInt::from(-(e as i64)) {
        return Err(format!("coefficient of q^(n-1) is {} not -{e}", p.coeff(n - 1)));
    }
    if !p.has_alternating_signs() {
        return Err("coefficients do not alternate".into());
    }
    let at = |x: i64| p.eval_int(&BigInt::from(x));
    if n >= 1 && !at(0).is_zero() {
        return Err("P(0) != 0".into());
    }
    if e >= 1 && !at(1).is_zero() {
        return Err("P(1) != 0".into());
    }
    if has_triangle && !at(2).is_zero() {
        return Err("P(2) != 0 despite a triangle".into());
    }
    Ok(())
}
