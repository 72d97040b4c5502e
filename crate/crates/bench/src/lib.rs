//! Shared inputs for the benchmarks.

use golden_chroma::corpus::{apollonian_walk, flip_walk, k4, rng};
use golden_chroma::families::{family_graph, family_poly, Family, FamilySpec};
use golden_chroma::{Graph, IntPoly};

fn spec(f: Family, p: i64) -> FamilySpec {
    FamilySpec::new(f, p).expect("admissible")
}

/// Named graphs for the chromatic engine, roughly in order of cost.
pub fn engine_inputs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = [(Family::B, 12), (Family::TC, 4), (Family::TC, 5), (Family::I, 1)]
        .into_iter()
        .map(|(f, p)| (spec(f, p).to_string(), family_graph(spec(f, p)).expect("graph").0))
        .collect();
    let mut r = rng(7);
    let stacked = apollonian_walk(&k4(), 12, &mut r).pop().expect("walk");
    let flipped = flip_walk(&stacked, 30, &mut r).pop().expect("walk");
    out.push(("stacked16+flips".into(), flipped.graph));
    out
}

/// Named polynomials for root finding and golden-point evaluation.
pub fn poly_inputs() -> Vec<(String, IntPoly)> {
    [(Family::B, 20), (Family::CM, 1), (Family::I, 1), (Family::TC, 6), (Family::I, 10)]
        .into_iter()
        .map(|(f, p)| (spec(f, p).to_string(), family_poly(spec(f, p)).expect("poly")))
        .collect()
}
