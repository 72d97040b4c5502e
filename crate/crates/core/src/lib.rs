//! Exact chromatic polynomials of planar triangulations and their behaviour
//! at the golden point `q = τ + 1`.
//!
//! The crate is organised bottom-up: [`arith`] (integer polynomials and the
//! field Q(√5)), [`graph`] (simple graphs and triangulation certificates),
//! [`chroma`] (the deletion–contraction engine and brute-force oracles),
//! [`families`] (recursive families and their closed forms), and
//! [`analysis`] (ratios, roots, intervals, loci and entropy).

pub mod analysis;
pub mod arith;
pub mod chroma;
pub mod corpus;
pub mod error;
pub mod families;
pub mod graph;

pub use arith::{tau_power, GoldenApprox, GoldenValue, IntPoly, Rational};
pub use chroma::{chromatic_brute, chromatic_poly, ChromaticEngine};
pub use error::{AnalysisError, ArithError, ChromaError, Error, FamilyError, GraphError, Result};
pub use families::{family_form, family_graph, family_poly, ChromaticForm, Family, FamilySpec};
pub use graph::{FaceCertificate, Graph};
