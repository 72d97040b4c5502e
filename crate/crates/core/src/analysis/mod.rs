//! Everything evaluated at and around the golden point `q = τ+1`.

mod aberth;
pub mod asymptotic;
pub mod beraha;
pub mod entropy;
pub mod intervals;
pub mod locus;
pub mod ratio;
pub mod roots;
pub mod sturm;

pub use asymptotic::{asymptotic_constant, AsymptoticReport};
pub use beraha::{beraha, BerahaNumber};
pub use entropy::{empirical_w, family_entropy, form_value, EmpiricalPoint, EmpiricalW, EntropyReport, LimitOrder, OrderOutcome};
pub use intervals::{interval_checks, q_m, rho_tc, IntervalReport};
pub use locus::{b_locus_pair, b_locus_scan, locus_csv, Grid, LocusPoint, LocusScan};
pub use ratio::{published_ratio, ratio_formula_check, tutte_bound, tutte_ratio, RatioCheck, RatioReport};
pub use roots::{
    all_roots, real_roots, sig10, zeros_csv, ComplexRoot, NearestZero, RealRoot, Realness, RootReport, DEFAULT_TOL,
    GOLDEN_POINT_F64, TIE_TOL,
};
pub use sturm::{cauchy_bound, isolate_real_roots, AlgebraicReal, Endpoint, SturmChain};
